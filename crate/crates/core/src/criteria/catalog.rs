//! The fixed catalog of numerical sufficient conditions on `(d, g, c)`.
//!
//! Every check clears denominators and runs in `i128`, so equality
//! boundaries are decided exactly.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::invariants::ClassTriple;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Property {
    Nonempty,
    LocallyRegular,
    NodalCuspidalGeneric,
    Irreducible,
}

impl Property {
    pub const ALL: [Property; 4] = [
        Property::Nonempty,
        Property::LocallyRegular,
        Property::NodalCuspidalGeneric,
        Property::Irreducible,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Property::Nonempty => "NONEMPTY",
            Property::LocallyRegular => "LOCALLY_REGULAR",
            Property::NodalCuspidalGeneric => "NODAL_CUSPIDAL_GENERIC",
            Property::Irreducible => "IRREDUCIBLE",
        }
    }

    /// Properties transported by the duality isomorphism `V(d,g,c) = V(c,g,d)`.
    pub fn closed_under_duality(self) -> bool {
        !matches!(self, Property::NodalCuspidalGeneric)
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl Serialize for Property {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

/// How a criterion was met: by an inequality on the triple itself or on
/// the dual triple `(c, g, d)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Route {
    Direct,
    ViaDual,
}

impl Route {
    pub fn tag(self) -> &'static str {
        match self {
            Route::Direct => "direct",
            Route::ViaDual => "via_dual",
        }
    }
}

impl Serialize for Route {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum CriterionId {
    NeL,
    NeQ,
    NeQd2,
    LrSev,
    LrL,
    LrQ,
    LrQd,
    NcDh,
    NcSh,
    NcQ,
    NcD10,
    IrrL,
    IrrDl,
    IrrQ,
    IrrQd,
}

impl CriterionId {
    /// Catalog order, which is also the order certificates are listed in.
    pub const ALL: [CriterionId; 15] = [
        CriterionId::NeL,
        CriterionId::NeQ,
        CriterionId::NeQd2,
        CriterionId::LrSev,
        CriterionId::LrL,
        CriterionId::LrQ,
        CriterionId::LrQd,
        CriterionId::NcDh,
        CriterionId::NcSh,
        CriterionId::NcQ,
        CriterionId::NcD10,
        CriterionId::IrrL,
        CriterionId::IrrDl,
        CriterionId::IrrQ,
        CriterionId::IrrQd,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            CriterionId::NeL => "NE-L",
            CriterionId::NeQ => "NE-Q",
            CriterionId::NeQd2 => "NE-QD2",
            CriterionId::LrSev => "LR-SEV",
            CriterionId::LrL => "LR-L",
            CriterionId::LrQ => "LR-Q",
            CriterionId::LrQd => "LR-QD",
            CriterionId::NcDh => "NC-DH",
            CriterionId::NcSh => "NC-SH",
            CriterionId::NcQ => "NC-Q",
            CriterionId::NcD10 => "NC-D10",
            CriterionId::IrrL => "IRR-L",
            CriterionId::IrrDl => "IRR-DL",
            CriterionId::IrrQ => "IRR-Q",
            CriterionId::IrrQd => "IRR-QD",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        CriterionId::ALL.into_iter().find(|id| id.tag() == tag)
    }

    pub fn property(self) -> Property {
        use CriterionId::*;
        match self {
            NeL | NeQ | NeQd2 => Property::Nonempty,
            LrSev | LrL | LrQ | LrQd => Property::LocallyRegular,
            NcDh | NcSh | NcQ | NcD10 => Property::NodalCuspidalGeneric,
            IrrL | IrrDl | IrrQ | IrrQd => Property::Irreducible,
        }
    }

    /// Whether the criterion assumes the family is already known to be
    /// nonempty.
    pub fn conditional_on_nonempty(self) -> bool {
        !matches!(
            self,
            CriterionId::NeL | CriterionId::NeQ | CriterionId::NeQd2 | CriterionId::LrSev
        )
    }

    /// Criteria whose statement already contains the dualized inequality;
    /// re-evaluating them on the dual triple adds nothing.
    pub fn contains_dual_form(self) -> bool {
        matches!(
            self,
            CriterionId::NeQd2 | CriterionId::LrQd | CriterionId::IrrDl | CriterionId::IrrQd
        )
    }

    /// The criterion rests on a cited result rather than a numerical
    /// argument carried out here.
    pub fn externally_sourced(self) -> bool {
        matches!(self, CriterionId::NcD10)
    }

    pub fn statement(self) -> &'static str {
        use CriterionId::*;
        match self {
            NeL => "d,c >= 2 and c >= 2g + floor((d+1)/2) + 1",
            NeQ => "d >= 3, delta,kappa > 0, 2delta <= kappa <= 3delta, delta <= (d-1)(d-2)/2, and for d >= 5 kappa - delta <= (d^2-4d+6)/2",
            NeQd2 => "g <= (d-1)(d-2)/2 and (c >= g + (5d-8)/2 or d >= g + (5c-8)/2)",
            LrSev => "c = 2d - 2 + 2g",
            LrL => "d,c >= 2 and c - 2g + d >= -1",
            LrQ => "d >= 3 and 5kappa - 6delta <= (d+3)^e",
            LrQd => "5c >= 6g + d^2 - 2d - 15 or 5d >= 6g + c^2 - 2c - 15 (kappa-form with exponent e)",
            NcDh => "c >= 2g - 1",
            NcSh => "c >= 2g - d + 2",
            NcQ => "d >= 3 and 5kappa - 6delta <= d^2 + 6d - 3",
            NcD10 => "d <= 10",
            IrrL => "d,c >= 2 and (c >= 2g + 2d - 5 or c >= 3g + (3d-5)/2 or c >= g + (d^2-2d-1)/2)",
            IrrDl => "d,c >= 2 and (d >= 2g + 2c - 5 or d >= 3g + (3c-5)/2 or d >= g + (c^2-2c-1)/2)",
            IrrQ => "d >= 3 and (11/2)kappa + (3/2)delta < d^2",
            IrrQd => "11c + 3g > (21d^2-31d+6)/2 or 11d + 3g > (21c^2-31c+6)/2",
        }
    }

    /// Short description of where the condition comes from.
    pub fn basis(self) -> &'static str {
        use CriterionId::*;
        match self {
            NeL => "construction of rational cuspidal curves with maximal cusp count, then deformation",
            NeQ => "existence of nodal-cuspidal curves with n + 2k <= (d^2-4d+6)/2; classical for d <= 4",
            NeQd2 => "quadratic existence bound and its image under plane duality",
            LrSev => "Severi varieties of nodal curves",
            LrL => "h1-vanishing on the normalization (Diaz-Harris)",
            LrQ => "h1-vanishing via the gamma-invariant bound sum kappa_z^2/delta_z",
            LrQd => "quadratic regularity bound and its image under plane duality",
            NcDh => "Diaz-Harris: generic member has only nodes and cusps",
            NcSh => "improved bound for nodal-cuspidal generic members",
            NcQ => "quadratic bound for nodal-cuspidal generic members",
            NcD10 => "cited result for d <= 10 (externally sourced, taken at face value)",
            IrrL => "irreducibility of families with few cusps (k <= 3, k <= (d+1)/2 - g, 2n + 4k < 3d)",
            IrrDl => "linear irreducibility bounds applied to the dual family",
            IrrQ => "irreducibility when 25n/2 + 18k < d^2",
            IrrQd => "quadratic irreducibility bound and its image under plane duality",
        }
    }
}

impl fmt::Display for CriterionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl Serialize for CriterionId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

/// Integer view of a triple with the derived `δ`, `κ` (possibly negative).
#[derive(Clone, Copy, Debug)]
pub struct Numbers {
    pub d: i128,
    pub g: i128,
    pub c: i128,
    pub delta: i128,
    pub kappa: i128,
}

impl Numbers {
    pub fn of(t: ClassTriple) -> Self {
        let (d, g, c) = (t.d as i128, t.g as i128, t.c as i128);
        Numbers {
            d,
            g,
            c,
            delta: (d - 1) * (d - 2) / 2 - g,
            kappa: d * (d - 1) - c,
        }
    }

    pub fn dual(self) -> Self {
        Numbers::of_raw(self.c, self.g, self.d)
    }

    fn of_raw(d: i128, g: i128, c: i128) -> Self {
        Numbers {
            d,
            g,
            c,
            delta: (d - 1) * (d - 2) / 2 - g,
            kappa: d * (d - 1) - c,
        }
    }

    /// The region `2δ <= κ <= 3δ`, `0 <= δ <= (d-1)(d-2)/2`.
    pub fn admissible(self) -> bool {
        self.d >= 1
            && self.delta >= 0
            && 2 * self.delta <= self.kappa
            && self.kappa <= 3 * self.delta
            && self.delta <= (self.d - 1) * (self.d - 2) / 2
    }
}

/// Parameters that change what some criteria assert.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct EvalOptions {
    /// Exponent `e` in `5κ - 6δ <= (d+3)^e`; 2 or 3.
    pub lrq_exponent: u32,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions { lrq_exponent: 2 }
    }
}

fn pow(b: i128, e: u32) -> i128 {
    b.pow(e)
}

/// Whether `id` holds for `t`, and by which route.
pub fn check(id: CriterionId, t: ClassTriple, opts: EvalOptions) -> Option<Route> {
    check_numbers(id, Numbers::of(t), opts)
}

pub fn check_numbers(id: CriterionId, x: Numbers, opts: EvalOptions) -> Option<Route> {
    use CriterionId::*;
    let Numbers { d, g, c, delta, kappa } = x;
    let both_ge2 = d >= 2 && c >= 2;
    let direct = |b: bool| b.then_some(Route::Direct);
    let either = |primal: bool, dual: bool| {
        if primal {
            Some(Route::Direct)
        } else if dual {
            Some(Route::ViaDual)
        } else {
            None
        }
    };
    let e = opts.lrq_exponent;
    match id {
        NeL => direct(both_ge2 && c >= 2 * g + (d + 1).div_euclid(2) + 1),
        NeQ => direct(
            d >= 3
                && delta > 0
                && kappa > 0
                && x.admissible()
                && (d <= 4 || 2 * (kappa - delta) <= d * d - 4 * d + 6),
        ),
        NeQd2 => {
            if g > (d - 1) * (d - 2) / 2 {
                return None;
            }
            either(2 * c >= 2 * g + 5 * d - 8, 2 * d >= 2 * g + 5 * c - 8)
        }
        LrSev => direct(c == 2 * d - 2 + 2 * g),
        LrL => direct(both_ge2 && c - 2 * g + d >= -1),
        LrQ => direct(d >= 3 && 5 * kappa - 6 * delta <= pow(d + 3, e)),
        LrQd => {
            let y = x.dual();
            either(
                5 * kappa - 6 * delta <= pow(d + 3, e),
                5 * y.kappa - 6 * y.delta <= pow(c + 3, e),
            )
        }
        NcDh => direct(c >= 2 * g - 1),
        NcSh => direct(c >= 2 * g - d + 2),
        NcQ => direct(d >= 3 && 5 * kappa - 6 * delta <= d * d + 6 * d - 3),
        NcD10 => direct((1..=10).contains(&d)),
        IrrL => direct(both_ge2 && linear_irreducibility(d, g, c)),
        IrrDl => (both_ge2 && linear_irreducibility(c, g, d)).then_some(Route::ViaDual),
        IrrQ => direct(d >= 3 && 11 * kappa + 3 * delta < 2 * d * d),
        IrrQd => either(
            2 * (11 * c + 3 * g) > 21 * d * d - 31 * d + 6,
            2 * (11 * d + 3 * g) > 21 * c * c - 31 * c + 6,
        ),
    }
}

/// The three disjuncts of the linear irreducibility bound in `(d, g, c)`.
fn linear_irreducibility(d: i128, g: i128, c: i128) -> bool {
    linear_irreducibility_disjuncts(d, g, c).iter().any(|&b| b)
}

pub fn linear_irreducibility_disjuncts(d: i128, g: i128, c: i128) -> [bool; 3] {
    [
        c >= 2 * g + 2 * d - 5,
        2 * c >= 6 * g + 3 * d - 5,
        2 * c >= 2 * g + d * d - 2 * d - 1,
    ]
}

/// Alternative formulations of catalog inequalities, kept separate from
/// [`check`] so the two can be compared.
pub mod forms {
    use super::Numbers;

    /// `κ - 2δ <= d + floor(d/2) - 3`
    pub fn ne_l_kappa(x: Numbers) -> bool {
        x.kappa - 2 * x.delta <= x.d + x.d.div_euclid(2) - 3
    }

    pub fn ne_l_c(x: Numbers) -> bool {
        x.c >= 2 * x.g + (x.d + 1).div_euclid(2) + 1
    }

    /// `κ - 2δ <= 3d - 1`
    pub fn lr_l_kappa(x: Numbers) -> bool {
        x.kappa - 2 * x.delta <= 3 * x.d - 1
    }

    pub fn lr_l_c(x: Numbers) -> bool {
        x.c - 2 * x.g + x.d >= -1
    }

    /// `κ - 2δ <= 3d - 4`
    pub fn nc_sh_kappa(x: Numbers) -> bool {
        x.kappa - 2 * x.delta <= 3 * x.d - 4
    }

    pub fn nc_sh_c(x: Numbers) -> bool {
        x.c >= 2 * x.g - x.d + 2
    }

    /// Linear irreducibility disjuncts in `δ, κ`: `κ - 2δ <= 3`,
    /// `3δ - κ >= (d^2-4d+1)/2`, `κ - δ <= (3d-1)/2`.
    pub fn irr_l_kappa(x: Numbers) -> [bool; 3] {
        let d = x.d;
        [
            x.kappa - 2 * x.delta <= 3,
            2 * (3 * x.delta - x.kappa) >= d * d - 4 * d + 1,
            2 * (x.kappa - x.delta) <= 3 * d - 1,
        ]
    }

    pub fn irr_l_c(x: Numbers) -> [bool; 3] {
        super::linear_irreducibility_disjuncts(x.d, x.g, x.c)
    }

    /// Dual linear irreducibility disjuncts in `(d, g, c)`.
    pub fn irr_dl_c(x: Numbers) -> [bool; 3] {
        super::linear_irreducibility_disjuncts(x.c, x.g, x.d)
    }

    /// The same disjuncts in nodes and cusps:
    /// `3n + 4k >= (3d^2-6d-3)/2`, `4n + 5k >= (6d^2-14d+1)/3`,
    /// `n + k >= (d^2 - 5d + (d^2-d-2n-3k-1)^2)/2`.
    pub fn irr_dl_nk(d: i128, n: i128, k: i128) -> [bool; 3] {
        let m = d * d - d - 2 * n - 3 * k - 1;
        [
            2 * (3 * n + 4 * k) >= 3 * d * d - 6 * d - 3,
            3 * (4 * n + 5 * k) >= 6 * d * d - 14 * d + 1,
            2 * (n + k) >= d * d - 5 * d + m * m,
        ]
    }

    /// Quadratic nonemptiness: `κ - δ <= (d^2-4d+6)/2` and its c-form
    /// `c >= g + (5d-8)/2`.
    pub fn ne_q_kappa(x: Numbers) -> bool {
        2 * (x.kappa - x.delta) <= x.d * x.d - 4 * x.d + 6
    }

    pub fn ne_q_c(x: Numbers) -> bool {
        2 * x.c >= 2 * x.g + 5 * x.d - 8
    }

    /// `5κ - 6δ <= (d+3)^2` and `5c >= 6g + d^2 - 2d - 15`.
    pub fn lr_q_kappa(x: Numbers) -> bool {
        5 * x.kappa - 6 * x.delta <= (x.d + 3) * (x.d + 3)
    }

    pub fn lr_q_c(x: Numbers) -> bool {
        5 * x.c >= 6 * x.g + x.d * x.d - 2 * x.d - 15
    }

    /// `11κ + 3δ < 2d^2` and `2(11c + 3g) > 21d^2 - 31d + 6`.
    pub fn irr_q_kappa(x: Numbers) -> bool {
        11 * x.kappa + 3 * x.delta < 2 * x.d * x.d
    }

    pub fn irr_q_c(x: Numbers) -> bool {
        2 * (11 * x.c + 3 * x.g) > 21 * x.d * x.d - 31 * x.d + 6
    }
}
