//! Numerical invariants of equiclassical families: the three equivalent
//! parameterizations `(d, g, c)`, `(d, δ, κ)` and `(d, n, k)`, duality on
//! triples and the admissibility region.

use std::fmt;

use crate::algebra::Rational;
use crate::error::{Error, Result};

/// Degree, geometric genus and class.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct ClassTriple {
    pub d: i64,
    pub g: i64,
    pub c: i64,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct DeltaKappa {
    pub d: i64,
    pub delta: i64,
    pub kappa: i64,
}

/// Degree with (virtual) numbers of nodes and cusps.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct NodalCuspidal {
    pub d: i64,
    pub nodes: i64,
    pub cusps: i64,
}

impl ClassTriple {
    pub const fn new(d: i64, g: i64, c: i64) -> Self {
        ClassTriple { d, g, c }
    }
}

impl DeltaKappa {
    pub const fn new(d: i64, delta: i64, kappa: i64) -> Self {
        DeltaKappa { d, delta, kappa }
    }
}

impl NodalCuspidal {
    pub const fn new(d: i64, nodes: i64, cusps: i64) -> Self {
        NodalCuspidal { d, nodes, cusps }
    }
}

impl fmt::Display for ClassTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.d, self.g, self.c)
    }
}

/// Arithmetic genus `(d-1)(d-2)/2` of a plane curve of degree `d`.
pub fn arithmetic_genus(d: i64) -> i64 {
    (d - 1) * (d - 2) / 2
}

/// `δ` and `κ` of a triple, allowed to be negative.
pub fn raw_delta_kappa(t: ClassTriple) -> (i64, i64) {
    (arithmetic_genus(t.d) - t.g, t.d * (t.d - 1) - t.c)
}

pub fn to_delta_kappa(t: ClassTriple) -> Result<DeltaKappa> {
    let (delta, kappa) = raw_delta_kappa(t);
    if delta < 0 || kappa < 0 {
        return Err(Error::NotAdmissible(format!(
            "{t} gives delta = {delta}, kappa = {kappa}"
        )));
    }
    Ok(DeltaKappa { d: t.d, delta, kappa })
}

pub fn from_delta_kappa(dk: DeltaKappa) -> ClassTriple {
    ClassTriple {
        d: dk.d,
        g: arithmetic_genus(dk.d) - dk.delta,
        c: dk.d * (dk.d - 1) - dk.kappa,
    }
}

pub fn from_nodal_cuspidal(nc: NodalCuspidal) -> DeltaKappa {
    DeltaKappa {
        d: nc.d,
        delta: nc.nodes + nc.cusps,
        kappa: 2 * nc.nodes + 3 * nc.cusps,
    }
}

/// Virtual cusps `κ - 2δ` and nodes `3δ - κ`.
pub fn virtual_counts(dk: DeltaKappa) -> Result<NodalCuspidal> {
    if dk.kappa < 2 * dk.delta || dk.kappa > 3 * dk.delta {
        return Err(Error::NotAdmissible(format!(
            "need 2*delta <= kappa <= 3*delta, got delta = {}, kappa = {}",
            dk.delta, dk.kappa
        )));
    }
    Ok(NodalCuspidal {
        d: dk.d,
        nodes: 3 * dk.delta - dk.kappa,
        cusps: dk.kappa - 2 * dk.delta,
    })
}

pub fn dual_triple(t: ClassTriple) -> ClassTriple {
    ClassTriple { d: t.c, g: t.g, c: t.d }
}

pub fn is_admissible(dk: DeltaKappa) -> bool {
    dk.d >= 1
        && dk.delta >= 0
        && 2 * dk.delta <= dk.kappa
        && dk.kappa <= 3 * dk.delta
        && dk.delta <= arithmetic_genus(dk.d)
}

pub fn triple_is_admissible(t: ClassTriple) -> bool {
    to_delta_kappa(t).is_ok_and(is_admissible)
}

pub fn expected_dim(t: ClassTriple) -> i64 {
    t.d - t.g + t.c + 1
}

/// `κ_z² / δ_z` for a single singular point.
pub fn gamma_point(kappa_z: i64, delta_z: i64) -> Result<Rational> {
    if delta_z < 1 || kappa_z < 2 * delta_z || kappa_z > 3 * delta_z {
        return Err(Error::NotAdmissible(format!(
            "gamma needs delta >= 1 and 2*delta <= kappa <= 3*delta, got ({kappa_z}, {delta_z})"
        )));
    }
    Ok(Rational::new(
        (kappa_z as i128 * kappa_z as i128).into(),
        delta_z.into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn conversions() {
        assert_eq!(to_delta_kappa(ClassTriple::new(3, 0, 4)).unwrap(), DeltaKappa::new(3, 1, 2));
        assert_eq!(to_delta_kappa(ClassTriple::new(3, 1, 6)).unwrap(), DeltaKappa::new(3, 0, 0));
        assert_eq!(to_delta_kappa(ClassTriple::new(7, 0, 6)).unwrap(), DeltaKappa::new(7, 15, 36));
        assert!(to_delta_kappa(ClassTriple::new(3, 5, 1)).is_err());
        assert_eq!(from_nodal_cuspidal(NodalCuspidal::new(3, 1, 0)), DeltaKappa::new(3, 1, 2));
        assert_eq!(from_nodal_cuspidal(NodalCuspidal::new(3, 0, 1)), DeltaKappa::new(3, 1, 3));
        assert_eq!(from_nodal_cuspidal(NodalCuspidal::new(7, 9, 6)), DeltaKappa::new(7, 15, 36));
    }

    #[test]
    fn virtual_node_and_cusp_counts() {
        assert_eq!(virtual_counts(DeltaKappa::new(3, 1, 3)).unwrap(), NodalCuspidal::new(3, 0, 1));
        assert_eq!(virtual_counts(DeltaKappa::new(7, 15, 36)).unwrap(), NodalCuspidal::new(7, 9, 6));
        assert_eq!(virtual_counts(DeltaKappa::new(12, 25, 75)).unwrap(), NodalCuspidal::new(12, 0, 25));
        assert!(virtual_counts(DeltaKappa::new(3, 1, 4)).is_err());
    }

    #[test]
    fn duality_on_triples() {
        assert_eq!(dual_triple(ClassTriple::new(3, 0, 3)), ClassTriple::new(3, 0, 3));
        let nodal_dual = dual_triple(ClassTriple::new(3, 0, 4));
        assert_eq!(nodal_dual, ClassTriple::new(4, 0, 3));
        let dk = to_delta_kappa(nodal_dual).unwrap();
        assert_eq!(virtual_counts(dk).unwrap(), NodalCuspidal::new(4, 0, 3));
        let dk = to_delta_kappa(dual_triple(ClassTriple::new(7, 0, 6))).unwrap();
        assert_eq!((dk.delta, dk.kappa), (10, 23));
        assert_eq!(virtual_counts(dk).unwrap(), NodalCuspidal::new(6, 7, 3));
    }

    #[test]
    fn admissibility_and_dimension() {
        assert!(is_admissible(DeltaKappa::new(3, 1, 3)));
        assert!(!is_admissible(DeltaKappa::new(3, 1, 4)));
        assert!(!is_admissible(DeltaKappa::new(5, 7, 14)));
        assert!(is_admissible(DeltaKappa::new(3, 0, 0)));
        assert_eq!(expected_dim(ClassTriple::new(3, 0, 4)), 8);
        assert_eq!(expected_dim(ClassTriple::new(3, 0, 4)), 3 * 3 + 0 - 1);
        assert_eq!(expected_dim(ClassTriple::new(3, 0, 3)), 7);
        assert_eq!(expected_dim(ClassTriple::new(7, 0, 6)), 14);
    }

    #[test]
    fn gamma_values() {
        assert_eq!(gamma_point(2, 1).unwrap(), rat(4));
        assert_eq!(gamma_point(3, 1).unwrap(), rat(9));
        let g = gamma_point(36, 15).unwrap();
        assert_eq!(g, Rational::new(432.into(), 5.into()));
        assert!(g <= rat(5 * 36 - 6 * 15));
        assert!(gamma_point(1, 1).is_err());
        assert!(gamma_point(0, 0).is_err());
    }
}
