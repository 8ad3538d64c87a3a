//! Rational plane curves: Plücker numbers and the implicit equation.

use serde::Serialize;

use super::ramification::total_ramification;
use super::{degree_sequence, ParamCurve};
use crate::algebra::det::rational_rank;
use crate::algebra::resultant::resultant;
use crate::algebra::{rat, BinaryForm, MPoly, Poly, Rational, Ring};
use crate::error::{Error, Result};
use crate::invariants::ClassTriple;
use crate::serde_str;

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PlaneProfile {
    #[serde(with = "serde_str::int")]
    pub d: i64,
    /// Class, the degree of the tangent-line curve.
    #[serde(with = "serde_str::int")]
    pub c: i64,
    #[serde(with = "serde_str::int")]
    pub delta: i64,
    #[serde(with = "serde_str::int")]
    pub kappa: i64,
    #[serde(with = "serde_str::int")]
    pub nodes: i64,
    #[serde(with = "serde_str::int")]
    pub cusps: i64,
    #[serde(with = "serde_str::int")]
    pub beta0: i64,
    #[serde(with = "serde_str::triple")]
    pub triple: ClassTriple,
}

fn require_plane(c: &ParamCurve) -> Result<()> {
    if c.ambient_dim() != 2 {
        return Err(Error::DimensionMismatch(format!(
            "plane curve expected, got ambient dimension {}",
            c.ambient_dim()
        )));
    }
    Ok(())
}

/// Genus-zero Plücker data of a (properly parametrized) plane curve.
pub fn plane_profile(c: &ParamCurve) -> Result<PlaneProfile> {
    require_plane(c)?;
    let d = c.degree() as i64;
    let class = degree_sequence(c)?[1] as i64;
    let delta = (d - 1) * (d - 2) / 2;
    let kappa = d * (d - 1) - class;
    Ok(PlaneProfile {
        d,
        c: class,
        delta,
        kappa,
        nodes: 3 * delta - kappa,
        cusps: kappa - 2 * delta,
        beta0: total_ramification(c)?[0],
        triple: ClassTriple::new(d, 0, class),
    })
}

fn monomials(vars: usize, degree: u32) -> Vec<Vec<u32>> {
    if vars == 1 {
        return vec![vec![degree]];
    }
    (0..=degree)
        .rev()
        .flat_map(|a| {
            monomials(vars - 1, degree - a).into_iter().map(move |mut rest| {
                rest.insert(0, a);
                rest
            })
        })
        .collect()
}

/// Smallest `e` such that some nonzero form of degree `e` in `x0, x1, x2`
/// vanishes on the image. For a plane curve this is the degree of the image,
/// which equals `d` exactly when the parametrization is proper.
pub fn minimal_annihilator_degree(c: &ParamCurve) -> Result<usize> {
    require_plane(c)?;
    let forms = c.coords().entries();
    for e in 1..=c.degree() as u32 {
        let monos = monomials(3, e);
        let rows = monos
            .iter()
            .map(|m| {
                let f = MPoly::from_terms([(m.clone(), rat(1))]).eval_forms(forms)?;
                Ok(f.coeffs().to_vec())
            })
            .collect::<Result<Vec<Vec<Rational>>>>()?;
        if rational_rank(rows) < monos.len() {
            return Ok(e as usize);
        }
    }
    Err(Error::InternalInconsistency(format!(
        "no annihilating form of degree <= {}",
        c.degree()
    )))
}

/// `x_a X_b(t) - x_b X_a(t)` with coefficients in `Q[x0, x1, x2]`.
fn cross_relation(x: &[BinaryForm], a: usize, b: usize) -> Poly<MPoly> {
    let xa = MPoly::var(a);
    let xb = MPoly::var(b);
    let pa = x[a].affine();
    let pb = x[b].affine();
    let len = x[a].degree() + 1;
    Poly::new(
        (0..len)
            .map(|j| {
                let lhs = xa.scale(&pb.coeff(j));
                let rhs = xb.scale(&pa.coeff(j));
                lhs.minus(&rhs)
            })
            .collect(),
    )
}

/// Implicit equation `F(x0, x1, x2)` of the image, primitive over `Z` with
/// positive leading lex coefficient.
pub fn implicitize(c: &ParamCurve) -> Result<MPoly> {
    require_plane(c)?;
    let d = c.degree();
    // move the parameter so that X0 has no root at t = ∞ and both
    // cross relations keep full degree d in t
    let shift = (0..=d as i64)
        .find(|&k| !c.coords().entries()[0].evaluate(&rat(k), &rat(1)).is_zero())
        .ok_or_else(|| Error::DegenerateCurve("x0 vanishes identically".into()))?;
    let x: Vec<BinaryForm> = c
        .coords()
        .entries()
        .iter()
        .map(|f| f.substitute_linear(&rat(1), &rat(shift), &rat(0), &rat(1)))
        .collect();
    let res = resultant(&cross_relation(&x, 0, 1), &cross_relation(&x, 0, 2));
    if res.is_zero() {
        return Err(Error::InternalInconsistency("vanishing elimination resultant".into()));
    }
    let f = res.div_var_power(0, res.var_order(0))?.normalized();
    let degree = f.total_degree().unwrap_or(0) as usize;
    if !f.is_homogeneous() {
        return Err(Error::InternalInconsistency(format!("non-homogeneous eliminant {f}")));
    }
    if !f.eval_forms(c.coords().entries())?.is_zero() {
        return Err(Error::InternalInconsistency(format!("{f} does not vanish on the curve")));
    }
    if degree != d {
        return Err(Error::ImproperParametrization(format!(
            "eliminant has degree {degree}, curve degree is {d}"
        )));
    }
    let e = minimal_annihilator_degree(c)?;
    if e < d {
        return Err(Error::ImproperParametrization(format!(
            "image has degree {e} < {d}; the parametrization covers it {} times",
            d / e
        )));
    }
    Ok(f)
}
