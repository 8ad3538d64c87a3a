//! The dual curve `C*` in the dual projective space, traced by the
//! osculating hyperplanes.

use super::ramification::total_ramification;
use super::{degree_sequence, derivative_matrix, ParamCurve};
use crate::algebra::PolyVector;
use crate::error::{Error, Result};

/// Signed `n`-minors `y_i = (-1)^i det(X, ..., X^(n-1) without column i)`,
/// before any content removal.
fn raw_dual(c: &ParamCurve) -> Result<PolyVector> {
    let n = c.ambient_dim();
    let minors = derivative_matrix(c.coords(), n - 1).minors(n)?;
    // lexicographic n-subsets of 0..=n: position n - i omits column i
    let entries = (0..=n)
        .map(|i| {
            let m = &minors.entries()[n - i];
            if i % 2 == 1 {
                m.neg()
            } else {
                m.clone()
            }
        })
        .collect();
    PolyVector::new(entries)
}

/// The dual curve together with the unreduced signed-minor vector.
pub fn dual_with_raw(c: &ParamCurve) -> Result<(ParamCurve, PolyVector)> {
    let n = c.ambient_dim();
    let raw = raw_dual(c)?;
    if raw.is_zero() {
        return Err(Error::DegenerateCurve("osculating hyperplanes are undefined".into()));
    }
    let (reduced, _) = raw.div_s_power(n * (n - 1) / 2)?.content_free()?;
    let dual = ParamCurve::new(reduced).map_err(|e| {
        Error::InternalInconsistency(format!("dual of a nondegenerate curve is invalid: {e}"))
    })?;
    Ok((dual, raw))
}

/// Content-reduced, canonically normalized dual; its degree is `d_(n-1)`.
pub fn dual(c: &ParamCurve) -> Result<ParamCurve> {
    Ok(dual_with_raw(c)?.0)
}

/// `C**` is proportional to `C`.
pub fn bidual_check(c: &ParamCurve) -> Result<bool> {
    let bidual = dual(&dual(c)?)?;
    Ok(bidual.coords().is_proportional(c.coords()))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DualitySymmetry {
    pub degrees: Vec<usize>,
    pub dual_degrees: Vec<usize>,
    pub betas: Vec<i64>,
    pub dual_betas: Vec<i64>,
    /// `d_k(C*) - d_(n-1-k)(C)`
    pub degree_residuals: Vec<i64>,
    /// `β_k(C*) - β_(n-1-k)(C)`
    pub beta_residuals: Vec<i64>,
}

impl DualitySymmetry {
    pub fn passes(&self) -> bool {
        self.degree_residuals.iter().chain(&self.beta_residuals).all(|&r| r == 0)
    }
}

pub fn duality_symmetry_check(c: &ParamCurve) -> Result<DualitySymmetry> {
    let d = dual(c)?;
    let degrees = degree_sequence(c)?;
    let dual_degrees = degree_sequence(&d)?;
    let betas = total_ramification(c)?;
    let dual_betas = total_ramification(&d)?;
    let n = degrees.len();
    let degree_residuals = (0..n)
        .map(|k| dual_degrees[k] as i64 - degrees[n - 1 - k] as i64)
        .collect();
    let beta_residuals = (0..n).map(|k| dual_betas[k] - betas[n - 1 - k]).collect();
    Ok(DualitySymmetry {
        degrees,
        dual_degrees,
        betas,
        dual_betas,
        degree_residuals,
        beta_residuals,
    })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrthogonalityPair {
    pub i: usize,
    pub j: usize,
    /// `X^(i) . Y^(j) ≡ 0` for the unreduced dual.
    pub raw: bool,
    /// Same for the content-reduced dual.
    pub reduced: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Orthogonality {
    pub pairs: Vec<OrthogonalityPair>,
    pub raw: bool,
    pub reduced: bool,
    /// `X^(n) . Y` does not vanish (it is the Wronskian up to sign).
    pub control_nonzero: bool,
}

impl Orthogonality {
    pub fn passes(&self) -> bool {
        self.raw && self.reduced && self.control_nonzero
    }
}

fn derivatives(v: &PolyVector, upto: usize) -> Vec<PolyVector> {
    let mut out = vec![v.clone()];
    for _ in 0..upto {
        let next = out.last().unwrap().derivative_t();
        out.push(next);
    }
    out
}

/// `X^(i) . Y^(j) ≡ 0` for all `i + j <= n - 1`, checked for both the raw
/// and the reduced dual.
pub fn orthogonality_check(c: &ParamCurve) -> Result<Orthogonality> {
    let n = c.ambient_dim();
    let (reduced, raw) = dual_with_raw(c)?;
    let xs = derivatives(c.coords(), n);
    let raws = derivatives(&raw, n - 1);
    let reds = derivatives(reduced.coords(), n - 1);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in 0..n - i {
            pairs.push(OrthogonalityPair {
                i,
                j,
                raw: xs[i].dot(&raws[j])?.is_zero(),
                reduced: xs[i].dot(&reds[j])?.is_zero(),
            });
        }
    }
    Ok(Orthogonality {
        raw: pairs.iter().all(|p| p.raw),
        reduced: pairs.iter().all(|p| p.reduced),
        control_nonzero: !xs[n].dot(&raw)?.is_zero(),
        pairs,
    })
}
