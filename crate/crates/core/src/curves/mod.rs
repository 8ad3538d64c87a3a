//! Rationally parametrized curves in projective space and their
//! associated curves, duals and Grassmannian frames.
//!
//! Derivatives are taken in the affine parameter `t`. A raw `(k+1)`-minor
//! of the rows `X, X_t, ..., X_t^(k)` is a form of degree
//! `(k+1)d - k(k+1)/2` that is always divisible by `s^(k(k+1)/2)`; that
//! power is removed first, after which the remaining content is the
//! ramification content of the curve.

mod duality;
mod frame;
mod plane;
mod plucker;
mod ramification;

pub use duality::{
    bidual_check, dual, dual_with_raw, duality_symmetry_check, orthogonality_check,
    DualitySymmetry, Orthogonality,
};
pub use frame::{
    associated_frame, generic_rank, hat, integrability_check, recover_underlying, star,
    GrassFrame, Integrability,
};
pub use plane::{implicitize, minimal_annihilator_degree, plane_profile, PlaneProfile};
pub use plucker::{plucker_relation_residuals, plucker_relations_hold};
pub use ramification::{
    content_forms, plucker_residuals, ramification_at, ramification_profile, total_ramification,
    RamificationProfile,
};

use crate::algebra::{BinaryForm, PolyMatrix, PolyVector};
use crate::error::{Error, Result};

/// A curve `P^1 -> P^n` given by `n + 1` coprime binary forms of degree `d`
/// whose image spans `P^n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParamCurve {
    coords: PolyVector,
}

impl ParamCurve {
    pub fn new(coords: PolyVector) -> Result<Self> {
        let n = coords.len().saturating_sub(1);
        if n < 2 {
            return Err(Error::DimensionMismatch(format!(
                "ambient dimension {n} < 2"
            )));
        }
        if coords.degree() < 1 {
            return Err(Error::DegreeMismatch("curve degree must be at least 1".into()));
        }
        let content = coords.content()?;
        if content.degree() > 0 {
            return Err(Error::NotContentFree(format!(
                "coordinates share the factor {content}"
            )));
        }
        if derivative_matrix(&coords, n).minors(n + 1)?.is_zero() {
            return Err(Error::DegenerateCurve(
                "the image lies in a hyperplane (Wronskian vanishes)".into(),
            ));
        }
        Ok(ParamCurve { coords })
    }

    /// Build from integer coefficient lists, one per coordinate.
    pub fn from_ints(degree: usize, coords: &[&[i64]]) -> Result<Self> {
        let forms = coords
            .iter()
            .map(|c| BinaryForm::from_ints(degree, c))
            .collect::<Result<Vec<_>>>()?;
        ParamCurve::new(PolyVector::new(forms)?)
    }

    pub fn ambient_dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn degree(&self) -> usize {
        self.coords.degree()
    }

    pub fn coords(&self) -> &PolyVector {
        &self.coords
    }

    /// The same curve with canonically scaled coordinates.
    pub fn normalized(&self) -> ParamCurve {
        ParamCurve {
            coords: self.coords.normalized(),
        }
    }
}

/// Rows `X, X_t, ..., X_t^(k)`.
pub(crate) fn derivative_matrix(x: &PolyVector, k: usize) -> PolyMatrix {
    let mut rows = vec![x.clone()];
    for _ in 0..k {
        let next = rows.last().unwrap().derivative_t();
        rows.push(next);
    }
    PolyMatrix::new(rows).unwrap()
}

/// Raw `(k+1)`-minors of `X, ..., X_t^(k)` with `s^(k(k+1)/2)` removed.
pub(crate) fn wedge(x: &PolyVector, k: usize) -> Result<PolyVector> {
    let raw = derivative_matrix(x, k).minors(k + 1)?;
    raw.div_s_power(k * (k + 1) / 2)
}

/// The `k`-th associated curve: osculating `k`-planes as Plücker vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AssociatedCurve {
    pub k: usize,
    /// Content-free, canonically normalized; entries indexed by
    /// `(k+1)`-subsets of `0..=n` in lexicographic order.
    pub plucker: PolyVector,
    pub degree: usize,
    /// Content removed after the `s`-power; vanishes exactly at points
    /// where the osculating flag is ramified below level `k + 1`.
    pub content: BinaryForm,
}

pub fn associated(c: &ParamCurve, k: usize) -> Result<AssociatedCurve> {
    let n = c.ambient_dim();
    if k < 1 || k > n - 1 {
        return Err(Error::DimensionMismatch(format!(
            "associated curve level {k} outside 1..={}",
            n - 1
        )));
    }
    let w = wedge(c.coords(), k)?;
    if w.is_zero() {
        return Err(Error::DegenerateCurve(format!("level-{k} wedge vanishes identically")));
    }
    let (plucker, content) = w.content_free()?;
    Ok(AssociatedCurve {
        k,
        degree: plucker.degree(),
        plucker,
        content,
    })
}

/// `d_0, ..., d_(n-1)`.
pub fn degree_sequence(c: &ParamCurve) -> Result<Vec<usize>> {
    let mut out = vec![c.degree()];
    for k in 1..c.ambient_dim() {
        out.push(associated(c, k)?.degree);
    }
    Ok(out)
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::ParamCurve;

    pub fn twisted_cubic() -> ParamCurve {
        ParamCurve::from_ints(3, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]).unwrap()
    }

    pub fn conic() -> ParamCurve {
        ParamCurve::from_ints(2, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap()
    }

    /// `(s^3, s t^2, t^3)`, cusp at `t = 0`, flex at `t = ∞`.
    pub fn cuspidal_cubic() -> ParamCurve {
        ParamCurve::from_ints(3, &[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]).unwrap()
    }

    /// `(s^3, s t^2 - s^3, t^3 - s^2 t)`, node at `t = ±1`.
    pub fn nodal_cubic() -> ParamCurve {
        ParamCurve::from_ints(3, &[&[1, 0, 0, 0], &[-1, 0, 1, 0], &[0, -1, 0, 1]]).unwrap()
    }
}
