//! Moving frames of curves in Grassmannians, the hat operation and the
//! inverse of the associated-curve map.

use serde::Serialize;

use super::{dual, ParamCurve};
use crate::algebra::det::rational_rank;
use crate::algebra::{rat, PolyMatrix, PolyVector, Rational};
use crate::error::{Error, Result};

/// `k + 1` rows of forms of a common degree in `n + 1` variables, spanning a
/// `(k+1)`-dimensional subspace `Λ(t)` for generic `t`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GrassFrame {
    n: usize,
    k: usize,
    rows: Vec<PolyVector>,
}

impl GrassFrame {
    pub fn new(rows: Vec<PolyVector>) -> Result<Self> {
        let first = rows
            .first()
            .ok_or_else(|| Error::DimensionMismatch("frame without rows".into()))?;
        let n = first.len().checked_sub(1).filter(|&n| n >= 1).ok_or_else(|| {
            Error::DimensionMismatch("frame rows need at least two entries".into())
        })?;
        let k = rows.len() - 1;
        if rows.iter().any(|r| r.len() != n + 1) {
            return Err(Error::DimensionMismatch("frame rows of unequal length".into()));
        }
        if rows.iter().any(|r| r.degree() != first.degree()) {
            return Err(Error::DegreeMismatch("frame rows must share a degree".into()));
        }
        if k >= n {
            return Err(Error::DimensionMismatch(format!(
                "{} rows in a space of dimension {}",
                k + 1,
                n + 1
            )));
        }
        if generic_rank(&rows) != k + 1 {
            return Err(Error::DegenerateCurve(format!(
                "frame rows do not span a {}-dimensional space",
                k + 1
            )));
        }
        Ok(GrassFrame { n, k, rows })
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn level(&self) -> usize {
        self.k
    }

    pub fn rows(&self) -> &[PolyVector] {
        &self.rows
    }

    /// Content-free Plücker coordinates of the spanned subspace.
    pub fn plucker(&self) -> Result<PolyVector> {
        let minors = PolyMatrix::new(self.rows.clone())?.minors(self.k + 1)?;
        Ok(minors.content_free()?.0)
    }
}

/// Generic rank over `Q(t)` of a list of rows. A nonzero `m`-minor has
/// affine degree at most `m * D`, so it cannot vanish at `m * D + 1`
/// distinct integers.
pub fn generic_rank(rows: &[PolyVector]) -> usize {
    let Some(first) = rows.first() else {
        return 0;
    };
    let cols = first.len();
    let full = rows.len().min(cols);
    let max_degree = rows.iter().map(PolyVector::degree).max().unwrap_or(0);
    let one = rat(1);
    let mut best = 0;
    for t in 0..=(full * max_degree) as i64 {
        let t = rat(t);
        let m: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.entries().iter().map(|f| f.evaluate(&one, &t)).collect())
            .collect();
        best = best.max(rational_rank(m));
        if best == full {
            break;
        }
    }
    best
}

fn with_derivatives(rows: &[PolyVector], order: usize) -> Vec<PolyVector> {
    let mut out = rows.to_vec();
    let mut current = rows.to_vec();
    for _ in 0..order {
        current = current.iter().map(PolyVector::lifted_derivative_t).collect();
        out.extend(current.iter().cloned());
    }
    out
}

/// Frame of `Λ + Λ'` one level up. Rows are picked greedily from
/// `[rows; s * rows_t]`, which yields the lexicographically first
/// independent subset; the common content is removed afterwards.
pub fn hat(f: &GrassFrame) -> Result<GrassFrame> {
    if f.k + 1 > f.n - 1 {
        return Err(Error::DimensionMismatch(format!(
            "hat of a level-{} frame in P^{} leaves the proper Grassmannians",
            f.k, f.n
        )));
    }
    let stack = with_derivatives(&f.rows, 1);
    let rank = generic_rank(&stack);
    if rank != f.k + 2 {
        return Err(Error::NotIntegrable(format!(
            "dim(L + L') = {rank}, expected {}",
            f.k + 2
        )));
    }
    let mut picked: Vec<PolyVector> = Vec::with_capacity(f.k + 2);
    for row in stack {
        picked.push(row);
        if generic_rank(&picked) < picked.len() {
            picked.pop();
        }
        if picked.len() == f.k + 2 {
            break;
        }
    }
    let all = PolyVector::new(picked.iter().flat_map(|r| r.entries().iter().cloned()).collect())?;
    let content = all.content()?;
    let rows = if content.degree() > 0 {
        picked
            .iter()
            .map(|r| r.div_exact(&content))
            .collect::<Result<Vec<_>>>()?
    } else {
        picked
    };
    GrassFrame::new(rows)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Integrability {
    #[serde(rename = "INTEGRABLE")]
    Integrable,
    #[serde(rename = "FAILS_HAT_DIM")]
    FailsHatDim,
    #[serde(rename = "FAILS_NONDEGENERACY")]
    FailsNondegeneracy,
}

impl Integrability {
    pub fn tag(self) -> &'static str {
        match self {
            Integrability::Integrable => "INTEGRABLE",
            Integrability::FailsHatDim => "FAILS_HAT_DIM",
            Integrability::FailsNondegeneracy => "FAILS_NONDEGENERACY",
        }
    }
}

/// Integrable iff `dim(Λ + Λ') = k + 2` and the derivatives of the frame
/// up to order `n` span the whole space.
pub fn integrability_check(f: &GrassFrame) -> Integrability {
    if generic_rank(&with_derivatives(&f.rows, 1)) != f.k + 2 {
        return Integrability::FailsHatDim;
    }
    if generic_rank(&with_derivatives(&f.rows, f.n)) != f.n + 1 {
        return Integrability::FailsNondegeneracy;
    }
    Integrability::Integrable
}

/// Rows `X, s X_t, ..., s^k X_t^(k)` spanning the osculating `k`-planes.
pub fn associated_frame(c: &ParamCurve, k: usize) -> Result<GrassFrame> {
    if k > c.ambient_dim() - 1 {
        return Err(Error::DimensionMismatch(format!(
            "frame level {k} outside 0..={}",
            c.ambient_dim() - 1
        )));
    }
    GrassFrame::new(with_derivatives(std::slice::from_ref(c.coords()), k))
}

/// Signed complement of a hyperplane frame: `y_i = (-1)^i` times the
/// maximal minor omitting column `i`, content-reduced.
pub fn star(f: &GrassFrame) -> Result<PolyVector> {
    if f.k + 1 != f.n {
        return Err(Error::DimensionMismatch(format!(
            "star needs a hyperplane frame, got level {} in P^{}",
            f.k, f.n
        )));
    }
    let minors = PolyMatrix::new(f.rows.clone())?.minors(f.n)?;
    let n = f.n;
    let y = PolyVector::new(
        (0..=n)
            .map(|i| {
                let m = &minors.entries()[n - i];
                if i % 2 == 1 {
                    m.neg()
                } else {
                    m.clone()
                }
            })
            .collect(),
    )?;
    Ok(y.content_free()?.0)
}

/// The curve whose `k`-th associated curve is `f`: hat up to hyperplanes,
/// take the complement (a curve in the dual space) and dualize it back.
pub fn recover_underlying(f: &GrassFrame) -> Result<ParamCurve> {
    let mut frame = f.clone();
    while frame.k + 1 < frame.n {
        frame = hat(&frame)?;
    }
    let dual_curve = ParamCurve::new(star(&frame)?).map_err(|e| {
        Error::NotIntegrable(format!("complement of the hyperplane frame is not a curve: {e}"))
    })?;
    dual(&dual_curve)
}
