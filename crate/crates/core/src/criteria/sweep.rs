//! Cuspidal families `k = floor((d+3)^2/9)` and their duals.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::serde_str;

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SweepRow {
    #[serde(with = "serde_str::int")]
    pub d: i128,
    /// Cusps of the primal family (no nodes).
    #[serde(with = "serde_str::int")]
    pub k: i128,
    /// Degree of the dual curve, i.e. the class `c`.
    #[serde(with = "serde_str::int")]
    pub dual_degree: i128,
    #[serde(with = "serde_str::int")]
    pub g: i128,
    #[serde(with = "serde_str::int")]
    pub dual_nodes: i128,
    #[serde(with = "serde_str::int")]
    pub dual_cusps: i128,
    #[serde(with = "serde_str::rational")]
    pub dual_degree_ratio: Rational,
    #[serde(with = "serde_str::rational")]
    pub genus_ratio: Rational,
    #[serde(with = "serde_str::rational")]
    pub dual_nodes_ratio: Rational,
    #[serde(with = "serde_str::rational")]
    pub dual_cusps_ratio: Rational,
    /// `κ - δ <= (d^2-4d+6)/2` on the primal.
    pub primal_nonempty_bound: bool,
    /// `5κ - 6δ <= (d+3)^2` on the primal.
    pub primal_lrq: bool,
    /// `k^∨ < 3 d^∨`
    pub dual_cusp_bound: bool,
    /// `4 n^∨ + 9 k^∨ < (d^∨ + 3)^2`
    pub dual_quadratic_bound: bool,
}

fn ratio(n: i128, d: i128) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn sweep_row(d: i128) -> SweepRow {
    let k = (d + 3) * (d + 3) / 9;
    let (delta, kappa) = (k, 3 * k);
    let g = (d - 1) * (d - 2) / 2 - delta;
    let c = d * (d - 1) - kappa;
    let dual_delta = (c - 1) * (c - 2) / 2 - g;
    let dual_kappa = c * (c - 1) - d;
    let dual_nodes = 3 * dual_delta - dual_kappa;
    let dual_cusps = dual_kappa - 2 * dual_delta;
    SweepRow {
        d,
        k,
        dual_degree: c,
        g,
        dual_nodes,
        dual_cusps,
        dual_degree_ratio: ratio(c, d * d),
        genus_ratio: ratio(g, d * d),
        dual_nodes_ratio: ratio(dual_nodes, d * d * d * d),
        dual_cusps_ratio: ratio(dual_cusps, d * d),
        primal_nonempty_bound: 2 * (kappa - delta) <= d * d - 4 * d + 6,
        primal_lrq: 5 * kappa - 6 * delta <= (d + 3) * (d + 3),
        dual_cusp_bound: dual_cusps < 3 * c,
        dual_quadratic_bound: 4 * dual_nodes + 9 * dual_cusps < (c + 3) * (c + 3),
    }
}

pub fn dual_sweep(d_min: i64, d_max: i64) -> Result<Vec<SweepRow>> {
    if d_min > d_max {
        return Err(Error::OutOfBounds(format!("empty range {d_min}..={d_max}")));
    }
    dual_sweep_degrees(&(d_min..=d_max).collect::<Vec<_>>())
}

pub fn dual_sweep_degrees(degrees: &[i64]) -> Result<Vec<SweepRow>> {
    if let Some(&d) = degrees.iter().find(|&&d| !(5..=1_000_000).contains(&d)) {
        return Err(Error::OutOfBounds(format!("sweep degree {d} outside 5..=1000000")));
    }
    Ok(degrees.par_iter().map(|&d| sweep_row(d as i128)).collect())
}
