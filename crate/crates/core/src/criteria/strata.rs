//! Stratification graph of all admissible families of a given degree.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use super::catalog::EvalOptions;
use super::engine::{evaluate_with, CriteriaReport, Edge};
use crate::error::{Error, Result};
use crate::invariants::{arithmetic_genus, to_delta_kappa, triple_is_admissible, ClassTriple};
use crate::serde_str;

pub const MAX_DEGREE_ENV: &str = "CURVECLASS_MAX_DEGREE";
pub const DEFAULT_MAX_DEGREE: i64 = 12;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct StrataConfig {
    pub max_degree: i64,
    pub eval: EvalOptions,
}

impl Default for StrataConfig {
    fn default() -> Self {
        StrataConfig {
            max_degree: DEFAULT_MAX_DEGREE,
            eval: EvalOptions::default(),
        }
    }
}

impl StrataConfig {
    /// Default configuration with the degree bound read from the
    /// environment when set.
    pub fn from_env() -> Result<Self> {
        let mut cfg = StrataConfig::default();
        if let Ok(v) = std::env::var(MAX_DEGREE_ENV) {
            cfg.max_degree = v.trim().parse().map_err(|_| {
                Error::Parse(format!("{MAX_DEGREE_ENV}={v:?} is not an integer"))
            })?;
        }
        Ok(cfg)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StrataGraph {
    #[serde(with = "serde_str::int")]
    pub d: i64,
    pub nodes: Vec<CriteriaReport>,
    pub edges: Vec<Edge>,
}

/// Incidence edges leaving `t`; only emitted when `t` is certified
/// locally regular.
pub fn incidence_edges(t: ClassTriple) -> Result<Vec<Edge>> {
    incidence_edges_with(t, EvalOptions::default())
}

pub fn incidence_edges_with(t: ClassTriple, opts: EvalOptions) -> Result<Vec<Edge>> {
    if !triple_is_admissible(t) {
        return Err(Error::NotAdmissible(format!("{t} is not admissible")));
    }
    Ok(evaluate_with(t, opts).edges)
}

/// Admissible triples of degree `d` with nonnegative class, ordered by
/// genus and then class.
pub fn admissible_triples(d: i64) -> Vec<ClassTriple> {
    let top = arithmetic_genus(d);
    let mut out = Vec::new();
    for g in 0..=top {
        let delta = top - g;
        let mut row: Vec<ClassTriple> = (2 * delta..=3 * delta)
            .map(|kappa| ClassTriple::new(d, g, d * (d - 1) - kappa))
            .filter(|t| t.c >= 0)
            .collect();
        row.sort();
        out.extend(row);
    }
    debug_assert!(out.iter().all(|&t| to_delta_kappa(t).is_ok()));
    out
}

pub fn strata_graph(d: i64, cfg: &StrataConfig) -> Result<StrataGraph> {
    if d < 1 || d > cfg.max_degree {
        return Err(Error::OutOfBounds(format!(
            "degree {d} outside 1..={}",
            cfg.max_degree
        )));
    }
    let nodes: Vec<CriteriaReport> = admissible_triples(d)
        .into_par_iter()
        .map(|t| evaluate_with(t, cfg.eval))
        .collect();
    let edges = nodes.iter().flat_map(|r| r.edges.iter().cloned()).collect();
    Ok(StrataGraph { d, nodes, edges })
}

fn node_id(t: &ClassTriple) -> String {
    format!("{},{},{}", t.d, t.g, t.c)
}

impl StrataGraph {
    /// Graphviz rendering; node label `d,g,c | n,k`.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "digraph strata_d{} {{", self.d).unwrap();
        writeln!(out, "  rankdir=LR;").unwrap();
        for r in &self.nodes {
            let t = r.triple();
            let style = if r.is_empty() { ", style=dashed" } else { "" };
            writeln!(
                out,
                "  \"{}\" [label=\"{} | {},{}\"{style}];",
                node_id(&t),
                node_id(&t),
                r.nodes,
                r.cusps
            )
            .unwrap();
        }
        for e in &self.edges {
            writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                node_id(&e.from),
                node_id(&e.to),
                e.kind.label()
            )
            .unwrap();
        }
        out.push_str("}\n");
        out
    }
}
