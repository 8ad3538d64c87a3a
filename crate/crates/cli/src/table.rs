//! Aligned-column text output.

use curveclass_core::criteria::{SweepRow, StrataGraph, Verdict};
use curveclass_core::CriteriaReport;

use crate::commands::PlueckerReport;

fn render(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut out = line(header.iter().map(|s| s.to_string()).collect());
    out.push('\n');
    for r in rows {
        out.push_str(&line(r.clone()));
        out.push('\n');
    }
    out
}

fn verdict(v: Verdict) -> &'static str {
    match v {
        Verdict::Empty => "EMPTY",
        Verdict::Yes => "YES",
        Verdict::Unknown => "UNKNOWN",
    }
}

pub fn report(r: &CriteriaReport) -> String {
    let mut out = format!(
        "(d,g,c) = ({},{},{})  delta = {}  kappa = {}  nodes = {}  cusps = {}  expected_dim = {}\n",
        r.d, r.g, r.c, r.delta, r.kappa, r.nodes, r.cusps, r.expected_dim
    );
    if let Some(reason) = &r.empty_reason {
        out.push_str(&format!("empty: {reason}\n"));
    }
    let rows: Vec<Vec<String>> = r
        .verdicts
        .iter()
        .map(|v| {
            let certs: Vec<String> = v
                .certificates
                .iter()
                .map(|c| format!("{}:{}", c.criterion, c.route.tag()))
                .collect();
            vec![
                v.property.tag().to_string(),
                verdict(v.verdict).to_string(),
                if v.conditional { "yes" } else { "no" }.to_string(),
                certs.join(" "),
            ]
        })
        .collect();
    out.push_str(&render(&["property", "verdict", "conditional", "certificates"], &rows));
    for e in &r.edges {
        out.push_str(&format!("edge {} -> {} ({})\n", e.from, e.to, e.kind.label()));
    }
    out
}

pub fn strata(g: &StrataGraph) -> String {
    let rows: Vec<Vec<String>> = g
        .nodes
        .iter()
        .map(|r| {
            let v = |p| verdict(r.verdict(p).verdict).to_string();
            use curveclass_core::Property::*;
            vec![
                r.triple().to_string(),
                format!("{},{}", r.nodes, r.cusps),
                v(Nonempty),
                v(LocallyRegular),
                v(NodalCuspidalGeneric),
                v(Irreducible),
            ]
        })
        .collect();
    render(&["triple", "n,k", "NONEMPTY", "LOCALLY_REGULAR", "NODAL_CUSPIDAL", "IRREDUCIBLE"], &rows)
}

pub fn pluecker(r: &PlueckerReport) -> String {
    let rows: Vec<Vec<String>> = (0..r.degrees.len())
        .map(|k| {
            vec![
                k.to_string(),
                r.degrees[k].to_string(),
                r.totals[k].to_string(),
                r.irrational[k].to_string(),
                r.residuals[k].to_string(),
            ]
        })
        .collect();
    let mut out = render(&["k", "d_k", "beta_k", "irrational", "residual"], &rows);
    for p in &r.points {
        let betas: Vec<String> = p.beta.iter().map(|b| b.to_string()).collect();
        out.push_str(&format!("point {}: beta = ({})\n", p.point, betas.join(",")));
    }
    out.push_str(&format!("passes: {}\n", r.passes));
    out
}

pub fn sweep(rows: &[SweepRow]) -> String {
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.d.to_string(),
                r.k.to_string(),
                r.dual_degree.to_string(),
                r.g.to_string(),
                r.dual_nodes.to_string(),
                r.dual_cusps.to_string(),
                r.primal_lrq.to_string(),
                r.dual_cusp_bound.to_string(),
                r.dual_quadratic_bound.to_string(),
            ]
        })
        .collect();
    render(
        &["d", "k", "d_dual", "g", "n_dual", "k_dual", "primal_lrq", "k_dual<3d_dual", "quadratic_dual"],
        &body,
    )
}
