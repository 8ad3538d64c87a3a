//! Aggregate classifier with duality closure.

use serde::Serialize;

use super::catalog::{check, CriterionId, EvalOptions, Numbers, Property, Route};
use crate::invariants::{dual_triple, expected_dim, ClassTriple};
use crate::serde_str;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Verdict {
    #[serde(rename = "EMPTY")]
    Empty,
    #[serde(rename = "YES")]
    Yes,
    #[serde(rename = "UNKNOWN")]
    Unknown,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Certificate {
    pub criterion: CriterionId,
    pub route: Route,
    /// The criterion assumes nonemptiness and nothing certifies it.
    pub conditional: bool,
    pub basis: &'static str,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub externally_sourced: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PropertyVerdict {
    pub property: Property,
    pub verdict: Verdict,
    pub conditional: bool,
    /// Expected dimension, recorded with a locally regular verdict.
    #[serde(with = "serde_str::opt_int", skip_serializing_if = "Option::is_none")]
    pub dim: Option<i64>,
    pub certificates: Vec<Certificate>,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize)]
pub enum EdgeType {
    /// A cusp deforms into a node: `(d, g, c) -> (d, g, c + 1)`.
    #[serde(rename = "CUSP_TO_NODE")]
    CuspToNode,
    /// A node is smoothed: `(d, g, c) -> (d, g + 1, c + 2)`.
    #[serde(rename = "NODE_SMOOTHED")]
    NodeSmoothed,
}

impl EdgeType {
    pub fn label(self) -> &'static str {
        match self {
            EdgeType::CuspToNode => "c+1",
            EdgeType::NodeSmoothed => "g+1,c+2",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Edge {
    #[serde(rename = "type")]
    pub kind: EdgeType,
    #[serde(with = "serde_str::triple")]
    pub from: ClassTriple,
    #[serde(with = "serde_str::triple")]
    pub to: ClassTriple,
    /// Inherited from the locally regular verdict of the source.
    pub conditional: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CriteriaReport {
    #[serde(with = "serde_str::int")]
    pub d: i64,
    #[serde(with = "serde_str::int")]
    pub g: i64,
    #[serde(with = "serde_str::int")]
    pub c: i64,
    #[serde(with = "serde_str::int")]
    pub delta: i64,
    #[serde(with = "serde_str::int")]
    pub kappa: i64,
    /// Virtual nodes `3δ - κ`.
    #[serde(with = "serde_str::int")]
    pub nodes: i64,
    /// Virtual cusps `κ - 2δ`.
    #[serde(with = "serde_str::int")]
    pub cusps: i64,
    pub smooth: bool,
    /// Inside the region `2δ <= κ <= 3δ`, `0 <= δ <= (d-1)(d-2)/2`.
    pub admissible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub empty_reason: Option<String>,
    #[serde(with = "serde_str::int")]
    pub expected_dim: i64,
    pub lrq_exponent: u32,
    pub verdicts: Vec<PropertyVerdict>,
    pub edges: Vec<Edge>,
}

impl CriteriaReport {
    pub fn triple(&self) -> ClassTriple {
        ClassTriple::new(self.d, self.g, self.c)
    }

    pub fn verdict(&self, p: Property) -> &PropertyVerdict {
        self.verdicts
            .iter()
            .find(|v| v.property == p)
            .expect("every property has a verdict")
    }

    pub fn is_empty(&self) -> bool {
        self.empty_reason.is_some()
    }

    pub fn has_certificate(&self, p: Property, id: CriterionId, route: Route) -> bool {
        self.verdict(p)
            .certificates
            .iter()
            .any(|c| c.criterion == id && c.route == route)
    }
}

/// Reason the family is certainly empty, if any.
pub fn emptiness_reason(t: ClassTriple) -> Option<String> {
    let x = Numbers::of(t);
    if t.d < 1 {
        return Some(format!("degree {} < 1", t.d));
    }
    if !x.admissible() {
        return Some(format!(
            "(delta, kappa) = ({}, {}) violates 2delta <= kappa <= 3delta, 0 <= delta <= {}",
            x.delta,
            x.kappa,
            (x.d - 1) * (x.d - 2) / 2
        ));
    }
    if t.d >= 2 && t.c < 2 {
        return Some(format!("class {} < 2 for degree {} >= 2", t.c, t.d));
    }
    if t.d >= 2 && !x.dual().admissible() {
        let y = x.dual();
        return Some(format!(
            "dual triple {} has (delta, kappa) = ({}, {}) outside the admissible region",
            dual_triple(t),
            y.delta,
            y.kappa
        ));
    }
    None
}

fn certificates_for(t: ClassTriple, p: Property, opts: EvalOptions) -> Vec<(CriterionId, Route)> {
    let dual = dual_triple(t);
    let close = p.closed_under_duality() && t.d >= 2 && t.c >= 2;
    let mut out = Vec::new();
    for id in CriterionId::ALL.into_iter().filter(|id| id.property() == p) {
        let mut routes = Vec::new();
        if let Some(r) = check(id, t, opts) {
            routes.push(r);
        }
        if close && !id.contains_dual_form() && check(id, dual, opts).is_some() {
            routes.push(Route::ViaDual);
        }
        routes.sort();
        routes.dedup();
        out.extend(routes.into_iter().map(|r| (id, r)));
    }
    out
}

/// Evaluate every catalog criterion on `t` and on its dual.
pub fn evaluate(t: ClassTriple) -> CriteriaReport {
    evaluate_with(t, EvalOptions::default())
}

pub fn evaluate_with(t: ClassTriple, opts: EvalOptions) -> CriteriaReport {
    let x = Numbers::of(t);
    let (delta, kappa) = (x.delta as i64, x.kappa as i64);
    let empty_reason = emptiness_reason(t);
    let admissible = t.d >= 1 && x.admissible();
    let empty = empty_reason.is_some();
    let smooth = !empty && delta == 0 && kappa == 0;

    let mut verdicts = Vec::with_capacity(4);
    if empty {
        for p in Property::ALL {
            verdicts.push(PropertyVerdict {
                property: p,
                verdict: Verdict::Empty,
                conditional: false,
                dim: None,
                certificates: Vec::new(),
            });
        }
    } else {
        let raw: Vec<(Property, Vec<(CriterionId, Route)>)> = Property::ALL
            .into_iter()
            .map(|p| (p, certificates_for(t, p, opts)))
            .collect();
        let nonempty_known = smooth || !raw[0].1.is_empty();
        for (p, certs) in raw {
            let certificates: Vec<Certificate> = certs
                .into_iter()
                .map(|(id, route)| Certificate {
                    criterion: id,
                    route,
                    conditional: id.conditional_on_nonempty() && !nonempty_known,
                    basis: id.basis(),
                    externally_sourced: id.externally_sourced(),
                })
                .collect();
            let yes = smooth || !certificates.is_empty();
            let conditional = !smooth && yes && certificates.iter().all(|c| c.conditional);
            verdicts.push(PropertyVerdict {
                property: p,
                verdict: if yes { Verdict::Yes } else { Verdict::Unknown },
                conditional,
                dim: (yes && p == Property::LocallyRegular).then(|| expected_dim(t)),
                certificates,
            });
        }
    }

    let mut report = CriteriaReport {
        d: t.d,
        g: t.g,
        c: t.c,
        delta,
        kappa,
        nodes: 3 * delta - kappa,
        cusps: kappa - 2 * delta,
        smooth,
        admissible,
        empty_reason,
        expected_dim: expected_dim(t),
        lrq_exponent: opts.lrq_exponent,
        verdicts,
        edges: Vec::new(),
    };
    report.edges = edges_of(&report);
    report
}

fn edges_of(report: &CriteriaReport) -> Vec<Edge> {
    let lr = report.verdict(Property::LocallyRegular);
    if report.is_empty() || lr.verdict != Verdict::Yes {
        return Vec::new();
    }
    let t = report.triple();
    let mut edges = Vec::new();
    if report.cusps > 0 {
        edges.push(Edge {
            kind: EdgeType::CuspToNode,
            from: t,
            to: ClassTriple::new(t.d, t.g, t.c + 1),
            conditional: lr.conditional,
        });
    }
    if report.nodes > 0 {
        edges.push(Edge {
            kind: EdgeType::NodeSmoothed,
            from: t,
            to: ClassTriple::new(t.d, t.g + 1, t.c + 2),
            conditional: lr.conditional,
        });
    }
    edges
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(d: i64, g: i64, c: i64) -> ClassTriple {
        ClassTriple::new(d, g, c)
    }

    #[test]
    fn nodal_cubic_is_fully_certified() {
        let r = evaluate(t(3, 0, 4));
        for p in Property::ALL {
            assert_eq!(r.verdict(p).verdict, Verdict::Yes, "{p}");
            assert!(!r.verdict(p).conditional);
        }
        assert!(r.has_certificate(Property::Nonempty, CriterionId::NeL, Route::Direct));
        assert!(r.has_certificate(Property::LocallyRegular, CriterionId::LrL, Route::Direct));
        assert!(r.has_certificate(Property::LocallyRegular, CriterionId::LrSev, Route::Direct));
        assert!(r.has_certificate(Property::NodalCuspidalGeneric, CriterionId::NcSh, Route::Direct));
        assert!(r.has_certificate(Property::Irreducible, CriterionId::IrrL, Route::Direct));
        assert_eq!(r.verdict(Property::LocallyRegular).dim, Some(8));
    }

    #[test]
    fn inadmissible_triples_are_empty() {
        let r = evaluate(t(3, 1, 4));
        assert!(r.is_empty());
        assert!(r.verdicts.iter().all(|v| v.verdict == Verdict::Empty));
        assert!(evaluate(t(3, 5, 1)).is_empty());
        // class 2 forces degree 2
        assert!(evaluate(t(5, 0, 2)).is_empty());
    }

    #[test]
    fn dual_only_irreducibility() {
        let r = evaluate(t(7, 0, 6));
        let v = r.verdict(Property::Irreducible);
        assert_eq!(v.verdict, Verdict::Yes);
        assert!(v.certificates.iter().all(|c| c.route == Route::ViaDual));
        assert!(r.has_certificate(Property::Irreducible, CriterionId::IrrDl, Route::ViaDual));
        let r = evaluate(t(7, 0, 7));
        assert_eq!(r.verdict(Property::Irreducible).verdict, Verdict::Unknown);
    }

    #[test]
    fn smooth_family() {
        let r = evaluate(t(3, 1, 6));
        assert!(r.smooth);
        assert!(r.edges.is_empty());
        assert!(r.verdicts.iter().all(|v| v.verdict == Verdict::Yes && !v.conditional));
    }

    #[test]
    fn incidence_edges_of_cubics() {
        let r = evaluate(t(3, 0, 3));
        assert_eq!(r.edges.len(), 1);
        assert_eq!(r.edges[0].kind, EdgeType::CuspToNode);
        assert_eq!(r.edges[0].to, t(3, 0, 4));
        let r = evaluate(t(3, 0, 4));
        assert_eq!(r.edges.len(), 1);
        assert_eq!(r.edges[0].kind, EdgeType::NodeSmoothed);
        assert_eq!(r.edges[0].to, t(3, 1, 6));
    }
}
