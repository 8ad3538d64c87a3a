use std::fs;

use curveclass_core::criteria::catalog::EvalOptions;
use curveclass_core::criteria::{dual_sweep, emptiness_reason, evaluate_with, strata_graph, StrataConfig};
use curveclass_core::curves::{
    associated, bidual_check, degree_sequence, dual, duality_symmetry_check, implicitize, integrability_check,
    orthogonality_check, plane_profile, plucker_relations_hold, plucker_residuals, ramification_profile,
    recover_underlying, Integrability, ParamCurve,
};
use curveclass_core::invariants::{
    dual_triple, expected_dim, from_delta_kappa, from_nodal_cuspidal, raw_delta_kappa, triple_is_admissible,
};
use curveclass_core::io::{Coeff, CurveFile, FrameFile};
use curveclass_core::{BinaryForm, ClassTriple, DeltaKappa, NodalCuspidal, PolyVector};
use serde::Serialize;
use serde_json::{json, Value};

use crate::table;
use crate::{Command, Failure, Format, TripleArgs};

type Out = Result<String, Failure>;

fn pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable output");
    s.push('\n');
    s
}

fn triple_of(a: &TripleArgs) -> Result<ClassTriple, Failure> {
    match (a.g, a.c, a.n, a.k, a.delta, a.kappa) {
        (Some(g), Some(c), None, None, None, None) => Ok(ClassTriple::new(a.d, g, c)),
        (None, None, Some(n), Some(k), None, None) => {
            Ok(from_delta_kappa(from_nodal_cuspidal(NodalCuspidal::new(a.d, n, k))))
        }
        (None, None, None, None, Some(delta), Some(kappa)) => {
            Ok(from_delta_kappa(DeltaKappa::new(a.d, delta, kappa)))
        }
        _ => Err(Failure::invalid(
            "usage",
            "give exactly one of --g/--c, --n/--k or --delta/--kappa together with --d",
        )),
    }
}

fn require_admissible(t: ClassTriple) -> Result<(), Failure> {
    if triple_is_admissible(t) {
        return Ok(());
    }
    let reason = emptiness_reason(t).unwrap_or_else(|| "outside the admissible region".into());
    Err(Failure::invalid("not_admissible", format!("{t} is EMPTY: {reason}")))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &str) -> Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::invalid("io", format!("{path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| Failure::invalid("malformed_json", format!("{path}: {e}")))
}

fn read_curve(path: &str) -> Result<ParamCurve, Failure> {
    Ok(read_json::<CurveFile>(path)?.to_curve()?)
}

fn coeffs(f: &BinaryForm) -> Vec<Coeff> {
    f.coeffs().iter().map(Coeff::from).collect()
}

fn vector(v: &PolyVector) -> Vec<Vec<Coeff>> {
    v.entries().iter().map(coeffs).collect()
}

pub fn run(cmd: &Command) -> Out {
    match cmd {
        Command::Classify {
            triple,
            format,
            lrq_exponent,
        } => {
            let t = triple_of(triple)?;
            require_admissible(t)?;
            let report = evaluate_with(t, EvalOptions { lrq_exponent: *lrq_exponent });
            match format {
                Format::Json => Ok(pretty(&report)),
                Format::Table => Ok(table::report(&report)),
                Format::Dot => Err(Failure::invalid("usage", "classify supports json and table")),
            }
        }
        Command::Strata { d, format } => {
            let cfg = StrataConfig::from_env()?;
            let graph = strata_graph(*d, &cfg)?;
            match format {
                Format::Json => Ok(pretty(&graph)),
                Format::Dot => Ok(graph.to_dot()),
                Format::Table => Ok(table::strata(&graph)),
            }
        }
        Command::DualTriple { triple } => {
            let t = triple_of(triple)?;
            let side = |t: ClassTriple| {
                let (delta, kappa) = raw_delta_kappa(t);
                json!({
                    "d": t.d.to_string(),
                    "g": t.g.to_string(),
                    "c": t.c.to_string(),
                    "delta": delta.to_string(),
                    "kappa": kappa.to_string(),
                    "nodes": (3 * delta - kappa).to_string(),
                    "cusps": (kappa - 2 * delta).to_string(),
                    "admissible": triple_is_admissible(t),
                    "expected_dim": expected_dim(t).to_string(),
                })
            };
            Ok(pretty(&json!({ "input": side(t), "dual": side(dual_triple(t)) })))
        }
        Command::Associated { input, k } => {
            let c = read_curve(input)?;
            let a = associated(&c, *k)?;
            Ok(pretty(&json!({
                "ambient_dim": c.ambient_dim(),
                "k": a.k,
                "degree": a.degree,
                "plucker": vector(&a.plucker),
                "content": coeffs(&a.content.canonical()),
                "content_form": a.content.canonical().to_string(),
                "relations_hold": plucker_relations_hold(&a.plucker, c.ambient_dim(), a.k)?,
            })))
        }
        Command::PlueckerCheck { input, format } => {
            let c = read_curve(input)?;
            let report = pluecker_report(&c)?;
            match format {
                Format::Json => Ok(pretty(&report)),
                Format::Table => Ok(table::pluecker(&report)),
                Format::Dot => Err(Failure::invalid("usage", "pluecker-check supports json and table")),
            }
        }
        Command::Dual { input, curve_only } => {
            let c = read_curve(input)?;
            let d = dual(&c)?;
            if *curve_only {
                return Ok(pretty(&CurveFile::from_curve(&d)));
            }
            let sym = duality_symmetry_check(&c)?;
            let orth = orthogonality_check(&c)?;
            Ok(pretty(&json!({
                "dual": CurveFile::from_curve(&d),
                "bidual_check": bidual_check(&c)?,
                "degrees": sym.degrees,
                "dual_degrees": sym.dual_degrees,
                "degree_residuals": sym.degree_residuals,
                "beta_residuals": sym.beta_residuals,
                "orthogonality": {
                    "raw": orth.raw,
                    "reduced": orth.reduced,
                    "control_nonzero": orth.control_nonzero,
                    "pairs": orth.pairs.len(),
                },
            })))
        }
        Command::Integrable { input } => {
            let frame = read_json::<FrameFile>(input)?.to_frame()?;
            let verdict = integrability_check(&frame);
            let recovered = if verdict == Integrability::Integrable {
                Some(CurveFile::from_curve(&recover_underlying(&frame)?))
            } else {
                None
            };
            let mut out = json!({
                "ambient_dim": frame.ambient_dim(),
                "level": frame.level(),
                "verdict": verdict,
                "plucker": vector(&frame.plucker()?),
            });
            if let Some(r) = recovered {
                out["recovered"] = serde_json::to_value(r).unwrap();
            }
            Ok(pretty(&out))
        }
        Command::Implicitize { input } => {
            let c = read_curve(input)?;
            let f = implicitize(&c)?;
            let terms: Vec<Value> = f
                .terms()
                .map(|(e, coeff)| {
                    let mut exps = e.clone();
                    exps.resize(3, 0);
                    json!({ "exponents": exps, "coeff": coeff.to_string() })
                })
                .collect();
            Ok(pretty(&json!({
                "polynomial": f.to_string(),
                "degree": f.total_degree(),
                "terms": terms,
                "profile": plane_profile(&c)?,
            })))
        }
        Command::Sweep { from, to, format } => {
            let rows = dual_sweep(*from, *to)?;
            match format {
                Format::Json => Ok(pretty(&rows)),
                Format::Table => Ok(table::sweep(&rows)),
                Format::Dot => Err(Failure::invalid("usage", "sweep supports json and table")),
            }
        }
    }
}

#[derive(Serialize)]
pub struct PointRow {
    pub point: String,
    pub beta: Vec<usize>,
}

#[derive(Serialize)]
pub struct PlueckerReport {
    pub ambient_dim: usize,
    pub degrees: Vec<usize>,
    pub totals: Vec<i64>,
    pub residuals: Vec<i64>,
    pub points: Vec<PointRow>,
    pub irrational: Vec<usize>,
    pub complete: bool,
    pub relations_hold: Vec<bool>,
    pub passes: bool,
}

fn pluecker_report(c: &ParamCurve) -> Result<PlueckerReport, Failure> {
    let n = c.ambient_dim();
    let degrees = degree_sequence(c)?;
    let profile = ramification_profile(c)?;
    let residuals = plucker_residuals(c)?;
    let relations_hold = (1..n)
        .map(|k| plucker_relations_hold(&associated(c, k)?.plucker, n, k))
        .collect::<Result<Vec<_>, _>>()?;
    let passes = residuals.iter().all(|&r| r == 0) && relations_hold.iter().all(|&b| b);
    Ok(PlueckerReport {
        ambient_dim: n,
        degrees,
        totals: profile.totals,
        residuals,
        points: profile
            .at_points
            .into_iter()
            .map(|(p, beta)| PointRow { point: p.to_string(), beta })
            .collect(),
        irrational: profile.irrational,
        complete: profile.complete,
        relations_hold,
        passes,
    })
}
