//! Geometry of random rational curves: Plücker relations, pointwise versus
//! global ramification, planar class formula, frames and file round trips.

mod common;

use curveclass_core::algebra::{rat, BinaryForm, PolyVector, ProjPoint, Rational};
use curveclass_core::curves::*;
use curveclass_core::io::CurveFile;
use rand::Rng;

const SHAPES: [(usize, usize); 8] = [(2, 3), (2, 4), (2, 5), (3, 3), (3, 4), (3, 5), (4, 4), (4, 5)];

#[test]
fn associated_curves_satisfy_plucker_relations() {
    for c in common::corpus(11, &SHAPES, 24) {
        let n = c.ambient_dim();
        for k in 1..n {
            let a = associated(&c, k).unwrap();
            assert!(plucker_relations_hold(&a.plucker, n, k).unwrap(), "{} k={k}", c.coords());
            assert_eq!(a.plucker.content().unwrap().degree(), 0);
        }
    }
}

#[test]
fn plane_class_formula() {
    for c in common::corpus(12, &[(2, 3), (2, 4), (2, 5), (2, 6)], 16) {
        let p = plane_profile(&c).unwrap();
        assert_eq!(p.c, 2 * p.d - 2 - p.beta0, "{}", c.coords());
        assert_eq!(p.nodes + p.cusps, p.delta);
    }
}

/// Normal-form curve with leading exponents `exps` at `t = 0`, moved by
/// `(s, t) -> (a s + b t, c s + d t)`. Returns the curve and the new
/// parameter of the ramified point.
fn moved_normal_form(rng: &mut common::TestRng, exps: &[usize], d: usize) -> Option<(ParamCurve, ProjPoint)> {
    let forms: Vec<BinaryForm> = exps
        .iter()
        .map(|&e| {
            let mut coeffs = vec![rat(0); d + 1];
            coeffs[e] = rat(1);
            for c in coeffs.iter_mut().skip(e + 1) {
                *c = rat(rng.gen_range(-2i64..=2));
            }
            BinaryForm::new(d, coeffs).unwrap()
        })
        .collect();
    let m: Vec<i64> = (0..4).map(|_| rng.gen_range(-3i64..=3)).collect();
    if m[0] * m[3] - m[1] * m[2] == 0 {
        return None;
    }
    let [a, b, c, dd] = [m[0], m[1], m[2], m[3]].map(rat);
    let moved = forms.iter().map(|f| f.substitute_linear(&a, &b, &c, &dd)).collect();
    let curve = ParamCurve::new(PolyVector::new(moved).unwrap()).ok()?;
    // old t = 0 is old (1:0); c s + d t = 0 there
    let point = if m[3] == 0 {
        ProjPoint::Infinity
    } else {
        ProjPoint::Finite(Rational::new((-m[2]).into(), m[3].into()))
    };
    Some((curve, point))
}

#[test]
fn local_indices_from_normal_form() {
    let mut rng = common::rng(13);
    let cases: [(&[usize], usize); 5] = [
        (&[0, 2, 3], 4),
        (&[0, 1, 3], 5),
        (&[0, 3, 4, 6], 6),
        (&[0, 1, 2, 4], 5),
        (&[0, 2, 3, 5, 6], 6),
    ];
    let mut checked = 0;
    while checked < 25 {
        let (exps, d) = cases[checked % cases.len()];
        let Some((c, p)) = moved_normal_form(&mut rng, exps, d) else {
            continue;
        };
        let want: Vec<usize> = exps.windows(2).map(|w| w[1] - w[0] - 1).collect();
        assert_eq!(ramification_at(&c, &p).unwrap(), want, "{} at {p}", c.coords());
        let profile = ramification_profile(&c).unwrap();
        assert_eq!(profile.at_points.get(&p), Some(&want));
        assert_eq!(plucker_residuals(&c).unwrap(), vec![0; c.ambient_dim()]);
        checked += 1;
    }
}

#[test]
fn totals_equal_pointwise_sums_when_rational() {
    let mut seen = 0;
    for c in common::corpus(14, &SHAPES, 40) {
        let profile = ramification_profile(&c).unwrap();
        if profile.complete && profile.irrational.iter().all(|&r| r == 0) {
            seen += 1;
            for k in 0..c.ambient_dim() {
                let sum: usize = profile.at_points.values().map(|b| b[k]).sum();
                assert_eq!(sum as i64, profile.totals[k], "{}", c.coords());
            }
        }
        for k in 0..c.ambient_dim() {
            let listed: usize = profile.at_points.values().map(|b| b[k]).sum();
            assert!(listed as i64 <= profile.totals[k]);
        }
    }
    assert!(seen > 0);
}

#[test]
fn hat_climbs_the_osculating_flag() {
    for c in common::corpus(15, &[(3, 4), (4, 4), (4, 5)], 9) {
        let n = c.ambient_dim();
        for k in 1..n - 1 {
            let h = hat(&associated_frame(&c, k).unwrap()).unwrap();
            assert_eq!(h.plucker().unwrap(), associated(&c, k + 1).unwrap().plucker);
        }
    }
}

#[test]
fn recovery_from_every_level() {
    for c in common::corpus(16, &[(2, 3), (3, 4), (4, 5)], 9) {
        for k in 1..c.ambient_dim() {
            let f = associated_frame(&c, k).unwrap();
            assert_eq!(integrability_check(&f), Integrability::Integrable);
            let back = recover_underlying(&f).unwrap();
            assert!(back.coords().is_proportional(c.coords()));
        }
    }
}

#[test]
fn dual_degree_is_last_associated_degree() {
    for c in common::corpus(17, &SHAPES, 16) {
        let seq = degree_sequence(&c).unwrap();
        assert_eq!(dual(&c).unwrap().degree(), *seq.last().unwrap());
    }
}

#[test]
fn curve_files_round_trip() {
    for c in common::corpus(18, &SHAPES, 16) {
        let file = CurveFile::from_curve(&c);
        let text = serde_json::to_string(&file).unwrap();
        let parsed: CurveFile = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed, file);
        let again = parsed.to_curve().unwrap();
        assert_eq!(again, c.normalized());
        assert_eq!(serde_json::to_string(&CurveFile::from_curve(&again)).unwrap(), text);
    }
}
