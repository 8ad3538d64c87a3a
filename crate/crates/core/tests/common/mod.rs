//! Seeded random curves shared by the integration suites.
#![allow(dead_code)]

use curveclass_core::algebra::{rat, BinaryForm, PolyVector, Rational};
use curveclass_core::curves::ParamCurve;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;
pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small_rational(rng: &mut TestRng) -> Rational {
    let num = rng.gen_range(-4i64..=4);
    let den = if rng.gen_bool(0.25) { rng.gen_range(2i64..=3) } else { 1 };
    rat(num) / rat(den)
}

/// Dense random coordinates; retried until the curve is valid.
pub fn generic_curve(rng: &mut TestRng, n: usize, d: usize) -> ParamCurve {
    loop {
        let forms = (0..=n)
            .map(|_| BinaryForm::new(d, (0..=d).map(|_| small_rational(rng)).collect()).unwrap())
            .collect();
        if let Ok(c) = ParamCurve::new(PolyVector::new(forms).unwrap()) {
            return c;
        }
    }
}

/// A curve in local normal form `x_i = t^(e_i) + higher terms` with
/// `0 = e_0 < e_1 < ... < e_n <= d`, moved by a random integer Möbius
/// transformation so the prescribed ramification sits at a random point.
pub fn ramified_curve(rng: &mut TestRng, n: usize, d: usize) -> ParamCurve {
    assert!(d >= n);
    loop {
        let mut exps = vec![0usize];
        while exps.len() < n + 1 {
            let last = *exps.last().unwrap();
            let room = d - last - (n - exps.len());
            exps.push(last + rng.gen_range(1..=room.max(1)));
        }
        let forms: Vec<BinaryForm> = exps
            .iter()
            .map(|&e| {
                let mut coeffs = vec![rat(0); d + 1];
                coeffs[e] = rat(1);
                for c in coeffs.iter_mut().skip(e + 1) {
                    if rng.gen_bool(0.4) {
                        *c = small_rational(rng);
                    }
                }
                BinaryForm::new(d, coeffs).unwrap()
            })
            .collect();
        let (a, b, c, dd) = loop {
            let m: Vec<i64> = (0..4).map(|_| rng.gen_range(-3i64..=3)).collect();
            if m[0] * m[3] - m[1] * m[2] != 0 {
                break (rat(m[0]), rat(m[1]), rat(m[2]), rat(m[3]));
            }
        };
        let moved = forms.iter().map(|f| f.substitute_linear(&a, &b, &c, &dd)).collect();
        if let Ok(curve) = ParamCurve::new(PolyVector::new(moved).unwrap()) {
            return curve;
        }
    }
}

/// Mixed corpus: alternating generic and ramified curves over the given
/// `(n, d)` shapes.
pub fn corpus(seed: u64, shapes: &[(usize, usize)], count: usize) -> Vec<ParamCurve> {
    let mut r = rng(seed);
    (0..count)
        .map(|i| {
            let (n, d) = shapes[i % shapes.len()];
            if i % 2 == 0 {
                generic_curve(&mut r, n, d)
            } else {
                ramified_curve(&mut r, n, d)
            }
        })
        .collect()
}
