//! Shared inputs for the criterion benches.

use curveclass_core::ParamCurve;

/// Deterministic curve of degree `d` in P^n with small, distinct integer
/// coefficients. Nondegenerate for the sizes used in the benches.
pub fn sample_curve(n: usize, d: usize) -> ParamCurve {
    let rows: Vec<Vec<i64>> = (0..=n)
        .map(|i| {
            (0..=d)
                .map(|j| {
                    let x = (i * 7 + j * 13 + i * j * 5) % 11;
                    x as i64 - 5 + i64::from(i == j)
                })
                .collect()
        })
        .collect();
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    ParamCurve::from_ints(d, &refs).expect("sample curve")
}

pub fn twisted_cubic() -> ParamCurve {
    ParamCurve::from_ints(3, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]).unwrap()
}
