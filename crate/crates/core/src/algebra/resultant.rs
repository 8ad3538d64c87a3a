//! Sylvester resultants over an arbitrary commutative ring.

use super::det::berkowitz_det;
use super::poly::Poly;
use super::ring::Ring;

/// Sylvester matrix of `f` (degree `m`) and `g` (degree `n`), size `m + n`.
pub fn sylvester_matrix<R: Ring>(f: &Poly<R>, g: &Poly<R>) -> Vec<Vec<R>> {
    let m = f.degree().unwrap_or(0);
    let n = g.degree().unwrap_or(0);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (p, deg, copies) in [(f, m, n), (g, n, m)] {
        for shift in 0..copies {
            let mut row = vec![R::zero(); size];
            for j in 0..=deg {
                row[shift + j] = p.coeff(deg - j);
            }
            rows.push(row);
        }
    }
    rows
}

/// `Res(f, g)`, computed division-free so it works over `Q[x0, x1, ...]`.
pub fn resultant<R: Ring>(f: &Poly<R>, g: &Poly<R>) -> R {
    if f.is_zero() || g.is_zero() {
        return R::zero();
    }
    berkowitz_det(&sylvester_matrix(f, g))
}
