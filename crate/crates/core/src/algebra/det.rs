//! Exact determinants.

use super::poly::QPoly;
use super::ring::Ring;
use super::Rational;

/// Fraction-free Bareiss elimination over `Q[t]`; every division is exact.
pub fn bareiss_det(mut m: Vec<Vec<QPoly>>) -> QPoly {
    let n = m.len();
    if n == 0 {
        return QPoly::one();
    }
    let mut negate = false;
    let mut prev = QPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    negate = !negate;
                }
                None => return QPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num
                    .exact_div(&prev)
                    .expect("Bareiss step must divide exactly");
            }
            m[i][k] = QPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -&det
    } else {
        det
    }
}

/// Determinant of a rational matrix by Gaussian elimination.
pub fn rational_det(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !Ring::is_zero(&m[i][k])) else {
            return Rational::zero();
        };
        if p != k {
            m.swap(p, k);
            det = -det;
        }
        let pivot = m[k][k].clone();
        det *= &pivot;
        for i in k + 1..n {
            if Ring::is_zero(&m[i][k]) {
                continue;
            }
            let factor = &m[i][k] / &pivot;
            for j in k..n {
                let sub = &factor * &m[k][j];
                m[i][j] -= sub;
            }
        }
    }
    det
}

/// Rank of a rational matrix.
pub fn rational_rank(mut m: Vec<Vec<Rational>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !Ring::is_zero(&m[i][col])) else {
            continue;
        };
        m.swap(p, rank);
        let pivot = m[rank][col].clone();
        for i in rank + 1..rows {
            if Ring::is_zero(&m[i][col]) {
                continue;
            }
            let factor = &m[i][col] / &pivot;
            for j in col..cols {
                let sub = &factor * &m[rank][j];
                m[i][j] -= sub;
            }
        }
        rank += 1;
    }
    rank
}

/// Division-free determinant (Berkowitz) over any commutative ring.
pub fn berkowitz_det<R: Ring>(a: &[Vec<R>]) -> R {
    let n = a.len();
    if n == 0 {
        return R::one();
    }
    // Characteristic polynomial coefficients of the leading r x r block,
    // highest power first.
    let mut charpoly = vec![R::one(), a[0][0].negated()];
    for r in 1..n {
        // Column of the Toeplitz factor: 1, -a_rr, -R C, -R A C, ..., -R A^(r-1) C
        let mut col = Vec::with_capacity(r + 2);
        col.push(R::one());
        col.push(a[r][r].negated());
        let mut v: Vec<R> = (0..r).map(|i| a[i][r].clone()).collect();
        for step in 0..r {
            let rc = (0..r).fold(R::zero(), |acc, j| acc.plus(&a[r][j].times(&v[j])));
            col.push(rc.negated());
            if step + 1 < r {
                v = (0..r)
                    .map(|i| (0..r).fold(R::zero(), |acc, j| acc.plus(&a[i][j].times(&v[j]))))
                    .collect();
            }
        }
        let next: Vec<R> = (0..r + 2)
            .map(|i| {
                (0..=i.min(r)).fold(R::zero(), |acc, j| acc.plus(&col[i - j].times(&charpoly[j])))
            })
            .collect();
        charpoly = next;
    }
    let constant = charpoly[n].clone();
    if n % 2 == 0 {
        constant
    } else {
        constant.negated()
    }
}
