//! Ramification indices of the osculating flag, globally from degrees and
//! pointwise from local orders of derivative minors.

use std::collections::BTreeMap;

use super::{degree_sequence, wedge, ParamCurve};
use crate::algebra::det::bareiss_det;
use crate::algebra::roots::rational_roots;
use crate::algebra::{column_subsets, BinaryForm, ProjPoint, QPoly};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RamificationProfile {
    /// `β_0, ..., β_(n-1)` from the Plücker formulas.
    pub totals: Vec<i64>,
    /// Per rational ramification point, `β_k(p)` for every `k`.
    pub at_points: BTreeMap<ProjPoint, Vec<usize>>,
    /// Part of `β_k` carried by points that are not rational.
    pub irrational: Vec<usize>,
    /// False if the rational root search was inconclusive for some form.
    pub complete: bool,
}

/// `β_k = 2d_k - d_(k-1) - d_(k+1) - 2` with `d_(-1) = d_n = 0`.
pub fn total_ramification(c: &ParamCurve) -> Result<Vec<i64>> {
    let degs: Vec<i64> = degree_sequence(c)?.into_iter().map(|d| d as i64).collect();
    let n = degs.len();
    let at = |k: isize| -> i64 {
        if k < 0 || k as usize >= n {
            0
        } else {
            degs[k as usize]
        }
    };
    (0..n as isize)
        .map(|k| {
            let beta = 2 * at(k) - at(k - 1) - at(k + 1) - 2;
            if beta < 0 {
                Err(Error::InternalInconsistency(format!(
                    "negative total ramification beta_{k} = {beta} from degrees {degs:?}"
                )))
            } else {
                Ok(beta)
            }
        })
        .collect()
}

/// Contents `G_0, ..., G_n` of the `s`-reduced wedges; `G_0 = 1` and `G_n`
/// is the reduced Wronskian.
pub fn content_forms(c: &ParamCurve) -> Result<Vec<BinaryForm>> {
    let n = c.ambient_dim();
    let mut out = vec![BinaryForm::from_ints(0, &[1])?];
    for k in 1..=n {
        out.push(wedge(c.coords(), k)?.content()?);
    }
    Ok(out)
}

/// `R_k = G_(k+1) G_(k-1) / G_k^2`, whose roots are the points with
/// `β_k > 0`, counted with multiplicity.
fn ramification_divisors(g: &[BinaryForm]) -> Result<Vec<BinaryForm>> {
    let one = BinaryForm::from_ints(0, &[1])?;
    let n = g.len() - 1;
    (0..n)
        .map(|k| {
            let below = if k == 0 { &one } else { &g[k - 1] };
            g[k + 1].mul(below).div_exact(&g[k].mul(&g[k])).map_err(|_| {
                Error::InternalInconsistency(format!(
                    "ramification divisor at level {k} is not a polynomial"
                ))
            })
        })
        .collect()
}

/// Lowest orders at `t = 0` of the `(k+1)`-minors of `x, x', ..., x^(k)`
/// for `k = 0..=n`.
fn minor_orders(x: &[QPoly]) -> Result<Vec<usize>> {
    let n = x.len() - 1;
    let mut rows = vec![x.to_vec()];
    for _ in 0..n {
        let next = rows.last().unwrap().iter().map(QPoly::derivative).collect();
        rows.push(next);
    }
    (0..=n)
        .map(|k| {
            column_subsets(n + 1, k + 1)
                .into_iter()
                .filter_map(|cols| {
                    let m = rows[..=k]
                        .iter()
                        .map(|row| cols.iter().map(|&j| row[j].clone()).collect())
                        .collect();
                    bareiss_det(m).lowest_order()
                })
                .min()
                .ok_or_else(|| Error::DegenerateCurve(format!("all {}-minors vanish", k + 1)))
        })
        .collect()
}

/// `β_0(p), ..., β_(n-1)(p)` from the local normal form: with `v_k` the
/// order at `p` of the `(k+1)`-minors, `β_k = v_(k+1) - 2v_k + v_(k-1)`.
pub fn ramification_at(c: &ParamCurve, p: &ProjPoint) -> Result<Vec<usize>> {
    let x: Vec<QPoly> = c
        .coords()
        .entries()
        .iter()
        .map(|f| match p {
            ProjPoint::Finite(t0) => f.affine().shift(t0),
            ProjPoint::Infinity => f.u_chart(),
        })
        .collect();
    let v = minor_orders(&x)?;
    if v[0] != 0 {
        return Err(Error::NotContentFree(format!("all coordinates vanish at {p}")));
    }
    let n = c.ambient_dim();
    (0..n)
        .map(|k| {
            let prev = if k == 0 { 0 } else { v[k - 1] as i64 };
            let beta = v[k + 1] as i64 - 2 * v[k] as i64 + prev;
            usize::try_from(beta).map_err(|_| {
                Error::InternalInconsistency(format!("negative local index beta_{k}({p}) = {beta}"))
            })
        })
        .collect()
}

/// Totals, every rational ramification point with its indices, and the
/// remainder carried by irrational points.
pub fn ramification_profile(c: &ParamCurve) -> Result<RamificationProfile> {
    let totals = total_ramification(c)?;
    let g = content_forms(c)?;
    let divisors = ramification_divisors(&g)?;
    let mut complete = true;
    let mut points = std::collections::BTreeSet::new();
    for r in &divisors {
        if r.is_zero() {
            return Err(Error::InternalInconsistency("zero ramification divisor".into()));
        }
        if r.s_order()? > 0 {
            points.insert(ProjPoint::Infinity);
        }
        let roots = rational_roots(&r.affine());
        complete &= roots.complete;
        points.extend(roots.roots.into_iter().map(|(t0, _)| ProjPoint::Finite(t0)));
    }
    let mut at_points = BTreeMap::new();
    for p in points {
        let local = ramification_at(c, &p)?;
        for (k, r) in divisors.iter().enumerate() {
            if r.valuation(&p)? != local[k] {
                return Err(Error::InternalInconsistency(format!(
                    "beta_{k}({p}) = {} from local minors but {} from content forms",
                    local[k],
                    r.valuation(&p)?
                )));
            }
        }
        at_points.insert(p, local);
    }
    let mut irrational = Vec::with_capacity(divisors.len());
    for (k, r) in divisors.iter().enumerate() {
        let rational: usize = at_points.values().map(|b| b[k]).sum();
        if rational > r.degree() {
            return Err(Error::InternalInconsistency(format!(
                "level {k}: rational points carry {rational} > divisor degree {}",
                r.degree()
            )));
        }
        irrational.push(r.degree() - rational);
    }
    Ok(RamificationProfile {
        totals,
        at_points,
        irrational,
        complete,
    })
}

/// `d_(k-1) - 2d_k + d_(k+1) + 2 + β_k` with `β_k` assembled from the
/// pointwise indices and the irrational remainder; all zero for a valid
/// rational curve.
pub fn plucker_residuals(c: &ParamCurve) -> Result<Vec<i64>> {
    let degs: Vec<i64> = degree_sequence(c)?.into_iter().map(|d| d as i64).collect();
    let profile = ramification_profile(c)?;
    let n = degs.len();
    let at = |k: isize| -> i64 {
        if k < 0 || k as usize >= n {
            0
        } else {
            degs[k as usize]
        }
    };
    Ok((0..n)
        .map(|k| {
            let pointwise: usize = profile.at_points.values().map(|b| b[k]).sum();
            let beta = (pointwise + profile.irrational[k]) as i64;
            let k = k as isize;
            at(k - 1) - 2 * at(k) + at(k + 1) + 2 + beta
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn totals() {
        assert_eq!(total_ramification(&twisted_cubic()).unwrap(), vec![0, 0, 0]);
        assert_eq!(total_ramification(&cuspidal_cubic()).unwrap(), vec![1, 1]);
        assert_eq!(total_ramification(&conic()).unwrap(), vec![0, 0]);
    }

    #[test]
    fn cusp_and_flex_of_cuspidal_cubic() {
        let c = cuspidal_cubic();
        assert_eq!(ramification_at(&c, &ProjPoint::t(0)).unwrap(), vec![1, 0]);
        assert_eq!(ramification_at(&c, &ProjPoint::Infinity).unwrap(), vec![0, 1]);
        assert_eq!(ramification_at(&c, &ProjPoint::t(1)).unwrap(), vec![0, 0]);
        let p = ramification_profile(&c).unwrap();
        assert_eq!(p.at_points.len(), 2);
        assert_eq!(p.irrational, vec![0, 0]);
        assert_eq!(plucker_residuals(&c).unwrap(), vec![0, 0]);
    }

    #[test]
    fn cusp_at_infinity() {
        // (s^3, s^2 t, t^3)
        let c = ParamCurve::from_ints(3, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]).unwrap();
        assert_eq!(total_ramification(&c).unwrap()[0], 1);
        assert_eq!(ramification_at(&c, &ProjPoint::Infinity).unwrap()[0], 1);
    }

    #[test]
    fn twisted_cubic_is_unramified() {
        let c = twisted_cubic();
        for p in [ProjPoint::t(0), ProjPoint::t(-3), ProjPoint::Infinity, ProjPoint::Finite(rat(1) / rat(2))] {
            assert_eq!(ramification_at(&c, &p).unwrap(), vec![0, 0, 0]);
        }
        assert!(ramification_profile(&c).unwrap().at_points.is_empty());
    }

    #[test]
    fn normal_form_fixtures() {
        // x_i = t^(i + β_0 + ... + β_(i-1)): exponents 0, 3, 4, 6 give β = (2, 0, 1)
        let c = ParamCurve::from_ints(
            6,
            &[
                &[1, 0, 0, 0, 0, 0, 0],
                &[0, 0, 0, 1, 0, 0, 0],
                &[0, 0, 0, 0, 1, 0, 0],
                &[0, 0, 0, 0, 0, 0, 1],
            ],
        )
        .unwrap();
        assert_eq!(ramification_at(&c, &ProjPoint::t(0)).unwrap(), vec![2, 0, 1]);
        assert_eq!(plucker_residuals(&c).unwrap(), vec![0, 0, 0]);
        // with higher-order terms: (1 + t, t^2 + t^3, t^4, t^5 + t^6), β(0) = (1, 1, 0)
        let c = ParamCurve::from_ints(
            6,
            &[
                &[1, 1, 0, 0, 0, 0, 0],
                &[0, 0, 1, 1, 0, 0, 0],
                &[0, 0, 0, 0, 1, 0, 0],
                &[0, 0, 0, 0, 0, 1, 1],
            ],
        )
        .unwrap();
        assert_eq!(ramification_at(&c, &ProjPoint::t(0)).unwrap(), vec![1, 1, 0]);
        assert_eq!(plucker_residuals(&c).unwrap(), vec![0, 0, 0]);
    }
}
