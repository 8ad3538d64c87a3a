//! Algebraic identities checked on random inputs.

use curveclass_core::algebra::det::{bareiss_det, berkowitz_det, rational_det};
use curveclass_core::algebra::resultant::resultant;
use curveclass_core::algebra::{rat, BinaryForm, MPoly, PolyMatrix, PolyVector, ProjPoint, QPoly, Rational};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| rat(n) / rat(d))
}

fn form(max_degree: usize) -> impl Strategy<Value = BinaryForm> {
    (0..=max_degree).prop_flat_map(|d| {
        prop::collection::vec(rational(), d + 1).prop_map(move |c| BinaryForm::new(d, c).unwrap())
    })
}

fn vec_of_degree(d: usize) -> impl Strategy<Value = Vec<BinaryForm>> {
    prop::collection::vec(prop::collection::vec(rational(), d + 1).prop_map(move |c| BinaryForm::new(d, c).unwrap()), 4)
}

fn qpoly(max_degree: usize) -> impl Strategy<Value = QPoly> {
    prop::collection::vec(rational(), 1..=max_degree + 1).prop_map(QPoly::new)
}

fn matrix(n: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    prop::collection::vec(prop::collection::vec(rational(), n), n)
}

/// Product over factors `(b s - a t)` vanishing at `a:b`, plus `s` for the
/// point at infinity, from a multiset of small rational roots.
fn split_form(roots: &[(i64, usize)], infinity: usize) -> BinaryForm {
    let mut f = BinaryForm::from_ints(0, &[1]).unwrap();
    for &(r, m) in roots {
        let lin = BinaryForm::new(1, vec![rat(-r), rat(1)]).unwrap();
        f = f.mul(&lin.pow(m));
    }
    f.mul(&BinaryForm::from_ints(1, &[1, 0]).unwrap().pow(infinity))
}

/// Cofactor expansion along the first row.
fn laplace(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    if n == 0 {
        return rat(1);
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<Rational>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
                .collect();
            let term = &m[0][j] * laplace(&minor);
            if j % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .fold(rat(0), |a, b| a + b)
}

proptest! {
    #[test]
    fn leibniz_rule(f in form(8), g in form(8)) {
        // affine views, since the derivative of a constant keeps degree 0
        let lhs = f.mul(&g).derivative_t().affine();
        let rhs = &(&f.derivative_t().affine() * &g.affine()) + &(&f.affine() * &g.derivative_t().affine());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gcd_degree_is_sum_of_min_valuations(
        rf in prop::collection::vec((-3i64..=3, 0usize..=3), 0..4),
        rg in prop::collection::vec((-3i64..=3, 0usize..=3), 0..4),
        inf_f in 0usize..=2,
        inf_g in 0usize..=2,
    ) {
        let f = split_form(&rf, inf_f);
        let g = split_form(&rg, inf_g);
        let gcd = f.gcd(&g).unwrap();
        let mut points: Vec<ProjPoint> = rf.iter().chain(&rg).map(|&(r, _)| ProjPoint::t(r)).collect();
        points.push(ProjPoint::Infinity);
        points.sort();
        points.dedup();
        let total: usize = points
            .iter()
            .map(|p| f.valuation(p).unwrap().min(g.valuation(p).unwrap()))
            .sum();
        prop_assert_eq!(gcd.degree(), total);
    }

    #[test]
    fn valuation_ignores_scaling(f in form(6), c in rational(), r in -3i64..=3) {
        prop_assume!(!f.is_zero() && c != rat(0));
        for p in [ProjPoint::t(r), ProjPoint::Infinity] {
            prop_assert_eq!(f.valuation(&p).unwrap(), f.scale(&c).valuation(&p).unwrap());
        }
    }

    #[test]
    fn equal_rows_give_zero_minors(
        (row, other) in (0usize..=3).prop_flat_map(|d| (vec_of_degree(d), (0usize..=3).prop_flat_map(vec_of_degree)))
    ) {
        let v = PolyVector::new(row).unwrap();
        let w = PolyVector::new(other).unwrap();
        let square = PolyMatrix::new(vec![v.clone(), w, v]).unwrap();
        prop_assert!(square.minors(3).unwrap().is_zero());
        let pair = PolyMatrix::new(vec![square.rows()[0].clone(), square.rows()[2].clone()]).unwrap();
        prop_assert!(pair.minors(2).unwrap().is_zero());
    }

    #[test]
    fn determinants_agree(m in (1usize..=5).prop_flat_map(matrix)) {
        let expected = laplace(&m);
        prop_assert_eq!(rational_det(m.clone()), expected.clone());
        prop_assert_eq!(berkowitz_det(&m), expected.clone());
        let as_polys: Vec<Vec<QPoly>> = m.iter().map(|r| r.iter().map(|x| QPoly::new(vec![x.clone()])).collect()).collect();
        prop_assert_eq!(bareiss_det(as_polys), QPoly::new(vec![expected]));
    }

    #[test]
    fn resultant_is_multiplicative(f in qpoly(3), g in qpoly(3), h in qpoly(3)) {
        let fg = &f * &g;
        prop_assert_eq!(resultant(&fg, &h), resultant(&f, &h) * resultant(&g, &h));
    }

    #[test]
    fn mpoly_evaluation_is_a_ring_map(
        a in prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), rational()), 1..5),
        b in prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), rational()), 1..5),
        x in prop::collection::vec(rational(), 3),
    ) {
        use curveclass_core::algebra::Ring;
        let mk = |t: &Vec<((u32, u32, u32), Rational)>| {
            MPoly::from_terms(t.iter().map(|((i, j, k), c)| (vec![*i, *j, *k], c.clone())))
        };
        let (f, g) = (mk(&a), mk(&b));
        prop_assert_eq!(f.times(&g).eval(&x), f.eval(&x) * g.eval(&x));
        prop_assert_eq!(f.plus(&g).eval(&x), f.eval(&x) + g.eval(&x));
    }
}
