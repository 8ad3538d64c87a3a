//! Rational roots of univariate polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use super::poly::QPoly;
use super::Rational;

const TRIAL_LIMIT: u64 = 1 << 20;
const CANDIDATE_CAP: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalRoots {
    /// Distinct roots in increasing order with multiplicities.
    pub roots: Vec<(Rational, usize)>,
    /// False when the candidate search had to give up (huge coefficients).
    pub complete: bool,
}

/// Prime factorization by trial division; `None` if a cofactor could not be
/// certified prime within the trial bound.
fn factor(n: &BigInt) -> Option<Vec<(BigInt, u32)>> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p = 2u64;
    while p <= TRIAL_LIMIT {
        let bp = BigInt::from(p);
        if &bp * &bp > n {
            break;
        }
        let mut e = 0;
        while n.is_multiple_of(&bp) {
            n /= &bp;
            e += 1;
        }
        if e > 0 {
            out.push((bp, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > BigInt::from(1u8) {
        let limit = BigInt::from(TRIAL_LIMIT);
        if n > &limit * &limit {
            return None;
        }
        out.push((n, 1));
    }
    Some(out)
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let mut divs = vec![BigInt::from(1u8)];
    for (p, e) in factor(n)? {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = d.clone();
            for _ in 0..=e {
                next.push(pk.clone());
                pk *= &p;
            }
        }
        divs = next;
        if divs.len() > CANDIDATE_CAP {
            return None;
        }
    }
    Some(divs)
}

pub fn rational_roots(p: &QPoly) -> RationalRoots {
    let mut roots = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return RationalRoots { roots, complete: true };
    }
    let zero_mult = p.lowest_order().unwrap();
    if zero_mult > 0 {
        roots.push((Rational::from_integer(0.into()), zero_mult));
    }
    let ints = p.primitive_integer();
    let ints = &ints[zero_mult..];
    let (lead, constant) = (ints.last().unwrap(), &ints[0]);
    let mut complete = true;
    if ints.len() > 1 {
        match (divisors(constant), divisors(lead)) {
            (Some(num), Some(den)) if num.len().saturating_mul(den.len()) <= CANDIDATE_CAP => {
                let mut seen = std::collections::BTreeSet::new();
                for a in &num {
                    for b in &den {
                        for sign in [1, -1] {
                            let cand = Rational::new(a * sign, b.clone());
                            if !seen.insert(cand.clone()) {
                                continue;
                            }
                            if let Some(m) = p.root_multiplicity(&cand).filter(|&m| m > 0) {
                                roots.push((cand, m));
                            }
                        }
                    }
                }
            }
            _ => complete = false,
        }
    }
    roots.sort();
    RationalRoots { roots, complete }
}

/// Total multiplicity of the rational roots found.
pub fn rational_root_count(r: &RationalRoots) -> usize {
    r.roots.iter().map(|(_, m)| m).sum()
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn finds_roots_with_multiplicity() {
        // t^2 (t - 2)^3 (3t + 1) (t^2 + 1)
        let mut p = QPoly::from_ints(&[0, 0, 1]);
        for _ in 0..3 {
            p = &p * &QPoly::from_ints(&[-2, 1]);
        }
        p = &p * &QPoly::from_ints(&[1, 3]);
        p = &p * &QPoly::from_ints(&[1, 0, 1]);
        let r = rational_roots(&p);
        assert!(r.complete);
        assert_eq!(
            r.roots,
            vec![(Rational::new((-1).into(), 3.into()), 1), (rat(0), 2), (rat(2), 3)]
        );
        assert_eq!(rational_root_count(&r), 6);
    }

    #[test]
    fn constants_have_no_roots() {
        assert!(rational_roots(&QPoly::from_ints(&[5])).roots.is_empty());
        assert!(rational_roots(&QPoly::from_ints(&[1, 0, 1])).roots.is_empty());
    }
}
