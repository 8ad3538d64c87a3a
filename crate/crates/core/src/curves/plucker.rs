//! Quadratic Grassmann–Plücker relations on Plücker vectors of forms.

use std::collections::HashMap;

use crate::algebra::{column_subsets, BinaryForm, PolyVector};
use crate::error::{Error, Result};

/// `p_(I ∪ {j})` with the sign that sorts `(i_1, ..., i_k, j)`; `None` when
/// `j ∈ I`.
fn signed_entry<'a>(
    p: &'a PolyVector,
    index: &HashMap<Vec<usize>, usize>,
    i: &[usize],
    j: usize,
) -> Option<(bool, &'a BinaryForm)> {
    if i.contains(&j) {
        return None;
    }
    let mut set = i.to_vec();
    set.push(j);
    set.sort_unstable();
    let negative = i.iter().filter(|&&x| x > j).count() % 2 == 1;
    Some((negative, &p.entries()[index[&set]]))
}

/// Every relation `Σ_l (-1)^l p_(I ∪ j_l) p_(J \ j_l)` for `|I| = k`,
/// `|J| = k + 2`, evaluated on the Plücker vector of a `(k+1)`-dimensional
/// subspace of a space of dimension `n + 1`. Relations that are trivially
/// zero are skipped.
pub fn plucker_relation_residuals(p: &PolyVector, n: usize, k: usize) -> Result<Vec<BinaryForm>> {
    let subsets = column_subsets(n + 1, k + 1);
    if p.len() != subsets.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} Plücker coordinates for {}-subsets of {} indices",
            p.len(),
            k + 1,
            n + 1
        )));
    }
    let index: HashMap<Vec<usize>, usize> = subsets.into_iter().enumerate().map(|(a, s)| (s, a)).collect();
    let mut out = Vec::new();
    if k + 2 > n + 1 {
        return Ok(out);
    }
    for i in column_subsets(n + 1, k) {
        for j in column_subsets(n + 1, k + 2) {
            let mut acc = BinaryForm::zero(2 * p.degree());
            let mut trivial = true;
            for (l, &jl) in j.iter().enumerate() {
                let Some((negative, left)) = signed_entry(p, &index, &i, jl) else {
                    continue;
                };
                let rest: Vec<usize> = j.iter().copied().filter(|&x| x != jl).collect();
                let right = &p.entries()[index[&rest]];
                let term = left.mul(right);
                trivial = false;
                acc = if negative ^ (l % 2 == 1) { acc.sub(&term)? } else { acc.add(&term)? };
            }
            if !trivial {
                out.push(acc);
            }
        }
    }
    Ok(out)
}

pub fn plucker_relations_hold(p: &PolyVector, n: usize, k: usize) -> Result<bool> {
    Ok(plucker_relation_residuals(p, n, k)?.iter().all(BinaryForm::is_zero))
}
