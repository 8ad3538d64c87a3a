//! Sparse multivariate polynomials over `Q` in variables `x0, x1, ...`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Signed;

use super::form::BinaryForm;
use super::poly::{clear_denominators, divide_content};
use super::ring::Ring;
use super::{rat, Rational};
use crate::error::{Error, Result};

/// Exponent vectors carry no trailing zeros, so the variable count is
/// implicit and `BTreeMap` order is lex order with `x0 > x1 > ...`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct MPoly {
    terms: BTreeMap<Vec<u32>, Rational>,
}

fn trim(mut e: Vec<u32>) -> Vec<u32> {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

impl MPoly {
    pub fn constant(c: Rational) -> Self {
        MPoly::from_terms([(Vec::new(), c)])
    }

    /// The variable `x_i`.
    pub fn var(i: usize) -> Self {
        let mut e = vec![0; i + 1];
        e[i] = 1;
        MPoly::from_terms([(e, rat(1))])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Self {
        let mut out = BTreeMap::new();
        for (e, c) in terms {
            add_term(&mut out, trim(e), c);
        }
        MPoly { terms: out }
    }

    /// Terms in descending lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading_term(&self) -> Option<(&Vec<u32>, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    /// Largest exponent of `x_i` dividing every term.
    pub fn var_order(&self, i: usize) -> u32 {
        self.terms
            .keys()
            .map(|e| e.get(i).copied().unwrap_or(0))
            .min()
            .unwrap_or(0)
    }

    /// Divide by `x_i^k`; every term must be divisible.
    pub fn div_var_power(&self, i: usize, k: u32) -> Result<Self> {
        if k == 0 {
            return Ok(self.clone());
        }
        if self.var_order(i) < k {
            return Err(Error::InternalInconsistency(format!("x{i}^{k} does not divide {self}")));
        }
        Ok(MPoly::from_terms(self.terms.iter().map(|(e, c)| {
            let mut e = e.clone();
            e[i] -= k;
            (e, c.clone())
        })))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if Ring::is_zero(c) {
            return MPoly::default();
        }
        MPoly {
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut total = rat(0);
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &k) in e.iter().enumerate() {
                let x = point.get(i).cloned().unwrap_or_else(|| rat(0));
                for _ in 0..k {
                    term *= &x;
                }
            }
            total += term;
        }
        total
    }

    /// Substitute binary forms of a common degree for the variables.
    /// The polynomial must be homogeneous.
    pub fn eval_forms(&self, forms: &[BinaryForm]) -> Result<BinaryForm> {
        let form_deg = forms.first().map_or(0, BinaryForm::degree);
        if forms.iter().any(|f| f.degree() != form_deg) {
            return Err(Error::DegreeMismatch("substituted forms must share a degree".into()));
        }
        if !self.is_homogeneous() {
            return Err(Error::DegreeMismatch(format!("{self} is not homogeneous")));
        }
        let total = self.total_degree().unwrap_or(0) as usize;
        let mut acc = BinaryForm::zero(total * form_deg);
        let mut powers: Vec<Vec<BinaryForm>> = forms
            .iter()
            .map(|_| vec![BinaryForm::monomial(rat(1), 0, 0)])
            .collect();
        for (e, c) in &self.terms {
            if e.len() > forms.len() {
                return Err(Error::DimensionMismatch(format!(
                    "{self} uses more than {} variables",
                    forms.len()
                )));
            }
            let mut term = BinaryForm::monomial(c.clone(), 0, 0);
            for (i, &k) in e.iter().enumerate() {
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap().mul(&forms[i]);
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][k as usize]);
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// Primitive integer multiple whose leading (lex) coefficient is positive.
    pub fn normalized(&self) -> Self {
        let coeffs: Vec<Rational> = self.terms.values().cloned().collect();
        let mut ints = divide_content(clear_denominators(&coeffs));
        if self.leading_term().is_some_and(|(_, c)| c.is_negative()) {
            ints.iter_mut().for_each(|c| *c = -&*c);
        }
        MPoly {
            terms: self
                .terms
                .keys()
                .cloned()
                .zip(ints.into_iter().map(Rational::from_integer))
                .collect(),
        }
    }
}

fn add_term(map: &mut BTreeMap<Vec<u32>, Rational>, e: Vec<u32>, c: Rational) {
    if Ring::is_zero(&c) {
        return;
    }
    match map.get_mut(&e) {
        Some(v) => {
            *v += c;
            if Ring::is_zero(v) {
                map.remove(&e);
            }
        }
        None => {
            map.insert(e, c);
        }
    }
}

impl Ring for MPoly {
    fn zero() -> Self {
        MPoly::default()
    }
    fn one() -> Self {
        MPoly::constant(rat(1))
    }
    fn from_int(n: i64) -> Self {
        MPoly::constant(rat(n))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, rhs: &Self) -> Self {
        let mut out = self.terms.clone();
        for (e, c) in &rhs.terms {
            add_term(&mut out, e.clone(), c.clone());
        }
        MPoly { terms: out }
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negated())
    }
    fn times(&self, rhs: &Self) -> Self {
        let mut out = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let n = ea.len().max(eb.len());
                let e: Vec<u32> = (0..n)
                    .map(|i| ea.get(i).copied().unwrap_or(0) + eb.get(i).copied().unwrap_or(0))
                    .collect();
                add_term(&mut out, e, ca * cb);
            }
        }
        MPoly { terms: out }
    }
    fn negated(&self) -> Self {
        MPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, e: &[u32]) -> fmt::Result {
    let mut first = true;
    for (i, &k) in e.iter().enumerate() {
        if k == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "x{i}")?;
        if k > 1 {
            write!(f, "^{k}")?;
        }
    }
    Ok(())
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let a = c.abs();
            if e.is_empty() {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                write_monomial(f, e)?;
            }
        }
        Ok(())
    }
}
