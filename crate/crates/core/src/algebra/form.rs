//! Homogeneous binary forms in `(s, t)` and vectors/matrices of them.
//!
//! A form of degree `D` stores `D + 1` coefficients, index `j` holding the
//! coefficient of `s^(D-j) t^j`. Setting `s = 1` therefore reads the
//! coefficients as an ascending polynomial in `t`; the chart at `t = ∞`
//! (`t = 1`, `u = s`) reads them in reverse. The zero form keeps its degree
//! so that vectors of forms stay homogeneous.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::det::bareiss_det;
use super::poly::{clear_denominators, divide_content, QPoly};
use super::{rat, Rational};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BinaryForm {
    degree: usize,
    coeffs: Vec<Rational>,
}

/// A rational point `(s : t)` of the parameter line.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum ProjPoint {
    /// `(1 : t0)`.
    Finite(Rational),
    /// `(0 : 1)`.
    Infinity,
}

impl ProjPoint {
    /// The point `(a : b)`, i.e. `s = a`, `t = b`.
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        if a.is_zero() {
            if b.is_zero() {
                return Err(Error::Parse("(0 : 0) is not a point".into()));
            }
            Ok(ProjPoint::Infinity)
        } else {
            Ok(ProjPoint::Finite(b / a))
        }
    }

    pub fn t(t0: i64) -> Self {
        ProjPoint::Finite(rat(t0))
    }

    /// Parse `"inf"`, `"a:b"` or a single rational `t0`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.eq_ignore_ascii_case("inf") || text == "∞" {
            return Ok(ProjPoint::Infinity);
        }
        if let Some((a, b)) = text.split_once(':') {
            return ProjPoint::new(parse_rational(a)?, parse_rational(b)?);
        }
        Ok(ProjPoint::Finite(parse_rational(text)?))
    }
}

impl Ord for ProjPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ProjPoint::Finite(a), ProjPoint::Finite(b)) => a.cmp(b),
            (ProjPoint::Finite(_), ProjPoint::Infinity) => Ordering::Less,
            (ProjPoint::Infinity, ProjPoint::Finite(_)) => Ordering::Greater,
            (ProjPoint::Infinity, ProjPoint::Infinity) => Ordering::Equal,
        }
    }
}

impl PartialOrd for ProjPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjPoint::Finite(t) => write!(f, "1:{t}"),
            ProjPoint::Infinity => write!(f, "0:1"),
        }
    }
}

pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let parsed = match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad_rational(text))?;
            let d: BigInt = d.trim().parse().map_err(|_| bad_rational(text))?;
            if d.is_zero() {
                return Err(bad_rational(text));
            }
            Rational::new(n, d)
        }
        None => Rational::from_integer(text.parse().map_err(|_| bad_rational(text))?),
    };
    Ok(parsed)
}

fn bad_rational(text: &str) -> Error {
    Error::Parse(format!("invalid rational {text:?}"))
}

impl BinaryForm {
    pub fn new(degree: usize, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != degree + 1 {
            return Err(Error::DegreeMismatch(format!(
                "degree {degree} form needs {} coefficients, got {}",
                degree + 1,
                coeffs.len()
            )));
        }
        Ok(BinaryForm { degree, coeffs })
    }

    pub fn from_ints(degree: usize, coeffs: &[i64]) -> Result<Self> {
        BinaryForm::new(degree, coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero(degree: usize) -> Self {
        BinaryForm {
            degree,
            coeffs: vec![Rational::zero(); degree + 1],
        }
    }

    /// `c * s^(degree-j) t^j`
    pub fn monomial(c: Rational, degree: usize, j: usize) -> Self {
        let mut f = BinaryForm::zero(degree);
        f.coeffs[j] = c;
        f
    }

    /// Homogenize an affine polynomial in `t` to the given degree.
    pub fn from_affine(p: &QPoly, degree: usize) -> Result<Self> {
        if p.degree().is_some_and(|d| d > degree) {
            return Err(Error::DegreeMismatch(format!(
                "affine degree {} exceeds form degree {degree}",
                p.degree().unwrap()
            )));
        }
        Ok(BinaryForm {
            degree,
            coeffs: (0..=degree).map(|j| p.coeff(j)).collect(),
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Dehomogenize at `s = 1`.
    pub fn affine(&self) -> QPoly {
        QPoly::new(self.coeffs.clone())
    }

    /// Dehomogenize at `t = 1`, as a polynomial in `u = s`.
    pub fn u_chart(&self) -> QPoly {
        QPoly::new(self.coeffs.iter().rev().cloned().collect())
    }

    pub fn evaluate(&self, s: &Rational, t: &Rational) -> Rational {
        let d = self.degree;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| c * pow(s, d - j) * pow(t, j))
            .fold(Rational::zero(), |a, b| a + b)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        BinaryForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    fn check_same_degree(&self, other: &BinaryForm) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(format!(
                "cannot add forms of degrees {} and {}",
                self.degree, other.degree
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &BinaryForm) -> Result<Self> {
        self.check_same_degree(other)?;
        Ok(BinaryForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &BinaryForm) -> Result<Self> {
        self.check_same_degree(other)?;
        Ok(BinaryForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn mul(&self, other: &BinaryForm) -> Self {
        let mut coeffs = vec![Rational::zero(); self.degree + other.degree + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        BinaryForm {
            degree: self.degree + other.degree,
            coeffs,
        }
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(BinaryForm::monomial(Rational::one(), 0, 0), |acc, _| acc.mul(self))
    }

    /// Formal `∂/∂t`, a form of degree `D - 1`; zero for constants.
    pub fn derivative_t(&self) -> Self {
        if self.degree == 0 {
            return BinaryForm::zero(0);
        }
        BinaryForm {
            degree: self.degree - 1,
            coeffs: (1..=self.degree)
                .map(|j| &self.coeffs[j] * rat(j as i64))
                .collect(),
        }
    }

    /// `s * ∂f/∂t`, keeping degree `D`. Used to stack frames with their
    /// derivatives as matrices of common row degree.
    pub fn lifted_derivative_t(&self) -> Self {
        let mut coeffs = vec![Rational::zero(); self.degree + 1];
        for j in 1..=self.degree {
            coeffs[j - 1] = &self.coeffs[j] * rat(j as i64);
        }
        BinaryForm {
            degree: self.degree,
            coeffs,
        }
    }

    /// Power of `s` dividing the form (its order at `t = ∞`).
    pub fn s_order(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroForm);
        }
        let top = self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap();
        Ok(self.degree - top)
    }

    /// Divide by `s^k`; errors unless the division is exact.
    pub fn div_s_power(&self, k: usize) -> Result<Self> {
        if k > self.degree {
            if self.is_zero() {
                return Ok(BinaryForm::zero(0));
            }
            return Err(Error::InternalInconsistency(format!(
                "s^{k} does not divide a form of degree {}",
                self.degree
            )));
        }
        let new_degree = self.degree - k;
        if self.coeffs[new_degree + 1..].iter().any(|c| !c.is_zero()) {
            return Err(Error::InternalInconsistency(format!("s^{k} does not divide {self}")));
        }
        Ok(BinaryForm {
            degree: new_degree,
            coeffs: self.coeffs[..=new_degree].to_vec(),
        })
    }

    /// Exact division by a nonzero form.
    pub fn div_exact(&self, divisor: &BinaryForm) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::ZeroForm);
        }
        if divisor.degree > self.degree {
            if self.is_zero() {
                return Ok(BinaryForm::zero(0));
            }
            return Err(Error::InternalInconsistency(format!("{divisor} does not divide {self}")));
        }
        let qdeg = self.degree - divisor.degree;
        let ds = divisor.s_order()?;
        let shifted = self.div_s_power(ds)?;
        let quotient = shifted
            .affine()
            .exact_div(&divisor.affine())
            .ok_or_else(|| Error::InternalInconsistency(format!("{divisor} does not divide {self}")))?;
        BinaryForm::from_affine(&quotient, qdeg)
    }

    /// Multiplicity of the linear factor `(b s - a t)` vanishing at `p = (a : b)`.
    pub fn valuation(&self, p: &ProjPoint) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroForm);
        }
        match p {
            ProjPoint::Infinity => self.s_order(),
            ProjPoint::Finite(t0) => Ok(self.affine().root_multiplicity(t0).unwrap()),
        }
    }

    /// `f(a s + b t, c s + d t)`.
    pub fn substitute_linear(&self, a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> Self {
        let first = BinaryForm::new(1, vec![a.clone(), b.clone()]).unwrap();
        let second = BinaryForm::new(1, vec![c.clone(), d.clone()]).unwrap();
        let mut acc = BinaryForm::zero(self.degree);
        for (j, coeff) in self.coeffs.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let term = first.pow(self.degree - j).mul(&second.pow(j)).scale(coeff);
            acc = acc.add(&term).unwrap();
        }
        acc
    }

    /// Integer coefficients with gcd 1 and positive first nonzero
    /// coefficient. The zero form is returned unchanged.
    pub fn canonical(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut ints = divide_content(clear_denominators(&self.coeffs));
        if ints.iter().find(|c| !c.is_zero()).unwrap().is_negative() {
            ints.iter_mut().for_each(|c| *c = -&*c);
        }
        BinaryForm {
            degree: self.degree,
            coeffs: ints.into_iter().map(Rational::from_integer).collect(),
        }
    }

    /// Canonical gcd of two forms, not both zero.
    pub fn gcd(&self, other: &BinaryForm) -> Result<Self> {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => Err(Error::ZeroForm),
            (false, true) => Ok(self.canonical()),
            (true, false) => Ok(other.canonical()),
            (false, false) => {
                let s_pow = self.s_order()?.min(other.s_order()?);
                let g = self.affine().gcd(&other.affine());
                let deg = s_pow + g.degree().unwrap();
                Ok(BinaryForm::from_affine(&g, deg)?.canonical())
            }
        }
    }

    /// gcd of several forms, ignoring zeros; errors if all are zero.
    pub fn gcd_all<'a>(forms: impl IntoIterator<Item = &'a BinaryForm>) -> Result<Self> {
        let mut acc: Option<BinaryForm> = None;
        for f in forms {
            if f.is_zero() {
                continue;
            }
            acc = Some(match acc {
                None => f.canonical(),
                Some(g) => g.gcd(f)?,
            });
        }
        acc.ok_or(Error::ZeroForm)
    }
}

fn pow(x: &Rational, e: usize) -> Rational {
    (0..e).fold(Rational::one(), |acc, _| acc * x)
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let d = self.degree;
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let a = c.abs();
            let mut factors = Vec::new();
            if !a.is_one() || d == 0 {
                factors.push(a.to_string());
            }
            for (var, e) in [("s", d - j), ("t", j)] {
                match e {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    _ => factors.push(format!("{var}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// Entries of equal degree, e.g. the coordinates of a curve.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PolyVector {
    entries: Vec<BinaryForm>,
}

impl PolyVector {
    pub fn new(entries: Vec<BinaryForm>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::DimensionMismatch("empty vector of forms".into()));
        }
        let d = entries[0].degree();
        if let Some(bad) = entries.iter().find(|e| e.degree() != d) {
            return Err(Error::DegreeMismatch(format!(
                "vector entries must share degree {d}, found {}",
                bad.degree()
            )));
        }
        Ok(PolyVector { entries })
    }

    pub fn entries(&self) -> &[BinaryForm] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<BinaryForm> {
        self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.entries[0].degree()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(BinaryForm::is_zero)
    }

    /// gcd of the entries.
    pub fn content(&self) -> Result<BinaryForm> {
        BinaryForm::gcd_all(&self.entries)
    }

    pub fn map(&self, f: impl Fn(&BinaryForm) -> BinaryForm) -> Self {
        PolyVector::new(self.entries.iter().map(f).collect()).unwrap()
    }

    pub fn derivative_t(&self) -> Self {
        self.map(BinaryForm::derivative_t)
    }

    pub fn lifted_derivative_t(&self) -> Self {
        self.map(BinaryForm::lifted_derivative_t)
    }

    pub fn div_s_power(&self, k: usize) -> Result<Self> {
        PolyVector::new(
            self.entries
                .iter()
                .map(|e| e.div_s_power(k))
                .collect::<Result<_>>()?,
        )
    }

    pub fn div_exact(&self, divisor: &BinaryForm) -> Result<Self> {
        let deg = self
            .degree()
            .checked_sub(divisor.degree())
            .ok_or_else(|| Error::InternalInconsistency("divisor degree too large".into()))?;
        PolyVector::new(
            self.entries
                .iter()
                .map(|e| if e.is_zero() { Ok(BinaryForm::zero(deg)) } else { e.div_exact(divisor) })
                .collect::<Result<_>>()?,
        )
    }

    /// Divide by the content, clear denominators, remove the integer content
    /// and make the first nonzero coefficient of the first nonzero entry
    /// positive. Returns the reduced vector and the removed content.
    pub fn content_free(&self) -> Result<(PolyVector, BinaryForm)> {
        let content = self.content()?;
        let reduced = self.div_exact(&content)?;
        Ok((reduced.normalized(), content))
    }

    /// Canonical scaling by a nonzero rational only.
    pub fn normalized(&self) -> PolyVector {
        if self.is_zero() {
            return self.clone();
        }
        let all: Vec<Rational> = self.entries.iter().flat_map(|e| e.coeffs().iter().cloned()).collect();
        let mut ints = divide_content(clear_denominators(&all));
        if ints.iter().find(|c| !c.is_zero()).unwrap().is_negative() {
            ints.iter_mut().for_each(|c| *c = -&*c);
        }
        let width = self.degree() + 1;
        let entries = ints
            .chunks(width)
            .map(|chunk| {
                BinaryForm::new(width - 1, chunk.iter().cloned().map(Rational::from_integer).collect()).unwrap()
            })
            .collect();
        PolyVector { entries }
    }

    /// Scalar product `Σ x_i y_i`.
    pub fn dot(&self, other: &PolyVector) -> Result<BinaryForm> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch(format!(
                "dot product of lengths {} and {}",
                self.len(),
                other.len()
            )));
        }
        let mut acc = BinaryForm::zero(self.degree() + other.degree());
        for (a, b) in self.entries.iter().zip(&other.entries) {
            acc = acc.add(&a.mul(b))?;
        }
        Ok(acc)
    }

    /// True iff the two vectors are proportional over the function field,
    /// i.e. every 2x2 minor `x_i y_j - x_j y_i` vanishes identically.
    pub fn is_proportional(&self, other: &PolyVector) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let n = self.len();
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                let a = self.entries[i].mul(&other.entries[j]);
                let b = self.entries[j].mul(&other.entries[i]);
                a.sub(&b).map(|r| r.is_zero()).unwrap_or(false)
            })
        })
    }
}

impl fmt::Display for PolyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Rows of forms; row degrees may differ, row lengths may not.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    rows: Vec<PolyVector>,
}

impl PolyMatrix {
    pub fn new(rows: Vec<PolyVector>) -> Result<Self> {
        if let Some(first) = rows.first() {
            if rows.iter().any(|r| r.len() != first.len()) {
                return Err(Error::DimensionMismatch("rows of unequal length".into()));
            }
        }
        Ok(PolyMatrix { rows })
    }

    pub fn rows(&self) -> &[PolyVector] {
        &self.rows
    }

    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, PolyVector::len)
    }

    /// All `size x size` minors of the first `size` rows, column subsets in
    /// lexicographic order.
    pub fn minors(&self, size: usize) -> Result<PolyVector> {
        if size == 0 || self.rows.len() < size || self.ncols() < size {
            return Err(Error::DimensionMismatch(format!(
                "{size}-minors of a {}x{} matrix",
                self.rows.len(),
                self.ncols()
            )));
        }
        let rows = &self.rows[..size];
        let total_degree: usize = rows.iter().map(PolyVector::degree).sum();
        let affine: Vec<Vec<QPoly>> = rows
            .iter()
            .map(|r| r.entries().iter().map(BinaryForm::affine).collect())
            .collect();
        let minors = column_subsets(self.ncols(), size)
            .into_iter()
            .map(|cols| {
                let m: Vec<Vec<QPoly>> = affine
                    .iter()
                    .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
                    .collect();
                BinaryForm::from_affine(&bareiss_det(m), total_degree)
            })
            .collect::<Result<Vec<_>>>()?;
        PolyVector::new(minors)
    }
}

/// Increasing `k`-subsets of `0..n` in lexicographic order.
pub fn column_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            if n - i < k - current.len() {
                break;
            }
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}
