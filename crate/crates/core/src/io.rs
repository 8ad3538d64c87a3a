//! File formats for curves and frames. Coefficients are rational strings
//! (`"3"`, `"-2/5"`); plain JSON integers are accepted on input.

use serde::{Deserialize, Serialize};

use crate::algebra::{parse_rational, BinaryForm, PolyVector, Rational};
use crate::curves::{GrassFrame, ParamCurve};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coeff {
    Text(String),
    Int(i64),
}

impl Coeff {
    fn value(&self) -> Result<Rational> {
        match self {
            Coeff::Text(s) => parse_rational(s),
            Coeff::Int(i) => Ok(Rational::from_integer((*i).into())),
        }
    }
}

impl From<&Rational> for Coeff {
    fn from(r: &Rational) -> Self {
        Coeff::Text(r.to_string())
    }
}

fn vector_from(degree: usize, coords: &[Vec<Coeff>]) -> Result<PolyVector> {
    let forms = coords
        .iter()
        .enumerate()
        .map(|(i, cs)| {
            if cs.len() != degree + 1 {
                return Err(Error::DegreeMismatch(format!(
                    "coordinate {i} has {} coefficients, degree {degree} needs {}",
                    cs.len(),
                    degree + 1
                )));
            }
            BinaryForm::new(degree, cs.iter().map(Coeff::value).collect::<Result<_>>()?)
        })
        .collect::<Result<Vec<_>>>()?;
    PolyVector::new(forms)
}

fn vector_to(v: &PolyVector) -> Vec<Vec<Coeff>> {
    v.entries()
        .iter()
        .map(|f| f.coeffs().iter().map(Coeff::from).collect())
        .collect()
}

fn check_dim(declared: usize, found: usize) -> Result<()> {
    if declared + 1 != found {
        return Err(Error::DimensionMismatch(format!(
            "ambient_dim {declared} needs {} coordinates, found {found}",
            declared + 1
        )));
    }
    Ok(())
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CurveFile {
    pub ambient_dim: usize,
    pub degree: usize,
    pub coords: Vec<Vec<Coeff>>,
}

impl CurveFile {
    pub fn to_curve(&self) -> Result<ParamCurve> {
        check_dim(self.ambient_dim, self.coords.len())?;
        ParamCurve::new(vector_from(self.degree, &self.coords)?)
    }

    /// Canonically normalized file for a curve.
    pub fn from_curve(c: &ParamCurve) -> Self {
        let v = c.coords().normalized();
        CurveFile {
            ambient_dim: c.ambient_dim(),
            degree: c.degree(),
            coords: vector_to(&v),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FrameFile {
    pub ambient_dim: usize,
    pub degree: usize,
    pub level: usize,
    pub rows: Vec<Vec<Vec<Coeff>>>,
}

impl FrameFile {
    pub fn to_frame(&self) -> Result<GrassFrame> {
        if self.rows.len() != self.level + 1 {
            return Err(Error::DimensionMismatch(format!(
                "level {} needs {} rows, found {}",
                self.level,
                self.level + 1,
                self.rows.len()
            )));
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                check_dim(self.ambient_dim, r.len())?;
                vector_from(self.degree, r)
            })
            .collect::<Result<Vec<_>>>()?;
        GrassFrame::new(rows)
    }

    /// Rows are written as given; each is scaled to a primitive integer
    /// vector, which does not change the spanned subspace.
    pub fn from_frame(f: &GrassFrame) -> Self {
        FrameFile {
            ambient_dim: f.ambient_dim(),
            degree: f.rows()[0].degree(),
            level: f.level(),
            rows: f.rows().iter().map(|r| vector_to(&r.normalized())).collect(),
        }
    }
}
