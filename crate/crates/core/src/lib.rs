//! Exact computations for equiclassical plane curve families and for
//! rational curves in projective space: numerical criteria with duality
//! closure, associated and dual curves, ramification, Plücker formulas and
//! integrability of curves in Grassmannians.

pub mod algebra;
pub mod criteria;
pub mod curves;
pub mod error;
pub mod invariants;
pub mod io;
mod serde_str;

pub use algebra::{BinaryForm, MPoly, PolyMatrix, PolyVector, ProjPoint, QPoly, Rational};
pub use criteria::{evaluate, CriteriaReport, CriterionId, Property, Route, Verdict};
pub use error::{Error, Result};
pub use invariants::{ClassTriple, DeltaKappa, NodalCuspidal};
pub use curves::{AssociatedCurve, GrassFrame, Integrability, ParamCurve, RamificationProfile};
