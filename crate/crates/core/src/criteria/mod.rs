//! Numerical criteria for equiclassical families `V(d, g, c)`.

pub mod catalog;
pub mod engine;
pub mod strata;
pub mod sweep;

pub use catalog::{check, CriterionId, EvalOptions, Numbers, Property, Route};
pub use engine::{
    emptiness_reason, evaluate, evaluate_with, Certificate, CriteriaReport, Edge, EdgeType,
    PropertyVerdict, Verdict,
};
pub use strata::{incidence_edges, strata_graph, StrataConfig, StrataGraph};
pub use sweep::{dual_sweep, dual_sweep_degrees, SweepRow};
