//! Selection-region relay routing for ad hoc networks with directional
//! antennas: closed-form expected density of progress, optimizers for the
//! reference distance and transmission probability, and a seeded
//! Monte-Carlo simulator that checks the closed forms.

// `!(x > 0.0)` is used on purpose so NaN lands on the error path.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analytic;
pub mod model;
pub mod optimize;
pub mod simulate;
#[allow(clippy::excessive_precision)]
pub mod specfun;
pub mod stats;

pub use analytic::{AnalyticError, BoundForm, ProgressModel, StationarityResiduals};
pub use model::{DerivedConstants, ModelError, NetworkParams, ProtocolVariant};
pub use optimize::{OptimizationResult, OptimizeError, OptimizeOptions, StationaryPoint};
pub use simulate::{ProgressEstimate, SimConfig, SimError, TrialSample};
pub use specfun::{QuadratureResult, SpecfunError};
