//! Analytic propagation of orbits under the second and third zonal
//! harmonics, with periodic corrections written in nonsingular variables.

// `!(x > 0.0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod anomaly;
pub mod corrections;
pub mod error;
pub mod gravity;
pub mod long_period;
pub mod oracle;
pub mod propagator;
pub mod secular;
pub mod short_period;
pub mod state;
pub mod trig;

pub use corrections::{ApplyCorrection, Formulation, NonsingularDeltas, Orientation, PolarNodalDeltas};
pub use error::{Error, Result, Stage};
pub use gravity::GravityField;
pub use propagator::{
    ChartRates,
    ephemeris, mean_to_osculating, osculating_to_mean, FormulationChoice, MeanElements, MeanState,
    PropagatorConfig, Stages,
};
pub use state::{CartesianState, Chart, ClassicalElements, DelaunayState, NonsingularState, PolarNodalState};
