//! Independent checks: exact dynamics, finite-difference brackets and the
//! Delaunay-form generating functions.

pub mod chain;
pub mod compare;
pub mod integrator;
pub mod poisson;
pub mod series;
pub mod zonal;

pub use chain::{long_chain_image, nonsingular_image, short_chain_image};
pub use integrator::{integrate, integrate_grid, MAX_TOLERANCE, MIN_TOLERANCE};
pub use poisson::{bracket_deltas, coordinate_bracket, poisson_bracket_fd, PolarCoordinate, DEFAULT_RELATIVE_STEP};
pub use series::{
    long_corrections_delaunay, short_corrections_delaunay, u1_delaunay, x1_delaunay, DelaunayDeltas,
};
pub use zonal::{hamiltonian_terms, total_energy, zonal_acceleration, zonal_potential, HamiltonianTerms};
pub use compare::{compare, inflation_study, inverse_residual, loglog_slope, rms, EpochError};
