//! Analytic ephemerides measured against direct integration.

use crate::error::Result;
use crate::propagator::{ephemeris, mean_to_osculating, osculating_to_mean, PropagatorConfig};
use crate::state::{norm, CartesianState};

use super::integrator::integrate_grid;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EpochError {
    pub t: f64,
    pub position: f64,
    pub velocity: f64,
}

fn difference(a: &CartesianState, b: &CartesianState) -> (f64, f64) {
    let d = |u: [f64; 3], v: [f64; 3]| norm([u[0] - v[0], u[1] - v[1], u[2] - v[2]]);
    (d(a.position, b.position), d(a.velocity, b.velocity))
}

/// Position and velocity differences between the analytic ephemeris and
/// the integrated trajectory of the same field.
pub fn compare(
    cart0: &CartesianState,
    t0: f64,
    times: &[f64],
    config: &PropagatorConfig,
    tol: f64,
) -> Result<Vec<EpochError>> {
    let analytic = ephemeris(cart0, t0, times, config)?;
    let numeric = integrate_grid(cart0, t0, times, &config.field, tol)?;
    Ok(times
        .iter()
        .zip(analytic.iter().zip(&numeric))
        .map(|(&t, (a, n))| {
            let (position, velocity) = difference(a, n);
            EpochError { t, position, velocity }
        })
        .collect())
}

pub fn rms(values: impl IntoIterator<Item = f64>) -> f64 {
    let (sum, n) = values
        .into_iter()
        .fold((0.0, 0usize), |(s, n), v| (s + v * v, n + 1));
    if n == 0 {
        0.0
    } else {
        (sum / n as f64).sqrt()
    }
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn loglog_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    sxy / sxx
}

/// RMS position error against the integrator for each multiple of `c20`.
pub fn inflation_study(
    cart0: &CartesianState,
    t0: f64,
    times: &[f64],
    config: &PropagatorConfig,
    multipliers: &[f64],
    tol: f64,
) -> Result<Vec<(f64, f64)>> {
    multipliers
        .iter()
        .map(|&m| {
            let scaled = PropagatorConfig {
                field: config.field.with_c20_scaled(m),
                ..*config
            };
            let errors = compare(cart0, t0, times, &scaled, tol)?;
            Ok((m, rms(errors.iter().map(|e| e.position))))
        })
        .collect()
}

/// Position and velocity change after removing and restoring the periodic
/// corrections.
pub fn inverse_residual(cart: &CartesianState, config: &PropagatorConfig) -> Result<(f64, f64)> {
    let mean = osculating_to_mean(cart, 0.0, config)?;
    let back = mean_to_osculating(&mean, config)?;
    Ok(difference(&back, cart))
}
