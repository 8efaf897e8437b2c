//! Reference trajectories from direct integration of the zonal field.
//!
//! Integration runs in units where the initial radius and the matching
//! circular time scale are one, so one tolerance serves every orbit size.

use ode_solvers::{Dop853, OutputType, System, Vector6};

use crate::error::{Error, Result};
use crate::gravity::GravityField;
use crate::state::CartesianState;

use super::zonal::zonal_acceleration;

pub const MIN_TOLERANCE: f64 = 1e-14;
pub const MAX_TOLERANCE: f64 = 1e-6;
const MAX_STEPS: u32 = 50_000_000;

struct Scaled {
    field: GravityField,
}

impl System<f64, Vector6<f64>> for Scaled {
    fn system(&self, _t: f64, y: &Vector6<f64>, dy: &mut Vector6<f64>) {
        let a = zonal_acceleration([y[0], y[1], y[2]], &self.field).unwrap_or([f64::NAN; 3]);
        dy[0] = y[3];
        dy[1] = y[4];
        dy[2] = y[5];
        dy[3] = a[0];
        dy[4] = a[1];
        dy[5] = a[2];
    }
}

struct Units {
    length: f64,
    time: f64,
}

impl Units {
    fn velocity(&self) -> f64 {
        self.length / self.time
    }

    fn pack(&self, cart: &CartesianState) -> Vector6<f64> {
        let (p, v) = (cart.position, cart.velocity);
        let w = self.velocity();
        Vector6::new(
            p[0] / self.length,
            p[1] / self.length,
            p[2] / self.length,
            v[0] / w,
            v[1] / w,
            v[2] / w,
        )
    }

    fn unpack(&self, y: &Vector6<f64>) -> CartesianState {
        let w = self.velocity();
        CartesianState::new(
            [y[0] * self.length, y[1] * self.length, y[2] * self.length],
            [y[3] * w, y[4] * w, y[5] * w],
        )
    }
}

fn setup(cart0: &CartesianState, field: &GravityField, tol: f64) -> Result<(Units, Scaled)> {
    field.validate()?;
    if !(MIN_TOLERANCE..=MAX_TOLERANCE).contains(&tol) {
        return Err(Error::Tolerance(tol));
    }
    if !cart0.is_finite() {
        return Err(Error::NonFinite("initial state"));
    }
    let length = cart0.radius();
    if !(length > 0.0) {
        return Err(Error::Degenerate("initial radius must be positive"));
    }
    let time = (length * length * length / field.mu).sqrt();
    let scaled = GravityField {
        mu: 1.0,
        alpha: field.alpha / length,
        ..*field
    };
    Ok((Units { length, time }, Scaled { field: scaled }))
}

fn step(sys: Scaled, y: Vector6<f64>, span: f64, tol: f64) -> Result<Vector6<f64>> {
    if span == 0.0 {
        return Ok(y);
    }
    let mut solver = Dop853::from_param(
        sys,
        0.0,
        span,
        span,
        y,
        tol,
        tol,
        0.9,
        0.0,
        0.333,
        6.0,
        span.abs(),
        0.0,
        MAX_STEPS,
        1000,
        OutputType::Sparse,
    );
    solver
        .integrate()
        .map_err(|e| Error::Integration(e.to_string()))?;
    let end = *solver
        .y_out()
        .last()
        .ok_or_else(|| Error::Integration("no output".into()))?;
    if end.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite("integrated state"));
    }
    Ok(end)
}

/// State at `t1` given the state at `t0`; `tol` is the relative and absolute
/// step tolerance in scaled units.
pub fn integrate(
    cart0: &CartesianState,
    t0: f64,
    t1: f64,
    field: &GravityField,
    tol: f64,
) -> Result<CartesianState> {
    Ok(integrate_grid(cart0, t0, &[t1], field, tol)?.remove(0))
}

/// States at each of `times`, integrating segment by segment from `t0`.
pub fn integrate_grid(
    cart0: &CartesianState,
    t0: f64,
    times: &[f64],
    field: &GravityField,
    tol: f64,
) -> Result<Vec<CartesianState>> {
    let (units, sys) = setup(cart0, field, tol)?;
    let mut y = units.pack(cart0);
    let mut t = t0;
    let mut out = Vec::with_capacity(times.len());
    for &next in times {
        if !next.is_finite() {
            return Err(Error::NonFinite("output time"));
        }
        y = step(Scaled { field: sys.field }, y, (next - t) / units.time, tol)?;
        t = next;
        out.push(units.unpack(&y));
    }
    Ok(out)
}
