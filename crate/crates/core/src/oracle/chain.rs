//! First-order image of polar-nodal corrections in the nonsingular variables.
//!
//! With `psi = theta + k nu` (`k` the chart sign), `xi = s sin(theta)` and
//! `chi = s cos(theta)`, a small change `(dtheta, dnu, dTheta, dN)` moves
//! the nonsingular angles by
//!
//! ```text
//! dpsi = dtheta + k dnu
//! dxi  =  chi dtheta + xi ds / s
//! dchi = -xi dtheta + chi ds / s
//! s ds = c^2 dTheta / Theta - c dN / Theta,   c = N / Theta
//! ```

use crate::corrections::{NonsingularDeltas, PolarNodalDeltas};
use crate::error::{Error, Result};
use crate::gravity::GravityField;
use crate::long_period::long_corrections_polar;
use crate::short_period::short_corrections_polar;
use crate::state::{Chart, PolarNodalState, EQUATORIAL_TOLERANCE};

pub fn nonsingular_image(pn: &PolarNodalState, d: &PolarNodalDeltas) -> Result<NonsingularDeltas> {
    pn.validate()?;
    let s = pn.sin_incl();
    if !(s > EQUATORIAL_TOLERANCE) {
        return Err(Error::Equatorial(s));
    }
    let k = Chart::for_polar_momentum(pn.big_n).sign();
    let (st, ct) = pn.theta.sin_cos();
    let (xi, chi) = (s * st, s * ct);
    let c = pn.big_n / pn.big_theta;
    let ds_over_s = c * (c * d.big_theta - d.big_n) / (pn.big_theta * s * s);
    Ok(NonsingularDeltas {
        psi: d.theta + k * d.nu,
        xi: chi * d.theta + xi * ds_over_s,
        chi: -xi * d.theta + chi * ds_over_s,
        r: d.r,
        big_r: d.big_r,
        big_theta: d.big_theta,
        big_n: d.big_n,
    })
}

pub fn short_chain_image(pn: &PolarNodalState, field: &GravityField) -> Result<NonsingularDeltas> {
    nonsingular_image(pn, &short_corrections_polar(pn, field)?)
}

pub fn long_chain_image(
    pn: &PolarNodalState,
    field: &GravityField,
    guard_tolerance: f64,
) -> Result<NonsingularDeltas> {
    nonsingular_image(pn, &long_corrections_polar(pn, field, guard_tolerance)?)
}
