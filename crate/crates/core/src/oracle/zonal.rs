//! Degree-two and degree-three zonal potential and its gradient.

use crate::error::{Error, Result};
use crate::gravity::GravityField;
use crate::state::{dot, norm, CartesianState, PolarNodalState};

fn radius(position: [f64; 3]) -> Result<f64> {
    let r = norm(position);
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::Degenerate("radius must be positive and finite"));
    }
    Ok(r)
}

/// `V = -mu/r - (mu/r) sum_m (alpha/r)^m c_m0 P_m(z/r)` for `m = 2, 3`.
pub fn zonal_potential(position: [f64; 3], field: &GravityField) -> Result<f64> {
    let r = radius(position)?;
    let x = position[2] / r;
    let a = field.alpha / r;
    let p2 = 0.5 * (3.0 * x * x - 1.0);
    let p3 = 0.5 * (5.0 * x * x - 3.0) * x;
    Ok(-field.mu / r * (1.0 + a * a * (field.c20 * p2 + a * field.c30 * p3)))
}

/// `-grad V`, central term included.
pub fn zonal_acceleration(position: [f64; 3], field: &GravityField) -> Result<[f64; 3]> {
    let r = radius(position)?;
    let [x, y, z] = position;
    let r2 = r * r;
    let zz = z * z / r2;
    let central = -field.mu / (r2 * r);
    let a2 = field.alpha * field.alpha;
    let k2 = 0.5 * field.mu * a2 * field.c20 / (r2 * r2 * r);
    let k3 = 0.5 * field.mu * a2 * field.alpha * field.c30 / (r2 * r2 * r2 * r);
    let radial = central + k2 * (3.0 - 15.0 * zz) + k3 * z * (15.0 - 35.0 * zz);
    let axial = 6.0 * k2 * z + k3 * (15.0 * z * z - 3.0 * r2);
    Ok([radial * x, radial * y, radial * z + axial])
}

/// Kinetic plus potential energy per unit mass.
pub fn total_energy(cart: &CartesianState, field: &GravityField) -> Result<f64> {
    Ok(0.5 * dot(cart.velocity, cart.velocity) + zonal_potential(cart.position, field)?)
}

/// Kepler term and the two zonal terms of the Hamiltonian; the energy is
/// `h00 + h10 + h20 / 2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HamiltonianTerms {
    pub h00: f64,
    pub h10: f64,
    pub h20: f64,
}

impl HamiltonianTerms {
    pub fn total(&self) -> f64 {
        self.h00 + self.h10 + 0.5 * self.h20
    }
}

/// Evaluated with `sin(latitude) = sin I sin(theta)` expanded in multiple angles.
pub fn hamiltonian_terms(pn: &PolarNodalState, field: &GravityField) -> Result<HamiltonianTerms> {
    pn.validate()?;
    let r = pn.r;
    let s = pn.sin_incl();
    let s2 = s * s;
    let a = field.alpha / r;
    let mu_r = field.mu / r;
    let vt = pn.big_theta / r;
    Ok(HamiltonianTerms {
        h00: 0.5 * (pn.big_r * pn.big_r + vt * vt) - mu_r,
        h10: mu_r * 0.25 * field.c20 * a * a * (2.0 - 3.0 * s2 + 3.0 * s2 * (2.0 * pn.theta).cos()),
        h20: mu_r
            * 0.5
            * field.c30
            * a
            * a
            * a
            * s
            * (6.0 * (1.0 - 1.25 * s2) * pn.theta.sin() + 2.5 * s2 * (3.0 * pn.theta).sin()),
    })
}
