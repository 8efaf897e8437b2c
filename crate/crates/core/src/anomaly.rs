//! Orbit geometry: eccentricity projections, Kepler's equation and the
//! equation of the center.

use std::f64::consts::{PI, TAU};

use crate::error::{finite, Error, Result};
use crate::trig;

/// Eccentricities below this are treated as exactly circular.
pub const CIRCULAR_ECCENTRICITY: f64 = 1e-12;

const KEPLER_TOLERANCE: f64 = 1e-15;
const NEWTON_ITERATIONS: usize = 25;

/// Reduces an angle to (-pi, pi].
pub fn reduce_angle(x: f64) -> f64 {
    let mut y = x % TAU;
    if y > PI {
        y -= TAU;
    } else if y <= -PI {
        y += TAU;
    }
    y
}

/// Projections of the eccentricity vector on the radial frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrbitProjections {
    /// `p/r - 1`, equal to `e cos f`.
    pub kappa: f64,
    /// `p R / Theta`, equal to `e sin f`.
    pub sigma: f64,
    /// `sqrt(1 - e^2)`.
    pub eta: f64,
    pub e: f64,
    pub p: f64,
}

impl OrbitProjections {
    pub fn from_kappa_sigma(kappa: f64, sigma: f64, p: f64) -> Result<Self> {
        let e = kappa.hypot(sigma);
        if !(e < 1.0) {
            return Err(Error::NotElliptic(e));
        }
        let eta = ((1.0 - e) * (1.0 + e)).sqrt();
        Ok(OrbitProjections {
            kappa,
            sigma,
            eta,
            e,
            p,
        })
    }

    pub fn is_circular(&self) -> bool {
        self.e < CIRCULAR_ECCENTRICITY
    }
}

pub fn projections(r: f64, big_r: f64, big_theta: f64, mu: f64) -> Result<OrbitProjections> {
    finite(r, "radius")?;
    finite(big_r, "radial velocity")?;
    finite(big_theta, "angular momentum")?;
    if r <= 0.0 {
        return Err(Error::Degenerate("radius must be positive"));
    }
    if big_theta <= 0.0 {
        return Err(Error::Degenerate("angular momentum must be positive"));
    }
    let p = big_theta * big_theta / mu;
    OrbitProjections::from_kappa_sigma(p / r - 1.0, p * big_r / big_theta, p)
}

/// True, eccentric and mean anomaly of one point on the orbit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnomalyTriple {
    pub f: f64,
    pub u: f64,
    pub ell: f64,
}

impl AnomalyTriple {
    pub fn from_true(f: f64, e: f64) -> Result<Self> {
        check_eccentricity(e)?;
        let f = reduce_angle(f);
        let u = eccentric_from_true(f, e);
        Ok(AnomalyTriple {
            f,
            u,
            ell: reduce_angle(u - e * trig::sin(u)),
        })
    }

    pub fn from_mean(ell: f64, e: f64) -> Result<Self> {
        let u = solve_kepler(ell, e)?;
        Ok(AnomalyTriple {
            f: true_from_eccentric(u, e),
            u,
            ell: reduce_angle(ell),
        })
    }
}

fn check_eccentricity(e: f64) -> Result<()> {
    if (0.0..1.0).contains(&e) {
        Ok(())
    } else {
        Err(Error::KeplerDomain(e))
    }
}

/// Eccentric anomaly on the same branch as `f`.
pub fn eccentric_from_true(f: f64, e: f64) -> f64 {
    let (s, c) = trig::sin_cos(0.5 * f);
    2.0 * trig::atan2((1.0 - e).sqrt() * s, (1.0 + e).sqrt() * c)
}

/// True anomaly on the same branch as `u`.
pub fn true_from_eccentric(u: f64, e: f64) -> f64 {
    let (s, c) = trig::sin_cos(0.5 * u);
    2.0 * trig::atan2((1.0 + e).sqrt() * s, (1.0 - e).sqrt() * c)
}

/// Solves `u - e sin u = ell` for `u` in (-pi, pi].
///
/// Newton from `ell + e sin ell`; bisection takes over if Newton has not
/// converged after 25 iterations.
pub fn solve_kepler(ell: f64, e: f64) -> Result<f64> {
    check_eccentricity(e)?;
    finite(ell, "mean anomaly")?;
    let m = reduce_angle(ell);
    if e == 0.0 {
        return Ok(m);
    }
    let mut u = m + e * trig::sin(m);
    for _ in 0..NEWTON_ITERATIONS {
        let (s, c) = trig::sin_cos(u);
        let step = (u - e * s - m) / (1.0 - e * c);
        u -= step;
        if step.abs() < KEPLER_TOLERANCE {
            return Ok(reduce_angle(u));
        }
    }
    let residual = (u - e * trig::sin(u) - m).abs();
    if residual < 1e-15 && u.abs() <= PI {
        return Ok(reduce_angle(u));
    }
    bisect_kepler(m, e)
}

fn bisect_kepler(m: f64, e: f64) -> Result<f64> {
    // u - e sin u - m is increasing on [-pi, pi] and changes sign there.
    let (mut lo, mut hi) = (-PI, PI);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if mid - e * trig::sin(mid) - m < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let u = 0.5 * (lo + hi);
    let residual = (u - e * trig::sin(u) - m).abs();
    if residual < 1e-14 {
        Ok(u)
    } else {
        Err(Error::KeplerNoConvergence(residual))
    }
}

pub fn true_from_projections(proj: &OrbitProjections) -> Result<f64> {
    if proj.is_circular() {
        return Err(Error::Circular);
    }
    Ok(trig::atan2(proj.sigma, proj.kappa))
}

/// `f - ell` computed from `kappa` and `sigma` alone.
///
/// The eccentric anomaly comes from the half-angle relation written in
/// whichever of `sigma/(e + kappa)` or `(e - kappa)/sigma` avoids
/// cancellation, so `f` and `u` share a branch and `e sin u` reduces to
/// `eta sigma / (1 + kappa)`.
pub fn equation_of_center(proj: &OrbitProjections) -> f64 {
    if proj.is_circular() {
        return 0.0;
    }
    let OrbitProjections {
        kappa,
        sigma,
        eta,
        e,
        ..
    } = *proj;
    let f = trig::atan2(sigma, kappa);
    let (a, b) = ((1.0 - e).sqrt(), (1.0 + e).sqrt());
    let half_u = if kappa >= 0.0 {
        trig::atan2(a * sigma, b * (e + kappa))
    } else {
        let sign = if sigma.is_sign_negative() { -1.0 } else { 1.0 };
        trig::atan2(sign * a * (e - kappa), b * sigma.abs())
    };
    f - 2.0 * half_u + eta * sigma / (1.0 + kappa)
}

/// Partial derivatives of the equation of the center in polar-nodal momenta.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhiPartials {
    pub d_r: f64,
    pub d_big_r: f64,
    pub d_big_theta: f64,
}

pub fn phi_partials(r: f64, big_r: f64, big_theta: f64, mu: f64) -> Result<PhiPartials> {
    let proj = projections(r, big_r, big_theta, mu)?;
    Ok(phi_partials_from(&proj, r, big_theta))
}

pub(crate) fn phi_partials_from(proj: &OrbitProjections, r: f64, big_theta: f64) -> PhiPartials {
    let OrbitProjections {
        kappa,
        sigma,
        eta,
        p,
        ..
    } = *proj;
    let one_eta = 1.0 + eta;
    let one_kappa = 1.0 + kappa;
    PhiPartials {
        d_r: sigma / r * (one_kappa / one_eta + eta / one_kappa),
        d_big_r: p / big_theta * (kappa / one_eta + 2.0 * eta / one_kappa),
        d_big_theta: -sigma / big_theta * (2.0 + kappa) / one_eta,
    }
}
