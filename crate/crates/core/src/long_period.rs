//! First-order long-period generating function and corrections.
//!
//! The nonsingular forms are the chain-rule image of the polar-nodal ones
//! and tests hold them to it. The low-inclination forms are the limits of
//! the full ones as `sin I` goes to zero.

use crate::corrections::{Kernel, NonsingularDeltas, PolarNodalDeltas};
use crate::error::{Error, Result};
use crate::gravity::{critical_inclination_guard, p_coefficients, q_polynomials, GravityField};
use crate::state::{NonsingularState, PolarNodalState, CHART_TOLERANCE};
use crate::trig;

/// Smallest `sin I` for the polar-nodal `theta` and `nu` corrections when
/// the third harmonic is present.
pub const POLAR_FORM_MIN_SIN: f64 = 1e-12;

/// `(1 - 15c^2) / (4 (1 - 5c^2))`.
fn amplitude(c2: f64) -> f64 {
    (1.0 - 15.0 * c2) / (4.0 * (1.0 - 5.0 * c2))
}

/// Long-period generating function in polar-nodal variables.
pub fn y1(pn: &PolarNodalState, field: &GravityField, guard_tolerance: f64) -> Result<f64> {
    let k = Kernel::polar(pn, field)?;
    critical_inclination_guard(k.c, guard_tolerance)?;
    let s = pn.sin_incl();
    let (st, ct) = trig::sin_cos(pn.theta);
    let (s2t, c2t) = (2.0 * st * ct, (ct - st) * (ct + st));
    let Kernel {
        kappa,
        sigma,
        eps2,
        eps3,
        big_theta,
        c,
        s2,
        ..
    } = k;
    Ok(-eps2 * big_theta * s2 * amplitude(c * c) / 2.0
        * ((kappa * kappa - sigma * sigma) * s2t - 2.0 * kappa * sigma * c2t)
        + eps3 * big_theta * s * (kappa * ct + sigma * st))
}

pub fn long_corrections_polar(
    pn: &PolarNodalState,
    field: &GravityField,
    guard_tolerance: f64,
) -> Result<PolarNodalDeltas> {
    let k = Kernel::polar(pn, field)?;
    critical_inclination_guard(k.c, guard_tolerance)?;
    let s = pn.sin_incl();
    if k.eps3 != 0.0 && s < POLAR_FORM_MIN_SIN {
        return Err(Error::Equatorial(s));
    }
    let Kernel {
        kappa,
        sigma,
        p,
        eps2,
        eps3,
        big_theta,
        c,
        s2,
        ..
    } = k;
    let (st, ct) = trig::sin_cos(pn.theta);
    let (s2t, c2t) = (2.0 * st * ct, (ct - st) * (ct + st));
    let c2 = c * c;
    let q = q_polynomials(c);
    let amp = amplitude(c2);
    let d = (1.0 - 5.0 * c2) * (1.0 - 5.0 * c2);
    let one_kappa = 1.0 + kappa;
    let k2s2 = kappa * kappa - sigma * sigma;

    Ok(PolarNodalDeltas {
        r: p * (eps2 * s2 * amp * (kappa * c2t + sigma * s2t) + eps3 * s * st),
        theta: eps2 / (2.0 * d)
            * ((q.q2 + q.q5 * kappa) * sigma * c2t
                - (q.q1 * sigma * sigma + q.q2 * kappa + q.q3 * kappa * kappa) * s2t)
            + eps3 * ((kappa / s + 2.0 * s) * ct + (1.0 / s - s) * sigma * st),
        nu: eps2 * q.q6 / (4.0 * d) * (k2s2 * s2t - 2.0 * kappa * sigma * c2t)
            - eps3 * c / s * (kappa * ct + sigma * st),
        big_r: big_theta / p
            * one_kappa
            * one_kappa
            * (eps2 * amp * s2 * (sigma * c2t - kappa * s2t) + eps3 * s * ct),
        big_theta: big_theta * eps2 * amp * s2 * (k2s2 * c2t + 2.0 * kappa * sigma * s2t)
            + big_theta * eps3 * s * (kappa * st - sigma * ct),
        big_n: 0.0,
    })
}

pub fn long_corrections_nonsingular(
    ns: &NonsingularState,
    field: &GravityField,
    guard_tolerance: f64,
) -> Result<NonsingularDeltas> {
    let k = Kernel::nonsingular(ns, field)?;
    critical_inclination_guard(k.c, guard_tolerance)?;
    let Kernel {
        kappa,
        sigma,
        p,
        eps2,
        eps3,
        big_theta,
        c,
        s2,
        ..
    } = k;
    let one_c = 1.0 + c;
    if !(one_c > CHART_TOLERANCE) {
        return Err(Error::ChartSingular(one_c));
    }
    let (xi, chi) = (ns.xi, ns.chi);
    let (xi2, chi2) = (xi * xi, chi * chi);
    let c2 = c * c;
    let q = q_polynomials(c);
    let pc = p_coefficients(kappa, sigma, &q);
    let amp = amplitude(c2);
    let d = (1.0 - 5.0 * c2) * (1.0 - 5.0 * c2);
    let one_kappa = 1.0 + kappa;
    let k2 = kappa * kappa;
    let sg2 = sigma * sigma;

    let psi = (-eps2 / (2.0 * d)
        * (2.0 * xi * chi * (q.q13 * kappa + q.q14 * k2 + q.q15 * sg2)
            - sigma * (chi2 - xi2) * (q.q13 - q.q6 * kappa))
        + eps3 * ((2.0 + 2.0 * c + kappa) * chi - c * sigma * xi))
        / one_c;
    let d_xi = -eps2 / (4.0 * d)
        * (pc.p1 * xi + pc.p2 * (3.0 * chi2 - xi2) * xi
            - pc.p3 * sigma * chi
            - pc.p4 * sigma * (chi2 - 3.0 * xi2) * chi)
        + 0.5 * eps3 * (2.0 * s2 + (1.0 + c2) * kappa + (2.0 + kappa) * (chi2 - xi2));
    let d_chi = eps2 / (4.0 * d)
        * (pc.p1 * chi
            + pc.p2 * (3.0 * xi2 - chi2) * chi
            + pc.p3 * sigma * xi
            + pc.p4 * sigma * (xi2 - 3.0 * chi2) * xi)
        - eps3 * (c2 * sigma + (2.0 + kappa) * chi * xi);

    Ok(NonsingularDeltas {
        psi,
        xi: d_xi,
        chi: d_chi,
        r: p * (eps2 * amp * (2.0 * sigma * xi * chi - kappa * (xi2 - chi2)) + eps3 * xi),
        big_r: big_theta / p
            * one_kappa
            * one_kappa
            * (-eps2 * amp * (2.0 * kappa * xi * chi + sigma * (xi2 - chi2)) + eps3 * chi),
        big_theta: big_theta
            * (eps2 * amp * ((k2 - sg2) * (chi2 - xi2) + 4.0 * kappa * sigma * chi * xi)
                + eps3 * (kappa * xi - sigma * chi)),
        big_n: 0.0,
    })
}

/// Nonsingular corrections with terms of order `sin^2 I` dropped.
pub fn long_corrections_low_inclination(
    ns: &NonsingularState,
    field: &GravityField,
) -> Result<NonsingularDeltas> {
    let k = Kernel::nonsingular(ns, field)?;
    let Kernel {
        kappa,
        sigma,
        p,
        eps2,
        eps3,
        big_theta,
        ..
    } = k;
    let (xi, chi) = (ns.xi, ns.chi);
    let one_kappa = 1.0 + kappa;
    let k2s2 = kappa * kappa - sigma * sigma;
    let ks = 2.0 * kappa * sigma;

    Ok(NonsingularDeltas {
        psi: 0.5 * eps3 * (chi * (4.0 + kappa) - xi * sigma),
        xi: 0.875 * eps2 * (ks * chi - k2s2 * xi) + eps3 * kappa,
        chi: 0.875 * eps2 * (k2s2 * chi + ks * xi) - eps3 * sigma,
        r: eps3 * xi * p,
        big_r: eps3 * one_kappa * one_kappa * chi * big_theta / p,
        big_theta: eps3 * (kappa * xi - sigma * chi) * big_theta,
        big_n: 0.0,
    })
}
