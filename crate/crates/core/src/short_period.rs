//! First-order short-period generating function and corrections.

use crate::corrections::{Kernel, NonsingularDeltas, PolarNodalDeltas};
use crate::error::{Error, Result};
use crate::gravity::GravityField;
use crate::state::{NonsingularState, PolarNodalState, CHART_TOLERANCE};
use crate::trig;

/// Short-period generating function in polar-nodal variables.
pub fn v1(pn: &PolarNodalState, field: &GravityField) -> Result<f64> {
    let k = Kernel::polar(pn, field)?;
    let (s2t, c2t) = trig::sin_cos(2.0 * pn.theta);
    let s2 = k.s2;
    Ok(k.eps2
        * k.big_theta
        * ((2.0 - 3.0 * s2) * (k.phi + k.sigma) + 0.5 * (3.0 + 4.0 * k.kappa) * s2 * s2t
            - k.sigma * s2 * c2t))
}

pub fn short_corrections_polar(pn: &PolarNodalState, field: &GravityField) -> Result<PolarNodalDeltas> {
    let k = Kernel::polar(pn, field)?;
    let (s2t, c2t) = trig::sin_cos(2.0 * pn.theta);
    let Kernel {
        kappa,
        sigma,
        eta,
        phi,
        p,
        eps2,
        big_theta,
        c,
        s2,
        ..
    } = k;
    let one_kappa = 1.0 + kappa;
    let one_eta = 1.0 + eta;
    let g = (2.0 + kappa) / one_eta;
    let radial = kappa / one_eta + 2.0 * eta / one_kappa + 1.0;
    let momentum = eta + one_kappa * one_kappa / one_eta;

    Ok(PolarNodalDeltas {
        r: eps2 * p * ((2.0 - 3.0 * s2) * radial - s2 * c2t),
        theta: eps2
            * (-3.0 * (4.0 - 5.0 * s2) * phi + (3.0 - 3.5 * s2 + (4.0 - 6.0 * s2) * kappa) * s2t
                - 2.0 * sigma * (5.0 - 6.0 * s2 + g * (1.0 - 1.5 * s2) + (1.0 - 2.0 * s2) * c2t)),
        nu: eps2 * c * (6.0 * phi - (4.0 * kappa + 3.0) * s2t + 2.0 * sigma * (3.0 + c2t)),
        big_r: eps2 * big_theta / p
            * (2.0 * one_kappa * one_kappa * s2 * s2t - (2.0 - 3.0 * s2) * sigma * momentum),
        big_theta: -eps2 * big_theta * s2 * ((3.0 + 4.0 * kappa) * c2t + 2.0 * sigma * s2t),
        big_n: 0.0,
    })
}

pub fn short_corrections_nonsingular(
    ns: &NonsingularState,
    field: &GravityField,
) -> Result<NonsingularDeltas> {
    let k = Kernel::nonsingular(ns, field)?;
    let Kernel {
        kappa,
        sigma,
        eta,
        phi,
        p,
        eps2,
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
    let one_kappa = 1.0 + kappa;
    let one_eta = 1.0 + eta;
    let g = (2.0 + kappa) / one_eta;
    let tilt = 1.0 - 3.0 * c2;
    let radial = 1.0 + kappa / one_eta + 2.0 * eta / one_kappa;
    let momentum = eta + one_kappa * one_kappa / one_eta;

    Ok(NonsingularDeltas {
        psi: eps2
            * ((3.0 + 6.0 * c - 15.0 * c2) * phi
                + sigma * (2.0 + 6.0 * c - 12.0 * c2 + tilt * g + (2.0 + 4.0 * c) / one_c * (chi2 - xi2))
                - (1.0 + 7.0 * c + 4.0 * (1.0 + 3.0 * c) * kappa) / one_c * xi * chi),
        xi: eps2
            * (sigma * (4.0 * chi2 - 12.0 * c2 + tilt * g) * chi
                - ((1.0 + 4.0 * kappa) * chi2 - (3.0 + 4.0 * kappa) * c2) * xi
                + 3.0 * (1.0 - 5.0 * c2) * phi * chi),
        chi: -eps2
            * (sigma * (4.0 * chi2 - 8.0 * c2 + tilt * g) * xi
                - ((1.0 + 4.0 * kappa) * xi2 - (3.0 + 4.0 * kappa) * c2) * chi
                + 3.0 * (1.0 - 5.0 * c2) * phi * xi),
        r: eps2 * p * (xi2 - chi2 + radial * (2.0 - 3.0 * s2)),
        big_r: eps2 * big_theta / p
            * (4.0 * one_kappa * one_kappa * xi * chi - sigma * momentum * (2.0 - 3.0 * s2)),
        big_theta: eps2 * big_theta * ((3.0 + 4.0 * kappa) * (xi2 - chi2) - 4.0 * sigma * xi * chi),
        big_n: 0.0,
    })
}

/// Nonsingular corrections with terms of order `sin^2 I` dropped.
pub fn short_corrections_low_inclination(
    ns: &NonsingularState,
    field: &GravityField,
) -> Result<NonsingularDeltas> {
    let k = Kernel::nonsingular(ns, field)?;
    let Kernel {
        kappa,
        sigma,
        eta,
        phi,
        p,
        eps2,
        big_theta,
        ..
    } = k;
    let (xi, chi) = (ns.xi, ns.chi);
    let one_kappa = 1.0 + kappa;
    let one_eta = 1.0 + eta;
    let g = (2.0 + kappa) / one_eta;

    Ok(NonsingularDeltas {
        psi: -2.0 * eps2 * (3.0 * phi + (2.0 + g) * sigma),
        xi: eps2 * ((3.0 + 4.0 * kappa) * xi - 2.0 * (6.0 + g) * sigma * chi - 12.0 * phi * chi),
        chi: -eps2 * ((3.0 + 4.0 * kappa) * chi - 2.0 * (4.0 + g) * sigma * xi - 12.0 * phi * xi),
        r: 2.0 * eps2 * p * (1.0 + kappa / one_eta + 2.0 * eta / one_kappa),
        big_r: -2.0 * eps2 * big_theta / p * sigma * (eta + one_kappa * one_kappa / one_eta),
        big_theta: 0.0,
        big_n: 0.0,
    })
}
