//! Mean Hamiltonian and secular rates of the Delaunay angles.
//!
//! With `n = mu^2/L^3`, `eta = G/L`, `c = H/G` and `eps2` evaluated at
//! `p = G^2/mu`, the mean Hamiltonian is
//!
//! ```text
//! K = -(mu^2 / 2L^2) [1 - eps2 eta A + (3/4) eps2^2 eta B]
//! A = 6c^2 - 2
//! B = 5(7c^4 + 2c^2 - 1) + 4(3c^2 - 1)^2 eta + (5c^4 - 18c^2 + 5) eta^2
//! ```
//!
//! and the rates are its partials in `L`, `G`, `H`:
//!
//! ```text
//! dK/dL = n F + K0 F_eta deta/dL
//! dK/dG = K0 (F_eps deps2/dG + F_eta / L - F_c c / G)
//! dK/dH = K0 F_c / G
//! ```
//!
//! where `F` is the bracket, `K0 = -mu^2/(2L^2)`, `deta/dL = -eta/L` and
//! `deps2/dG = -4 eps2/G`.

use crate::anomaly::reduce_angle;
use crate::error::{finite, Error, Result};
use crate::gravity::GravityField;
use crate::state::DelaunayState;

/// Rates of the mean angles; the actions are constants of the mean motion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SecularRates {
    pub ell_dot: f64,
    pub g_dot: f64,
    pub h_dot: f64,
    pub big_l: f64,
    pub big_g: f64,
    pub big_h: f64,
}

impl SecularRates {
    /// Two-body rates: only the mean anomaly moves.
    pub fn keplerian(big_l: f64, big_g: f64, big_h: f64, mu: f64) -> SecularRates {
        SecularRates {
            ell_dot: mu * mu / (big_l * big_l * big_l),
            g_dot: 0.0,
            h_dot: 0.0,
            big_l,
            big_g,
            big_h,
        }
    }
}

struct Bracket {
    value: f64,
    d_eta: f64,
    d_eps2: f64,
    d_c: f64,
}

fn bracket(eps2: f64, eta: f64, c: f64) -> Bracket {
    let c2 = c * c;
    let c4 = c2 * c2;
    let a = 6.0 * c2 - 2.0;
    let a_c = 12.0 * c;
    let w = 3.0 * c2 - 1.0;
    let b0 = 5.0 * (7.0 * c4 + 2.0 * c2 - 1.0);
    let b1 = 4.0 * w * w;
    let b2 = 5.0 * c4 - 18.0 * c2 + 5.0;
    let b = b0 + b1 * eta + b2 * eta * eta;
    let b_eta = b1 + 2.0 * b2 * eta;
    let b_c = 5.0 * (28.0 * c2 * c + 4.0 * c) + 48.0 * w * c * eta + (20.0 * c2 * c - 36.0 * c) * eta * eta;
    let e22 = 0.75 * eps2 * eps2;
    Bracket {
        value: 1.0 - eps2 * eta * a + e22 * eta * b,
        d_eta: -eps2 * a + e22 * (b + eta * b_eta),
        d_eps2: -eta * a + 1.5 * eps2 * eta * b,
        d_c: -eps2 * eta * a_c + e22 * eta * b_c,
    }
}

struct Actions {
    eta: f64,
    c: f64,
    eps2: f64,
}

fn actions(big_l: f64, big_g: f64, big_h: f64, field: &GravityField) -> Result<Actions> {
    for (v, what) in [(big_l, "L"), (big_g, "G"), (big_h, "H")] {
        finite(v, what)?;
    }
    if !(big_g > 0.0 && big_l > 0.0) {
        return Err(Error::Degenerate("Delaunay actions must be positive"));
    }
    if big_g > big_l * (1.0 + 1e-14) || big_h.abs() > big_g * (1.0 + 1e-14) {
        return Err(Error::Degenerate("Delaunay actions violate |H| <= G <= L"));
    }
    let p = big_g * big_g / field.mu;
    let ratio = field.alpha / p;
    Ok(Actions {
        eta: big_g / big_l,
        c: big_h / big_g,
        eps2: 0.25 * field.c20 * ratio * ratio,
    })
}

pub fn mean_hamiltonian(big_l: f64, big_g: f64, big_h: f64, field: &GravityField) -> Result<f64> {
    let Actions { eta, c, eps2 } = actions(big_l, big_g, big_h, field)?;
    let k0 = -field.mu * field.mu / (2.0 * big_l * big_l);
    Ok(k0 * bracket(eps2, eta, c).value)
}

pub fn secular_rates(big_l: f64, big_g: f64, big_h: f64, field: &GravityField) -> Result<SecularRates> {
    let Actions { eta, c, eps2 } = actions(big_l, big_g, big_h, field)?;
    let mu2 = field.mu * field.mu;
    let k0 = -mu2 / (2.0 * big_l * big_l);
    let n = mu2 / (big_l * big_l * big_l);
    let f = bracket(eps2, eta, c);
    Ok(SecularRates {
        ell_dot: n * f.value - k0 * f.d_eta * eta / big_l,
        g_dot: k0 * (-4.0 * eps2 / big_g * f.d_eps2 + f.d_eta / big_l - f.d_c * c / big_g),
        h_dot: k0 * f.d_c / big_g,
        big_l,
        big_g,
        big_h,
    })
}

/// Advances the angles linearly; the actions are copied unchanged.
pub fn propagate_mean(d: &DelaunayState, rates: &SecularRates, dt: f64) -> DelaunayState {
    DelaunayState {
        ell: reduce_angle(d.ell + rates.ell_dot * dt),
        g: reduce_angle(d.g + rates.g_dot * dt),
        h: reduce_angle(d.h + rates.h_dot * dt),
        ..*d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::TAU;

    fn leo(i_deg: f64, e: f64) -> (f64, f64, f64) {
        let mu = GravityField::earth().mu;
        let a = 7000.0f64;
        let big_l = (mu * a).sqrt();
        let big_g = big_l * (1.0 - e * e).sqrt();
        (big_l, big_g, big_g * i_deg.to_radians().cos())
    }

    #[test]
    fn keplerian_limit() {
        let field = GravityField::two_body(GravityField::earth().mu, 6378.137);
        let (l, g, h) = leo(30.0, 0.1);
        let k = mean_hamiltonian(l, g, h, &field).unwrap();
        assert_eq!(k, -field.mu * field.mu / (2.0 * l * l));
        let r = secular_rates(l, g, h, &field).unwrap();
        assert_eq!(r.ell_dot, field.mu * field.mu / (l * l * l));
        assert_eq!((r.g_dot, r.h_dot), (0.0, 0.0));
    }

    #[test]
    fn circular_polar_first_order_term() {
        let field = GravityField::earth().without_c30();
        let (l, g, _) = leo(90.0, 0.0);
        let k = mean_hamiltonian(l, g, 0.0, &field).unwrap();
        let k00 = -field.mu * field.mu / (2.0 * l * l);
        let p = g * g / field.mu;
        let eps2 = 0.25 * field.c20 * (field.alpha / p).powi(2);
        // s = 1, eta = 1: K01 = -K00 eps2 (4 - 6); second-order bracket 5(-1) + 4 - (-5)
        let bracket = 5.0 * (8.0 - 16.0 + 7.0) + 4.0 - (8.0 - 8.0 - 5.0);
        let expected = k00 * (1.0 + 2.0 * eps2 + 0.75 * eps2 * eps2 * bracket);
        assert!((k - expected).abs() < 1e-15 * expected.abs());
    }

    #[test]
    fn rates_match_finite_differences() {
        let field = GravityField::earth();
        for (i, e) in [(30.0, 0.05), (75.0, 0.3), (140.0, 0.6)] {
            let (l, g, h) = leo(i, e);
            let r = secular_rates(l, g, h, &field).unwrap();
            let k = |l: f64, g: f64, h: f64| mean_hamiltonian(l, g, h, &field).unwrap();
            let step = 1e-5 * l;
            let dl = (k(l + step, g, h) - k(l - step, g, h)) / (2.0 * step);
            let dg = (k(l, g + step, h) - k(l, g - step, h)) / (2.0 * step);
            let dh = (k(l, g, h + step) - k(l, g, h - step)) / (2.0 * step);
            assert!((r.ell_dot - dl).abs() < 1e-8 * dl.abs());
            assert!((r.g_dot - dg).abs() < 1e-6 * dg.abs(), "{} {}", r.g_dot, dg);
            assert!((r.h_dot - dh).abs() < 1e-6 * dh.abs(), "{} {}", r.h_dot, dh);
        }
    }

    #[test]
    fn node_regresses_for_prograde_orbits() {
        let field = GravityField::earth();
        let (l, g, h) = leo(30.0, 0.05);
        assert!(secular_rates(l, g, h, &field).unwrap().h_dot < 0.0);
        let (l, g, h) = leo(150.0, 0.05);
        assert!(secular_rates(l, g, h, &field).unwrap().h_dot > 0.0);
    }

    #[test]
    fn propagation_is_linear_and_keeps_actions() {
        let field = GravityField::earth();
        let (l, g, h) = leo(50.0, 0.1);
        let d = DelaunayState {
            ell: 0.3,
            g: -1.0,
            h: 2.0,
            big_l: l,
            big_g: g,
            big_h: h,
        };
        let r = secular_rates(l, g, h, &field).unwrap();
        assert_eq!(propagate_mean(&d, &r, 0.0), d);
        let once = propagate_mean(&d, &r, 3000.0);
        let twice = propagate_mean(&propagate_mean(&d, &r, 1500.0), &r, 1500.0);
        for (a, b) in [(once.ell, twice.ell), (once.g, twice.g), (once.h, twice.h)] {
            assert!(reduce_angle(a - b).abs() < 1e-12);
        }
        assert_eq!((once.big_l, once.big_g, once.big_h), (d.big_l, d.big_g, d.big_h));

        let kep = SecularRates::keplerian(l, g, h, field.mu);
        let period = TAU / kep.ell_dot;
        let after = propagate_mean(&d, &kep, period);
        assert!(reduce_angle(after.ell - d.ell).abs() < 1e-12);
    }
}
