#![allow(dead_code)]

use brouwer::state::ClassicalElements;
use brouwer::{GravityField, PolarNodalState};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::f64::consts::{PI, TAU};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn earth() -> GravityField {
    GravityField::earth()
}

pub fn elements(a: f64, e: f64, i_deg: f64) -> ClassicalElements {
    ClassicalElements {
        semi_major_axis: a,
        eccentricity: e,
        inclination: i_deg.to_radians(),
        node: 0.7,
        arg_perigee: 1.3,
        mean_anomaly: 0.4,
    }
}

/// Random orbit with perigee above the reference radius.
pub fn random_elements(rng: &mut StdRng, e_max: f64, i_deg: (f64, f64)) -> ClassicalElements {
    let e = rng.random_range(0.0..=e_max);
    let perigee = rng.random_range(6600.0..12_000.0);
    ClassicalElements {
        semi_major_axis: perigee / (1.0 - e),
        eccentricity: e,
        inclination: rng.random_range(i_deg.0..=i_deg.1).to_radians(),
        node: rng.random_range(-PI..PI),
        arg_perigee: rng.random_range(-PI..PI),
        mean_anomaly: rng.random_range(0.0..TAU),
    }
}

pub fn polar_state(el: &ClassicalElements, field: &GravityField) -> PolarNodalState {
    el.to_delaunay(field.mu)
        .unwrap()
        .to_polar_nodal(field.mu)
        .unwrap()
}

/// Inclinations in degrees drawn from a union of closed intervals.
pub fn inclination_from(rng: &mut StdRng, bands: &[(f64, f64)]) -> (f64, f64) {
    let band = bands[rng.random_range(0..bands.len())];
    let i = rng.random_range(band.0..=band.1);
    (i, i)
}

/// Natural size of each correction: `eps` times the variable's scale.
pub struct Scales {
    pub r: f64,
    pub angle: f64,
    pub big_r: f64,
    pub big_theta: f64,
}

impl Scales {
    pub fn new(pn: &PolarNodalState, eps: f64) -> Scales {
        let p = pn.big_theta * pn.big_theta / GravityField::earth().mu;
        Scales {
            r: eps.abs() * p,
            angle: eps.abs(),
            big_r: eps.abs() * pn.big_theta / p,
            big_theta: eps.abs() * pn.big_theta,
        }
    }
}

/// `|a - b|` over `max(|b|, scale)`.
pub fn rel(a: f64, b: f64, scale: f64) -> f64 {
    (a - b).abs() / b.abs().max(scale)
}
