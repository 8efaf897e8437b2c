//! Additive periodic corrections and how they are applied.

use crate::anomaly::{self, OrbitProjections};
use crate::error::Result;
use crate::gravity::{small_params, GravityField};
use crate::state::{NonsingularState, PolarNodalState};

/// Direct corrections map mean to osculating and are evaluated at the mean
/// state; inverse corrections are evaluated at the osculating state and
/// subtracted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Direct,
    Inverse,
}

impl Orientation {
    pub fn sign(self) -> f64 {
        match self {
            Orientation::Direct => 1.0,
            Orientation::Inverse => -1.0,
        }
    }
}

/// Which closed forms a correction stage uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Formulation {
    PolarNodal,
    Nonsingular,
    LowInclination,
}

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct PolarNodalDeltas {
    pub r: f64,
    pub theta: f64,
    pub nu: f64,
    pub big_r: f64,
    pub big_theta: f64,
    pub big_n: f64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct NonsingularDeltas {
    pub psi: f64,
    pub xi: f64,
    pub chi: f64,
    pub r: f64,
    pub big_r: f64,
    pub big_theta: f64,
    pub big_n: f64,
}

/// A state that a matching set of deltas can be added to.
///
/// Deltas are typed by layout, so a polar-nodal set cannot be applied to a
/// nonsingular state.
pub trait ApplyCorrection: Sized {
    type Deltas;

    fn apply_correction(&self, deltas: &Self::Deltas, orientation: Orientation) -> Self;
}

impl ApplyCorrection for PolarNodalState {
    type Deltas = PolarNodalDeltas;

    fn apply_correction(&self, d: &PolarNodalDeltas, orientation: Orientation) -> Self {
        let k = orientation.sign();
        PolarNodalState {
            r: self.r + k * d.r,
            theta: self.theta + k * d.theta,
            nu: self.nu + k * d.nu,
            big_r: self.big_r + k * d.big_r,
            big_theta: self.big_theta + k * d.big_theta,
            big_n: self.big_n + k * d.big_n,
        }
    }
}

impl ApplyCorrection for NonsingularState {
    type Deltas = NonsingularDeltas;

    fn apply_correction(&self, d: &NonsingularDeltas, orientation: Orientation) -> Self {
        let k = orientation.sign();
        NonsingularState {
            psi: self.psi + k * d.psi,
            xi: self.xi + k * d.xi,
            chi: self.chi + k * d.chi,
            r: self.r + k * d.r,
            big_r: self.big_r + k * d.big_r,
            big_theta: self.big_theta + k * d.big_theta,
            big_n: self.big_n + k * d.big_n,
            chart: self.chart,
        }
    }
}

/// Quantities shared by every closed-form correction at one state.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Kernel {
    pub kappa: f64,
    pub sigma: f64,
    pub eta: f64,
    pub phi: f64,
    pub p: f64,
    pub eps2: f64,
    pub eps3: f64,
    pub big_theta: f64,
    /// Cosine of the inclination in the chart being used.
    pub c: f64,
    pub s2: f64,
}

impl Kernel {
    pub fn new(r: f64, big_r: f64, big_theta: f64, c: f64, field: &GravityField) -> Result<Kernel> {
        let proj = anomaly::projections(r, big_r, big_theta, field.mu)?;
        let sp = small_params(big_theta, field)?;
        Ok(Kernel::from_parts(&proj, sp.eps2, sp.eps3, big_theta, c))
    }

    pub fn from_parts(proj: &OrbitProjections, eps2: f64, eps3: f64, big_theta: f64, c: f64) -> Kernel {
        Kernel {
            kappa: proj.kappa,
            sigma: proj.sigma,
            eta: proj.eta,
            phi: anomaly::equation_of_center(proj),
            p: proj.p,
            eps2,
            eps3,
            big_theta,
            c,
            s2: (1.0 - c) * (1.0 + c),
        }
    }

    pub fn polar(pn: &PolarNodalState, field: &GravityField) -> Result<Kernel> {
        pn.validate()?;
        Kernel::new(pn.r, pn.big_r, pn.big_theta, pn.cos_incl(), field)
    }

    pub fn nonsingular(ns: &NonsingularState, field: &GravityField) -> Result<Kernel> {
        ns.validate()?;
        Kernel::new(ns.r, ns.big_r, ns.big_theta, ns.chart_cos(), field)
    }
}
