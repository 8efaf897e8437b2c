//! Osculating state to mean elements and back, and ephemerides built on them.
//!
//! Mean elements are kept in equinoctial form relative to the chart of the
//! initial state: mean longitude `lambda = psi - phi`, the eccentricity
//! vector at longitude of perigee `psi - f`, and an inclination vector at
//! `psi - theta` (which is `k nu` for chart sign `k`). None of these needs
//! the node or the argument of perigee, so equatorial and circular orbits
//! pass through unchanged.

use crate::anomaly::{self, reduce_angle};
use crate::corrections::{ApplyCorrection, Formulation, NonsingularDeltas, Orientation};
use crate::error::{Error, Result, Stage};
use crate::gravity::{critical_inclination_guard, GravityField, DEFAULT_GUARD_TOLERANCE};
use crate::long_period::{long_corrections_low_inclination, long_corrections_nonsingular, long_corrections_polar};
use crate::secular::{secular_rates, SecularRates};
use crate::short_period::{
    short_corrections_low_inclination, short_corrections_nonsingular, short_corrections_polar,
};
use crate::state::{
    CartesianState, Chart, DelaunayState, NonsingularState, PolarNodalState, EQUATORIAL_TOLERANCE,
};

/// Below this `sin I` the automatic choice uses the low-inclination forms.
pub const LOW_INCLINATION_SIN: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum FormulationChoice {
    #[default]
    Auto,
    Fixed(Formulation),
}

impl FormulationChoice {
    pub fn resolve(self, sin_incl: f64, threshold: f64) -> Formulation {
        match self {
            FormulationChoice::Fixed(f) => f,
            FormulationChoice::Auto if sin_incl < threshold => Formulation::LowInclination,
            FormulationChoice::Auto => Formulation::Nonsingular,
        }
    }
}

/// Which parts of the theory are switched on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Stages {
    pub short_period: bool,
    pub long_period: bool,
    pub secular: bool,
}

impl Default for Stages {
    fn default() -> Self {
        Stages {
            short_period: true,
            long_period: true,
            secular: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PropagatorConfig {
    pub field: GravityField,
    pub formulation: FormulationChoice,
    pub stages: Stages,
    pub guard_tolerance: f64,
    pub low_inclination_sin: f64,
}

impl PropagatorConfig {
    pub fn new(field: GravityField) -> Self {
        PropagatorConfig {
            field,
            formulation: FormulationChoice::Auto,
            stages: Stages::default(),
            guard_tolerance: DEFAULT_GUARD_TOLERANCE,
            low_inclination_sin: LOW_INCLINATION_SIN,
        }
    }
}

/// Mean orbit in equinoctial form; angles are measured in the chart frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeanElements {
    pub big_l: f64,
    pub big_g: f64,
    pub big_h: f64,
    pub lambda: f64,
    /// `e (cos, sin)` of the longitude of perigee.
    pub eccentricity_vector: [f64; 2],
    /// `sin I (cos, sin)` of the chart node angle.
    pub inclination_vector: [f64; 2],
}

/// Angular rates of the mean elements in the chart frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChartRates {
    pub lambda: f64,
    pub perigee: f64,
    pub node: f64,
}

impl ChartRates {
    fn new(rates: &SecularRates, chart: Chart) -> Self {
        let k = chart.sign();
        ChartRates {
            lambda: rates.ell_dot + rates.g_dot + k * rates.h_dot,
            perigee: rates.g_dot + k * rates.h_dot,
            node: k * rates.h_dot,
        }
    }
}

/// Mean elements at an epoch with the choices made when they were built.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeanState {
    pub elements: MeanElements,
    pub epoch: f64,
    pub chart: Chart,
    pub formulation: Formulation,
    pub rates: ChartRates,
}

fn rotate(v: [f64; 2], angle: f64) -> [f64; 2] {
    let (s, c) = angle.sin_cos();
    [c * v[0] - s * v[1], s * v[0] + c * v[1]]
}

impl MeanState {
    /// Mean elements at `t` by linear advance of the angles.
    pub fn at(&self, t: f64) -> MeanState {
        let dt = t - self.epoch;
        let e = &self.elements;
        MeanState {
            elements: MeanElements {
                lambda: reduce_angle(e.lambda + self.rates.lambda * dt),
                eccentricity_vector: rotate(e.eccentricity_vector, self.rates.perigee * dt),
                inclination_vector: rotate(e.inclination_vector, self.rates.node * dt),
                ..*e
            },
            epoch: t,
            ..*self
        }
    }

    pub fn eccentricity(&self) -> f64 {
        let [a, b] = self.elements.eccentricity_vector;
        a.hypot(b)
    }

    pub fn sin_incl(&self) -> f64 {
        let [a, b] = self.elements.inclination_vector;
        a.hypot(b)
    }

    /// Classical mean elements. Node and perigee are arbitrary (zero) when
    /// the orbit is equatorial or circular.
    pub fn to_delaunay(&self) -> DelaunayState {
        let e = &self.elements;
        let k = self.chart.sign();
        let [ex, ey] = e.eccentricity_vector;
        let [px, py] = e.inclination_vector;
        let perigee = if ex == 0.0 && ey == 0.0 { 0.0 } else { ey.atan2(ex) };
        let node = if px == 0.0 && py == 0.0 { 0.0 } else { py.atan2(px) };
        DelaunayState {
            ell: reduce_angle(e.lambda - perigee),
            g: reduce_angle(perigee - node),
            h: reduce_angle(k * node),
            big_l: e.big_l,
            big_g: e.big_g,
            big_h: e.big_h,
        }
    }

    /// Builds mean elements from classical ones at `epoch`.
    pub fn from_delaunay(d: &DelaunayState, epoch: f64, config: &PropagatorConfig) -> Result<MeanState> {
        let e = d.eccentricity().map_err(|e| e.at(Stage::MeanElements))?;
        let c = d.big_h / d.big_g;
        if !(c.abs() <= 1.0) {
            return Err(Error::Degenerate("|H| exceeds G").at(Stage::MeanElements));
        }
        let s = ((1.0 - c) * (1.0 + c)).sqrt();
        let chart = Chart::for_polar_momentum(d.big_h);
        let node = chart.sign() * d.h;
        let perigee = d.g + node;
        let elements = MeanElements {
            big_l: d.big_l,
            big_g: d.big_g,
            big_h: d.big_h,
            lambda: reduce_angle(d.ell + perigee),
            eccentricity_vector: [e * perigee.cos(), e * perigee.sin()],
            inclination_vector: [s * node.cos(), s * node.sin()],
        };
        let formulation = config.formulation.resolve(s, config.low_inclination_sin);
        mean_state(elements, epoch, chart, formulation, config)
    }
}

fn mean_state(
    elements: MeanElements,
    epoch: f64,
    chart: Chart,
    formulation: Formulation,
    config: &PropagatorConfig,
) -> Result<MeanState> {
    let MeanElements {
        big_l, big_g, big_h, ..
    } = elements;
    let rates = if config.stages.secular {
        secular_rates(big_l, big_g, big_h, &config.field).map_err(|e| e.at(Stage::Secular))?
    } else {
        SecularRates::keplerian(big_l, big_g, big_h, config.field.mu)
    };
    Ok(MeanState {
        elements,
        epoch,
        chart,
        formulation,
        rates: ChartRates::new(&rates, chart),
    })
}

/// Restores `xi^2 + chi^2 = 1 - (N/Theta)^2`, keeping `N` fixed.
///
/// Away from the equator the inclination vector is rescaled; near it
/// `Theta` absorbs the mismatch, since there `sin I` is the better
/// determined quantity.
fn project(ns: NonsingularState) -> Result<NonsingularState> {
    let s2 = ns.xi * ns.xi + ns.chi * ns.chi;
    if s2 > 0.5 {
        let c = ns.big_n / ns.big_theta;
        let target = ((1.0 - c) * (1.0 + c)).max(0.0).sqrt();
        let k = target / s2.sqrt();
        Ok(NonsingularState {
            xi: ns.xi * k,
            chi: ns.chi * k,
            ..ns
        })
    } else {
        let big_theta = ns.big_n.abs() / (1.0 - s2).sqrt();
        if !(big_theta > 0.0) {
            return Err(Error::Degenerate("angular momentum vanishes"));
        }
        Ok(NonsingularState { big_theta, ..ns })
    }
}

fn polar_view(ns: &NonsingularState) -> Result<PolarNodalState> {
    ns.to_polar_nodal(EQUATORIAL_TOLERANCE)
}

fn short_stage(
    ns: &NonsingularState,
    formulation: Formulation,
    orientation: Orientation,
    config: &PropagatorConfig,
) -> Result<NonsingularState> {
    let field = &config.field;
    let out = match formulation {
        Formulation::PolarNodal => {
            let pn = polar_view(ns)?;
            let d = short_corrections_polar(&pn, field)?;
            pn.apply_correction(&d, orientation).to_nonsingular()
        }
        Formulation::Nonsingular => ns.apply_correction(&short_corrections_nonsingular(ns, field)?, orientation),
        Formulation::LowInclination => {
            ns.apply_correction(&short_corrections_low_inclination(ns, field)?, orientation)
        }
    };
    project(out)
}

fn long_stage(
    ns: &NonsingularState,
    formulation: Formulation,
    orientation: Orientation,
    config: &PropagatorConfig,
) -> Result<NonsingularState> {
    let field = &config.field;
    let tol = config.guard_tolerance;
    let out = match formulation {
        Formulation::PolarNodal => {
            let pn = polar_view(ns)?;
            let d = long_corrections_polar(&pn, field, tol)?;
            pn.apply_correction(&d, orientation).to_nonsingular()
        }
        Formulation::Nonsingular => {
            ns.apply_correction(&long_corrections_nonsingular(ns, field, tol)?, orientation)
        }
        Formulation::LowInclination => {
            ns.apply_correction(&long_corrections_low_inclination(ns, field)?, orientation)
        }
    };
    project(out)
}

fn corrections_active(config: &PropagatorConfig) -> bool {
    !(config.field.c20 == 0.0 && config.field.c30 == 0.0)
}

fn elements_from(ns: &NonsingularState, mu: f64) -> Result<MeanElements> {
    let proj = anomaly::projections(ns.r, ns.big_r, ns.big_theta, mu)?;
    let phi = anomaly::equation_of_center(&proj);
    let (sp, cp) = ns.psi.sin_cos();
    let (kappa, sigma) = (proj.kappa, proj.sigma);
    Ok(MeanElements {
        big_l: ns.big_theta / proj.eta,
        big_g: ns.big_theta,
        big_h: ns.big_n,
        lambda: reduce_angle(ns.psi - phi),
        eccentricity_vector: [kappa * cp + sigma * sp, kappa * sp - sigma * cp],
        inclination_vector: [ns.chi * cp + ns.xi * sp, ns.chi * sp - ns.xi * cp],
    })
}

fn state_from(m: &MeanState, mu: f64) -> Result<NonsingularState> {
    let e = &m.elements;
    let ecc = m.eccentricity();
    if !(ecc < 1.0) {
        return Err(Error::NotElliptic(ecc));
    }
    let [ex, ey] = e.eccentricity_vector;
    let perigee = if ecc == 0.0 { 0.0 } else { ey.atan2(ex) };
    let a = anomaly::AnomalyTriple::from_mean(e.lambda - perigee, ecc)?;
    let psi = reduce_angle(e.lambda + (a.f - a.ell));
    let (sf, cf) = a.f.sin_cos();
    let (kappa, sigma) = (ecc * cf, ecc * sf);
    let p = e.big_g * e.big_g / mu;
    let (sp, cp) = psi.sin_cos();
    let [px, py] = e.inclination_vector;
    Ok(NonsingularState {
        psi,
        xi: px * sp - py * cp,
        chi: px * cp + py * sp,
        r: p / (1.0 + kappa),
        big_r: e.big_g * sigma / p,
        big_theta: e.big_g,
        big_n: e.big_h,
        chart: m.chart,
    })
}

/// Removes the periodic corrections from an osculating state.
pub fn osculating_to_mean(cart: &CartesianState, epoch: f64, config: &PropagatorConfig) -> Result<MeanState> {
    config.field.validate()?;
    let ns = cart.to_nonsingular().map_err(|e| e.at(Stage::Conversion))?;
    let formulation = config
        .formulation
        .resolve(ns.xi.hypot(ns.chi), config.low_inclination_sin);
    let mut mean = ns;
    if corrections_active(config) {
        if config.stages.long_period {
            // The input itself must clear the band, not only the prime state.
            critical_inclination_guard(ns.chart_cos(), config.guard_tolerance)
                .map_err(|e| e.at(Stage::LongPeriod))?;
        }
        if config.stages.short_period {
            mean = short_stage(&mean, formulation, Orientation::Inverse, config)
                .map_err(|e| e.at(Stage::ShortPeriod))?;
        }
        if config.stages.long_period {
            mean = long_stage(&mean, formulation, Orientation::Inverse, config)
                .map_err(|e| e.at(Stage::LongPeriod))?;
        }
    }
    let elements = elements_from(&mean, config.field.mu).map_err(|e| e.at(Stage::MeanElements))?;
    mean_state(elements, epoch, ns.chart, formulation, config)
}

/// Restores the periodic corrections to mean elements.
pub fn mean_to_osculating(mean: &MeanState, config: &PropagatorConfig) -> Result<CartesianState> {
    config.field.validate()?;
    let mut ns = state_from(mean, config.field.mu).map_err(|e| e.at(Stage::MeanElements))?;
    if corrections_active(config) {
        if config.stages.long_period {
            ns = long_stage(&ns, mean.formulation, Orientation::Direct, config)
                .map_err(|e| e.at(Stage::LongPeriod))?;
        }
        if config.stages.short_period {
            ns = short_stage(&ns, mean.formulation, Orientation::Direct, config)
                .map_err(|e| e.at(Stage::ShortPeriod))?;
        }
    }
    ns.to_cartesian().map_err(|e| e.at(Stage::Conversion))
}

/// Osculating states at each of `times`, from the state `cart0` at `t0`.
pub fn ephemeris(
    cart0: &CartesianState,
    t0: f64,
    times: &[f64],
    config: &PropagatorConfig,
) -> Result<Vec<CartesianState>> {
    let mean = osculating_to_mean(cart0, t0, config)?;
    times
        .iter()
        .map(|&t| {
            if !t.is_finite() {
                return Err(Error::NonFinite("output time"));
            }
            mean_to_osculating(&mean.at(t), config)
        })
        .collect()
}

/// Applies a nonsingular correction set, then restores the momentum
/// constraint. Exposed for diagnostics.
pub fn corrected(ns: &NonsingularState, d: &NonsingularDeltas, orientation: Orientation) -> Result<NonsingularState> {
    project(ns.apply_correction(d, orientation))
}
