use std::fmt;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("invalid gravity field: {0}")]
    InvalidField(&'static str),

    #[error("state is not elliptic (e = {0})")]
    NotElliptic(f64),

    #[error("true anomaly is undefined for a circular orbit")]
    Circular,

    #[error("eccentricity {0} outside the Kepler solver domain [0, 1)")]
    KeplerDomain(f64),

    #[error("Kepler iteration did not converge (residual {0:e})")]
    KeplerNoConvergence(f64),

    /// Node and argument of latitude are not separable on the equator.
    #[error("equatorial state: node and argument of latitude are undefined (sin I = {0:e})")]
    Equatorial(f64),

    #[error("prograde chart is singular (1 + cos I = {0:e}); use the retrograde chart")]
    ChartSingular(f64),

    #[error("degenerate state: {0}")]
    Degenerate(&'static str),

    /// Theory not applicable, as opposed to a numeric fault.
    #[error(
        "inclination {inclination_deg:.6} deg is inside the critical band \
         (|1 - 5 cos^2 I| = {margin:.3e}, tolerance {tolerance:e})"
    )]
    CriticalInclination {
        inclination_deg: f64,
        margin: f64,
        tolerance: f64,
    },

    #[error("c30/c20 is undefined: c30 is nonzero while c20 is zero")]
    ThirdHarmonicRatio,

    #[error("integrator tolerance {0:e} outside [1e-14, 1e-6]")]
    Tolerance(f64),

    #[error("integration failed: {0}")]
    Integration(String),

    #[error("{stage}: {source}")]
    Stage {
        stage: Stage,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// True when the root cause is the critical-inclination guard.
    pub fn is_guard_rejection(&self) -> bool {
        match self {
            Error::CriticalInclination { .. } => true,
            Error::Stage { source, .. } => source.is_guard_rejection(),
            _ => false,
        }
    }

    pub(crate) fn at(self, stage: Stage) -> Error {
        Error::Stage {
            stage,
            source: Box::new(self),
        }
    }
}

/// Pipeline stage attached to propagated errors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    Conversion,
    ShortPeriod,
    LongPeriod,
    MeanElements,
    Secular,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Stage::Conversion => "state conversion",
            Stage::ShortPeriod => "short-period correction",
            Stage::LongPeriod => "long-period correction",
            Stage::MeanElements => "mean elements",
            Stage::Secular => "secular rates",
        };
        f.write_str(name)
    }
}

pub(crate) fn finite(value: f64, what: &'static str) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite(what))
    }
}
