//! The three run modes.

use std::fs::File;
use std::hint::black_box;
use std::io::BufWriter;
use std::time::Instant;

use brouwer::gravity::GravityField;
use brouwer::long_period::long_corrections_nonsingular;
use brouwer::oracle::{self, compare, inflation_study, loglog_slope, rms};
use brouwer::propagator::{ephemeris, osculating_to_mean, PropagatorConfig};
use brouwer::short_period::short_corrections_nonsingular;
use brouwer::state::polar_to_delaunay;
use brouwer::trig::{self, Counts};
use brouwer::{DelaunayState, NonsingularState};
use serde::Serialize;

use crate::config::Config;
use crate::error::{CliError, Result};
use crate::output::{write_ephemeris, write_mean_elements, EphemerisRow};

fn create(path: &str) -> Result<BufWriter<File>> {
    File::create(path).map(BufWriter::new).map_err(|source| CliError::Io {
        path: path.to_string(),
        source,
    })
}

fn write_json<T: Serialize>(path: &str, value: &T) -> Result<()> {
    let mut w = create(path)?;
    serde_json::to_writer_pretty(&mut w, value)?;
    use std::io::Write;
    writeln!(w).and_then(|_| w.flush()).map_err(|source| CliError::Io {
        path: path.to_string(),
        source,
    })
}

/// Analytic ephemerides on the configured grid.
pub fn propagate(config: &Config) -> Result<Vec<EphemerisRow>> {
    let prop = config.propagator()?;
    let times = config.times();
    let states = ephemeris(&config.initial_state(), config.initial.epoch, &times, &prop)?;
    Ok(times
        .into_iter()
        .zip(states)
        .map(|(t, state)| EphemerisRow { t, state })
        .collect())
}

pub fn run_propagate(config: &Config) -> Result<Vec<EphemerisRow>> {
    let rows = propagate(config)?;
    write_ephemeris(create(&config.output.ephemeris)?, &rows)?;
    if let Some(path) = &config.output.mean_elements {
        let mean = osculating_to_mean(&config.initial_state(), config.initial.epoch, &config.propagator()?)?;
        let states: Vec<_> = config.times().into_iter().map(|t| mean.at(t)).collect();
        write_mean_elements(create(path)?, &states)?;
    }
    Ok(rows)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EpochRow {
    pub t: f64,
    pub position_error: f64,
    pub velocity_error: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScalingRow {
    pub multiplier: f64,
    pub position_rms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScalingTable {
    /// The table is measured with the third harmonic removed.
    pub c30_removed: bool,
    pub rows: Vec<ScalingRow>,
    pub slope: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CompareReport {
    pub integrator_tolerance: f64,
    pub epochs: Vec<EpochRow>,
    pub position_rms: f64,
    pub position_max: f64,
    pub velocity_rms: f64,
    pub velocity_max: f64,
    pub scaling: Option<ScalingTable>,
}

pub fn compare_report(config: &Config) -> Result<CompareReport> {
    let prop = config.propagator()?;
    let cart = config.initial_state();
    let (t0, times, tol) = (config.initial.epoch, config.times(), config.integrator.tolerance);
    let errors = compare(&cart, t0, &times, &prop, tol)?;
    let max = |it: &mut dyn Iterator<Item = f64>| it.fold(0.0, f64::max);

    let multipliers = &config.compare.multipliers;
    let scaling = if prop.field.c20 != 0.0 && multipliers.len() >= 2 {
        let base = PropagatorConfig {
            field: prop.field.without_c30(),
            ..prop
        };
        // Only epochs after the start carry propagation error.
        let later: Vec<f64> = times.iter().copied().filter(|&t| t != t0).collect();
        let grid = if later.is_empty() { times.clone() } else { later };
        let study = inflation_study(&cart, t0, &grid, &base, multipliers, tol)?;
        Some(ScalingTable {
            c30_removed: prop.field.c30 != 0.0,
            slope: loglog_slope(&study),
            rows: study
                .into_iter()
                .map(|(multiplier, position_rms)| ScalingRow {
                    multiplier,
                    position_rms,
                })
                .collect(),
        })
    } else {
        None
    };

    Ok(CompareReport {
        integrator_tolerance: tol,
        position_rms: rms(errors.iter().map(|e| e.position)),
        position_max: max(&mut errors.iter().map(|e| e.position)),
        velocity_rms: rms(errors.iter().map(|e| e.velocity)),
        velocity_max: max(&mut errors.iter().map(|e| e.velocity)),
        epochs: errors
            .iter()
            .map(|e| EpochRow {
                t: e.t,
                position_error: e.position,
                velocity_error: e.velocity,
            })
            .collect(),
        scaling,
    })
}

pub fn run_compare(config: &Config) -> Result<CompareReport> {
    let report = compare_report(config)?;
    write_json(&config.output.report, &report)?;
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CallCounts {
    pub sin: u64,
    pub cos: u64,
    pub tan: u64,
    pub atan: u64,
    pub atan2: u64,
    pub total: u64,
}

impl From<Counts> for CallCounts {
    fn from(c: Counts) -> Self {
        CallCounts {
            sin: c.sin,
            cos: c.cos,
            tan: c.tan,
            atan: c.atan,
            atan2: c.atan2,
            total: c.total(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PathReport {
    pub path: &'static str,
    /// Transcendental calls in one evaluation.
    pub calls: CallCounts,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PathTiming {
    pub path: &'static str,
    pub total_seconds: f64,
    pub nanoseconds_per_evaluation: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchmarkReport {
    pub iterations: u64,
    pub counting_enabled: bool,
    pub paths: Vec<PathReport>,
    pub timing: Vec<PathTiming>,
}

type Path<'a> = (&'static str, Box<dyn Fn() -> brouwer::Result<f64> + 'a>);

fn paths<'a>(ns: &'a NonsingularState, d: &'a DelaunayState, field: &'a GravityField, guard: f64) -> Vec<Path<'a>> {
    vec![
        (
            "nonsingular-short",
            Box::new(move || short_corrections_nonsingular(ns, field).map(|c| c.r)),
        ),
        (
            "delaunay-short",
            Box::new(move || oracle::short_corrections_delaunay(d, field).map(|c| c.ell)),
        ),
        (
            "nonsingular-short-long",
            Box::new(move || {
                let a = short_corrections_nonsingular(ns, field)?;
                let b = long_corrections_nonsingular(ns, field, guard)?;
                Ok(a.r + b.r)
            }),
        ),
        (
            "delaunay-short-long",
            Box::new(move || {
                let a = oracle::short_corrections_delaunay(d, field)?;
                let b = oracle::long_corrections_delaunay(d, field, guard)?;
                Ok(a.ell + b.ell)
            }),
        ),
    ]
}

/// Counts and times the nonsingular and Delaunay-series correction paths at
/// the initial state.
pub fn benchmark_report(config: &Config) -> Result<BenchmarkReport> {
    let prop = config.propagator()?;
    let field = prop.field;
    let cart = config.initial_state();
    let ns = cart.to_nonsingular()?;
    let pn = cart.to_polar_nodal()?;
    let d = polar_to_delaunay(&pn, field.mu)?;
    let guard = config.theory.guard_tolerance;
    let paths = paths(&ns, &d, &field, guard);

    let mut reports = Vec::new();
    for (name, f) in &paths {
        let (value, counts) = trig::measure(f);
        value?;
        reports.push(PathReport {
            path: name,
            calls: counts.into(),
        });
    }

    let n = config.benchmark.iterations;
    let mut timing = Vec::new();
    if n > 0 {
        for (name, f) in &paths {
            let start = Instant::now();
            for _ in 0..n {
                black_box(f()?);
            }
            let total = start.elapsed().as_secs_f64();
            timing.push(PathTiming {
                path: name,
                total_seconds: total,
                nanoseconds_per_evaluation: total * 1e9 / n as f64,
            });
        }
    }
    Ok(BenchmarkReport {
        iterations: n,
        counting_enabled: trig::ENABLED,
        paths: reports,
        timing,
    })
}

pub fn run_benchmark(config: &Config) -> Result<BenchmarkReport> {
    let report = benchmark_report(config)?;
    write_json(&config.output.report, &report)?;
    Ok(report)
}
