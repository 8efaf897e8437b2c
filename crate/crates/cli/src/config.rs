//! Run configuration: a TOML file of `[section]` tables, with dotted
//! `section.key=value` overrides applied on top.

use std::path::Path;

use brouwer::corrections::Formulation;
use brouwer::gravity::{GravityField, DEFAULT_GUARD_TOLERANCE};
use brouwer::propagator::{FormulationChoice, PropagatorConfig, Stages, LOW_INCLINATION_SIN};
use brouwer::CartesianState;
use serde::{Deserialize, Serialize};
use toml::{Table, Value};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, Serialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum Model {
    TwoBody,
    J2,
    #[default]
    J2j3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, Serialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum FormulationName {
    #[default]
    Auto,
    PolarNodal,
    Nonsingular,
    LowInclination,
}

impl FormulationName {
    pub fn choice(self) -> FormulationChoice {
        match self {
            FormulationName::Auto => FormulationChoice::Auto,
            FormulationName::PolarNodal => FormulationChoice::Fixed(Formulation::PolarNodal),
            FormulationName::Nonsingular => FormulationChoice::Fixed(Formulation::Nonsingular),
            FormulationName::LowInclination => FormulationChoice::Fixed(Formulation::LowInclination),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields, default)]
pub struct Gravity {
    pub mu: f64,
    pub radius: f64,
    pub c20: f64,
    pub c30: f64,
    pub model: Model,
}

impl Default for Gravity {
    fn default() -> Self {
        let e = GravityField::earth();
        Gravity {
            mu: e.mu,
            radius: e.alpha,
            c20: e.c20,
            c30: e.c30,
            model: Model::J2j3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct Initial {
    /// km
    pub position: [f64; 3],
    /// km/s
    pub velocity: [f64; 3],
    #[serde(default)]
    pub epoch: f64,
}

#[derive(Debug, Clone, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields, default)]
pub struct Grid {
    pub duration: f64,
    pub step: f64,
}

impl Default for Grid {
    fn default() -> Self {
        Grid {
            duration: 0.0,
            step: 60.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields, default)]
pub struct Theory {
    pub formulation: FormulationName,
    pub short_period: bool,
    pub long_period: bool,
    pub secular: bool,
    pub guard_tolerance: f64,
    pub low_inclination_sin: f64,
}

impl Default for Theory {
    fn default() -> Self {
        Theory {
            formulation: FormulationName::Auto,
            short_period: true,
            long_period: true,
            secular: true,
            guard_tolerance: DEFAULT_GUARD_TOLERANCE,
            low_inclination_sin: LOW_INCLINATION_SIN,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields, default)]
pub struct Integrator {
    pub tolerance: f64,
}

impl Default for Integrator {
    fn default() -> Self {
        Integrator { tolerance: 1e-12 }
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields, default)]
pub struct Compare {
    pub multipliers: Vec<f64>,
}

impl Default for Compare {
    fn default() -> Self {
        Compare {
            multipliers: vec![1.0, 0.5, 0.25, 0.125],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields, default)]
pub struct Benchmark {
    pub iterations: u64,
}

impl Default for Benchmark {
    fn default() -> Self {
        Benchmark { iterations: 10_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields, default)]
pub struct Output {
    pub ephemeris: String,
    pub mean_elements: Option<String>,
    pub report: String,
}

impl Default for Output {
    fn default() -> Self {
        Output {
            ephemeris: "ephemeris.csv".into(),
            mean_elements: None,
            report: "report.json".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    #[serde(default)]
    pub gravity: Gravity,
    pub initial: Initial,
    #[serde(default)]
    pub grid: Grid,
    #[serde(default)]
    pub theory: Theory,
    #[serde(default)]
    pub integrator: Integrator,
    #[serde(default)]
    pub compare: Compare,
    #[serde(default)]
    pub benchmark: Benchmark,
    #[serde(default)]
    pub output: Output,
}

/// A dotted key and the value to store under it.
#[derive(Debug, Clone, PartialEq)]
pub struct Override {
    pub path: Vec<String>,
    pub value: Value,
}

/// Parses `section.key=value`. The value is read as a TOML value, falling
/// back to a bare string.
pub fn parse_override(text: &str) -> Result<Override> {
    let bad = || CliError::Override(text.to_string());
    let (key, raw) = text.split_once('=').ok_or_else(bad)?;
    let path: Vec<String> = key.trim().split('.').map(|s| s.trim().to_string()).collect();
    if path.iter().any(|p| p.is_empty() || !p.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')) {
        return Err(bad());
    }
    let raw = raw.trim();
    let value = match format!("v = {raw}").parse::<Table>() {
        Ok(mut t) => t.remove("v").ok_or_else(bad)?,
        Err(_) => Value::String(raw.to_string()),
    };
    Ok(Override { path, value })
}

fn apply(table: &mut Table, o: &Override) -> Result<()> {
    let (last, parents) = o.path.split_last().expect("override path is never empty");
    let mut cur = table;
    for p in parents {
        let entry = cur.entry(p.clone()).or_insert_with(|| Value::Table(Table::new()));
        cur = entry
            .as_table_mut()
            .ok_or_else(|| CliError::Config(format!("`{p}` is not a section")))?;
    }
    cur.insert(last.clone(), o.value.clone());
    Ok(())
}

impl Config {
    pub fn parse(text: &str, overrides: &[Override]) -> Result<Config> {
        let mut table: Table = text.parse().map_err(|e: toml::de::Error| CliError::Config(e.to_string()))?;
        for o in overrides {
            apply(&mut table, o)?;
        }
        let config: Config = Table::try_into(table).map_err(|e| CliError::Config(e.to_string()))?;
        config.validate()?;
        Ok(config)
    }

    pub fn load(path: Option<&Path>, overrides: &[Override]) -> Result<Config> {
        let text = match path {
            Some(p) => std::fs::read_to_string(p).map_err(|source| CliError::Io {
                path: p.display().to_string(),
                source,
            })?,
            None => String::new(),
        };
        Config::parse(&text, overrides)
    }

    fn validate(&self) -> Result<()> {
        let g = &self.grid;
        if !(g.duration.is_finite() && g.duration >= 0.0) {
            return Err(CliError::Config("grid.duration must be finite and non-negative".into()));
        }
        if !(g.step.is_finite() && g.step > 0.0) {
            return Err(CliError::Config("grid.step must be positive".into()));
        }
        if g.duration / g.step > 1e7 {
            return Err(CliError::Config("grid has more than 1e7 epochs".into()));
        }
        let t = &self.theory;
        if !(t.guard_tolerance.is_finite() && t.guard_tolerance >= 0.0) {
            return Err(CliError::Config("theory.guard_tolerance must be non-negative".into()));
        }
        if !(t.low_inclination_sin.is_finite() && t.low_inclination_sin >= 0.0) {
            return Err(CliError::Config("theory.low_inclination_sin must be non-negative".into()));
        }
        if self.compare.multipliers.iter().any(|m| !(m.is_finite() && *m > 0.0)) {
            return Err(CliError::Config("compare.multipliers must be positive".into()));
        }
        self.field()?;
        Ok(())
    }

    /// Field after applying the model selection.
    pub fn field(&self) -> Result<GravityField> {
        let g = &self.gravity;
        let (c20, c30) = match g.model {
            Model::TwoBody => (0.0, 0.0),
            Model::J2 => (g.c20, 0.0),
            Model::J2j3 => (g.c20, g.c30),
        };
        Ok(GravityField::new(g.mu, g.radius, c20, c30)?)
    }

    pub fn propagator(&self) -> Result<PropagatorConfig> {
        let t = &self.theory;
        Ok(PropagatorConfig {
            field: self.field()?,
            formulation: t.formulation.choice(),
            stages: Stages {
                short_period: t.short_period,
                long_period: t.long_period,
                secular: t.secular,
            },
            guard_tolerance: t.guard_tolerance,
            low_inclination_sin: t.low_inclination_sin,
        })
    }

    pub fn initial_state(&self) -> CartesianState {
        CartesianState::new(self.initial.position, self.initial.velocity)
    }

    /// `epoch + k step` up to `epoch + duration`.
    pub fn times(&self) -> Vec<f64> {
        let g = &self.grid;
        let n = (g.duration / g.step * (1.0 + 1e-12)).floor() as usize;
        (0..=n).map(|k| self.initial.epoch + k as f64 * g.step).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = "[initial]\nposition = [7000.0, 0.0, 0.0]\nvelocity = [0.0, 7.5, 0.0]\n";

    #[test]
    fn defaults_fill_missing_sections() {
        let c = Config::parse(MINIMAL, &[]).unwrap();
        assert_eq!(c.gravity, Gravity::default());
        assert_eq!(c.times(), vec![0.0]);
        assert_eq!(c.theory.formulation, FormulationName::Auto);
    }

    #[test]
    fn overrides_win() {
        let o = [
            parse_override("grid.duration=120").unwrap(),
            parse_override("grid.step = 60.0").unwrap(),
            parse_override("gravity.model=j2").unwrap(),
            parse_override("theory.short_period=false").unwrap(),
        ];
        let c = Config::parse(MINIMAL, &o).unwrap();
        assert_eq!(c.times(), vec![0.0, 60.0, 120.0]);
        assert_eq!(c.gravity.model, Model::J2);
        assert_eq!(c.field().unwrap().c30, 0.0);
        assert!(!c.theory.short_period);
    }

    #[test]
    fn bad_input_is_reported() {
        assert!(parse_override("novalue").is_err());
        assert!(parse_override("=3").is_err());
        assert!(parse_override("a..b=3").is_err());
        assert!(Config::parse("[initial]\nposition = [1]\n", &[]).is_err());
        assert!(Config::parse(&format!("{MINIMAL}[grid]\nstep = 0.0\n"), &[]).is_err());
        assert!(Config::parse(&format!("{MINIMAL}[grid]\nsteps = 1.0\n"), &[]).is_err());
        let o = [parse_override("initial.position.x=1").unwrap()];
        assert!(Config::parse(MINIMAL, &o).is_err());
    }
}
