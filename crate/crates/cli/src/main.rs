use std::path::PathBuf;
use std::process::ExitCode;

use brouwer_cli::commands::{run_benchmark, run_compare, run_propagate};
use brouwer_cli::{parse_override, CliError, Config, Override};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "brouwer", version, about = "Analytic J2+J3 ephemerides")]
struct Cli {
    /// TOML config file.
    #[arg(long, short, global = true)]
    config: Option<PathBuf>,

    /// Dotted override such as `grid.step=30`; repeatable.
    #[arg(long = "set", value_name = "KEY=VALUE", global = true)]
    set: Vec<String>,

    #[command(flatten)]
    flags: Flags,

    #[command(subcommand)]
    command: Command,
}

/// Shorthands for common config keys.
#[derive(Args)]
struct Flags {
    /// two-body, j2 or j2j3 (gravity.model)
    #[arg(long, global = true)]
    model: Option<String>,
    /// auto, polar-nodal, nonsingular or low-inclination (theory.formulation)
    #[arg(long, global = true)]
    formulation: Option<String>,
    /// Seconds (grid.duration)
    #[arg(long, global = true)]
    duration: Option<f64>,
    /// Seconds (grid.step)
    #[arg(long, global = true)]
    step: Option<f64>,
    /// integrator.tolerance
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    /// theory.guard_tolerance
    #[arg(long, global = true)]
    guard_tolerance: Option<f64>,
    /// output.ephemeris
    #[arg(long, global = true)]
    ephemeris: Option<String>,
    /// output.report
    #[arg(long, global = true)]
    report: Option<String>,
    /// benchmark.iterations
    #[arg(long, global = true)]
    iterations: Option<u64>,
    /// output.mean_elements
    #[arg(long, global = true)]
    mean_elements: Option<String>,
    /// Sets theory.short_period = false
    #[arg(long, global = true)]
    no_short: bool,
    /// Sets theory.long_period = false
    #[arg(long, global = true)]
    no_long: bool,
    /// Sets theory.secular = false
    #[arg(long, global = true)]
    no_secular: bool,
}

impl Flags {
    fn overrides(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut push = |key: &str, v: Option<String>| {
            if let Some(v) = v {
                out.push(format!("{key}={v}"));
            }
        };
        let quoted = |s: &Option<String>| s.as_ref().map(|v| format!("{v:?}"));
        push("gravity.model", quoted(&self.model));
        push("theory.formulation", quoted(&self.formulation));
        push("grid.duration", self.duration.map(|v| format!("{v:?}")));
        push("grid.step", self.step.map(|v| format!("{v:?}")));
        push("integrator.tolerance", self.tolerance.map(|v| format!("{v:?}")));
        push("theory.guard_tolerance", self.guard_tolerance.map(|v| format!("{v:?}")));
        push("output.ephemeris", quoted(&self.ephemeris));
        push("output.report", quoted(&self.report));
        push("benchmark.iterations", self.iterations.map(|v| v.to_string()));
        push("output.mean_elements", quoted(&self.mean_elements));
        let off = |b: bool| b.then(|| "false".to_string());
        push("theory.short_period", off(self.no_short));
        push("theory.long_period", off(self.no_long));
        push("theory.secular", off(self.no_secular));
        out
    }
}

#[derive(Subcommand)]
enum Command {
    /// Write the analytic ephemeris.
    Propagate,
    /// Compare the analytic ephemeris with direct integration.
    Compare,
    /// Count and time the correction paths.
    Benchmark,
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let overrides = cli
        .set
        .iter()
        .cloned()
        .chain(cli.flags.overrides())
        .map(|s| parse_override(&s))
        .collect::<Result<Vec<Override>, _>>()?;
    let config = Config::load(cli.config.as_deref(), &overrides)?;
    match cli.command {
        Command::Propagate => {
            let rows = run_propagate(&config)?;
            eprintln!("wrote {} rows to {}", rows.len(), config.output.ephemeris);
        }
        Command::Compare => {
            let r = run_compare(&config)?;
            eprintln!("position rms {:.6e} km, max {:.6e} km", r.position_rms, r.position_max);
        }
        Command::Benchmark => {
            run_benchmark(&config)?;
            eprintln!("wrote {}", config.output.report);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let code = e.exit_code();
            eprintln!("error: {e}");
            ExitCode::from(code)
        }
    }
}
