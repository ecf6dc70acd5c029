//! Benchmark driver: convergence ladders, conservation runs and single runs.
//!
//! Writes result files under `--out` and prints a JSON summary on stdout.
//! Failures exit with status 1 and a JSON object `{"error", "message"}` on
//! stderr.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use dnls::experiments::{parse_tau, parse_tau_arg, run_study, write_result, StudyConfig};
use dnls::integrators::Method;
use dnls::{Error, Result};
use serde_json::json;

#[derive(Parser)]
#[command(name = "dnls-bench", version, about = "Low-regularity integrators for the derivative NLS")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Global H^s error against a fine reference over a step-size ladder.
    Convergence(Flags),
    /// Mass and energy drift over a long run.
    Conservation(Flags),
    /// One run with observables and the final state.
    Run(Flags),
}

#[derive(Args)]
struct Flags {
    /// Error norm index; initial data lie in H^{s+1}.
    #[arg(long)]
    s: Option<f64>,
    #[arg(long)]
    eps: Option<f64>,
    #[arg(long)]
    n_points: Option<usize>,
    /// Step size, repeatable; `2^-5`, `0.01` or a halving range `2^-5:2^-9`.
    #[arg(long)]
    tau: Vec<String>,
    #[arg(long, value_parser = step_size)]
    tau_ref: Option<f64>,
    #[arg(long)]
    t_end: Option<f64>,
    #[arg(long)]
    seed: Option<u64>,
    /// Number of consecutive seeds to run, starting at `--seed`.
    #[arg(long, default_value_t = 1)]
    seeds: u64,
    #[arg(long)]
    target_norm: Option<f64>,
    /// basic, symmetric or oracle.
    #[arg(long, default_value = "basic")]
    method: Method,
    #[arg(long)]
    dealias: bool,
    #[arg(long, default_value = "out")]
    out: PathBuf,
    #[arg(long)]
    stride: Option<usize>,
}

fn step_size(text: &str) -> std::result::Result<f64, String> {
    parse_tau(text).map_err(|e| e.to_string())
}

impl Flags {
    fn config(&self, base: StudyConfig) -> Result<StudyConfig> {
        let mut cfg = base;
        if let Some(s) = self.s {
            cfg.s = s;
        }
        if let Some(eps) = self.eps {
            cfg.epsilon = eps;
        }
        if let Some(n) = self.n_points {
            cfg.n_points = n;
        }
        if !self.tau.is_empty() {
            let mut ladder = Vec::new();
            for arg in &self.tau {
                ladder.extend(parse_tau_arg(arg)?);
            }
            cfg.tau_ladder = ladder;
        }
        if let Some(t) = self.tau_ref {
            cfg.tau_ref = t;
        }
        if let Some(t) = self.t_end {
            cfg.t_end = t;
        }
        if let Some(seed) = self.seed {
            cfg.seed = seed;
        }
        if let Some(norm) = self.target_norm {
            cfg.target_norm = norm;
        }
        if let Some(stride) = self.stride {
            cfg.stride = stride.max(1);
        }
        cfg.dealias = self.dealias;
        cfg.output_path = self.out.display().to_string();
        Ok(cfg)
    }
}

fn run(cli: Cli) -> Result<serde_json::Value> {
    let (flags, base) = match &cli.command {
        Command::Convergence(f) => (f, StudyConfig::convergence(f.s.unwrap_or(0.5), f.method)),
        Command::Conservation(f) => (f, StudyConfig::conservation(f.method)),
        Command::Run(f) => (f, StudyConfig::single_run(f.s.unwrap_or(1.0), 2f64.powi(-8), 1.0, f.method)),
    };
    let cfg = flags.config(base)?;
    if flags.seeds == 0 {
        return Err(Error::Parameter("--seeds must be at least 1".into()));
    }
    let mut runs = Vec::new();
    for offset in 0..flags.seeds {
        let mut cfg = cfg.clone();
        cfg.seed = cfg.seed.wrapping_add(offset);
        let dir = if flags.seeds > 1 { flags.out.join(format!("seed-{}", cfg.seed)) } else { flags.out.clone() };
        cfg.output_path = dir.display().to_string();
        let result = run_study(&cfg)?;
        let written = write_result(&result, &dir)?;
        let observables = result.observables.as_ref();
        runs.push(json!({
            "seed": cfg.seed,
            "dir": dir,
            "files": written,
            "slope": result.fit.map(|f| f.slope),
            "intercept": result.fit.map(|f| f.intercept),
            "errors": result.errors(),
            "max_rel_mass_err": observables.map(|o| o.max_rel_mass_err()),
            "max_rel_energy_err": observables.map(|o| o.max_rel_energy_err()),
        }));
    }
    Ok(json!({ "runs": runs }))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(summary) => {
            println!("{}", serde_json::to_string_pretty(&summary).expect("summary serialises"));
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("{}", json!({ "error": err.kind(), "message": err.to_string() }));
            ExitCode::FAILURE
        }
    }
}
