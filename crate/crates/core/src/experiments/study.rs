use std::thread;
use std::time::Instant;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::fit::{fit_slope, SlopeFit};
use super::rough_data::gen_rough_data;
use crate::error::{Error, Result};
use crate::integrators::{solve_dnls_final, solve_dnls_with, step_count, Method, RunOptions};
use crate::observables::{hs_distance, ObservableSeries};
use crate::spectral::{Field, SpectralGrid};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 20_220_117;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StudyKind {
    Convergence,
    Conservation,
    SingleRun,
}

/// Parameters of one experiment.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StudyConfig {
    pub kind: StudyKind,
    /// Error norm index; data are drawn in `H^{s+1}`.
    pub s: f64,
    pub epsilon: f64,
    pub n_points: usize,
    /// Step sizes of the ladder. Conservation and single runs use the first.
    pub tau_ladder: Vec<f64>,
    pub tau_ref: f64,
    pub t_end: f64,
    pub seed: u64,
    pub target_norm: f64,
    pub method: Method,
    pub dealias: bool,
    pub output_path: String,
    /// Observables are recorded every `stride` steps.
    pub stride: usize,
}

impl StudyConfig {
    /// Desk-scale convergence study: n = 512, T = 1, τ = 2⁻⁵..2⁻⁹ against
    /// τ_ref = 2⁻¹².
    pub fn convergence(s: f64, method: Method) -> Self {
        StudyConfig {
            kind: StudyKind::Convergence,
            s,
            epsilon: 0.0,
            n_points: 512,
            tau_ladder: dyadic_ladder(5, 9),
            tau_ref: 2f64.powi(-12),
            t_end: 1.0,
            seed: DEFAULT_SEED,
            target_norm: 0.5,
            method,
            dealias: false,
            output_path: "out".into(),
            stride: 1,
        }
    }

    /// Desk-scale conservation study: data in H², n = 512, τ = 2⁻¹⁰, T = 100.
    pub fn conservation(method: Method) -> Self {
        StudyConfig {
            kind: StudyKind::Conservation,
            s: 1.0,
            tau_ladder: vec![2f64.powi(-10)],
            tau_ref: 2f64.powi(-12),
            t_end: 100.0,
            stride: 64,
            ..Self::convergence(1.0, method)
        }
    }

    /// One run at `tau` to `t_end` with observables at every step.
    pub fn single_run(s: f64, tau: f64, t_end: f64, method: Method) -> Self {
        StudyConfig {
            kind: StudyKind::SingleRun,
            tau_ladder: vec![tau],
            tau_ref: tau / 8.0,
            t_end,
            ..Self::convergence(s, method)
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.s >= 0.0) || !self.s.is_finite() {
            return Err(Error::Parameter(format!("s must be non-negative, got {}", self.s)));
        }
        if self.tau_ladder.is_empty() {
            return Err(Error::Parameter("tau ladder is empty".into()));
        }
        for &tau in &self.tau_ladder {
            step_count(self.t_end, tau)?;
        }
        if self.kind == StudyKind::Convergence {
            let min = self.tau_ladder.iter().copied().fold(f64::INFINITY, f64::min);
            if !(self.tau_ref < min) {
                return Err(Error::Parameter(format!(
                    "tau_ref {} must be smaller than every ladder step (min {min})",
                    self.tau_ref
                )));
            }
            step_count(self.t_end, self.tau_ref)?;
        }
        Ok(())
    }

    fn grid(&self) -> Result<SpectralGrid> {
        Ok(SpectralGrid::new(self.n_points)?.with_dealiasing(self.dealias))
    }

    fn initial_data(&self, grid: &SpectralGrid) -> Result<Field> {
        gen_rough_data(self.s, self.epsilon, grid, self.seed, self.target_norm)
    }
}

/// `2^{-from}, ..., 2^{-to}`.
pub fn dyadic_ladder(from: i32, to: i32) -> Vec<f64> {
    (from..=to).map(|j| 2f64.powi(-j)).collect()
}

/// Parses one step size written as a decimal (`0.03125`) or a power of two
/// (`2^-5`).
pub fn parse_tau(text: &str) -> Result<f64> {
    let text = text.trim();
    let bad = || Error::Parameter(format!("cannot parse step size {text:?}"));
    let tau = match text.strip_prefix("2^") {
        Some(exp) => 2f64.powi(exp.parse::<i32>().map_err(|_| bad())?),
        None => text.parse::<f64>().map_err(|_| bad())?,
    };
    if tau > 0.0 && tau.is_finite() {
        Ok(tau)
    } else {
        Err(bad())
    }
}

/// Parses a single step size or a halving range `a:b` such as `2^-5:2^-9`,
/// which expands to `a, a/2, ...` down to `b`.
pub fn parse_tau_arg(text: &str) -> Result<Vec<f64>> {
    let Some((from, to)) = text.split_once(':') else {
        return Ok(vec![parse_tau(text)?]);
    };
    let (from, to) = (parse_tau(from)?, parse_tau(to)?);
    let halvings = (from / to).log2();
    let count = halvings.round();
    if count < 0.0 || (halvings - count).abs() > 1e-9 {
        return Err(Error::Parameter(format!("{text:?} is not a halving range")));
    }
    Ok((0..=count as i32).map(|j| from * 2f64.powi(-j)).collect())
}

/// Outcome of one ladder step size.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LadderPoint {
    pub tau: f64,
    pub hs_error: Option<f64>,
    pub failure: Option<String>,
    pub runtime_s: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StudyResult {
    pub config: StudyConfig,
    pub version: String,
    pub mu: f64,
    pub ladder: Vec<LadderPoint>,
    pub fit: Option<SlopeFit>,
    pub fit_failure: Option<String>,
    pub reference_runtime_s: Option<f64>,
    pub observables: Option<ObservableSeries>,
    /// Final state coefficients in transform order, for single runs.
    pub final_state: Option<Vec<Complex64>>,
}

impl StudyResult {
    fn new(config: &StudyConfig, mu: f64) -> Self {
        StudyResult {
            config: config.clone(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            mu,
            ladder: Vec::new(),
            fit: None,
            fit_failure: None,
            reference_runtime_s: None,
            observables: None,
            final_state: None,
        }
    }

    /// The same result with every wall-clock field zeroed, for comparing
    /// payloads of repeated runs.
    pub fn without_timings(&self) -> Self {
        let mut r = self.clone();
        r.reference_runtime_s = r.reference_runtime_s.map(|_| 0.0);
        for p in &mut r.ladder {
            p.runtime_s = 0.0;
        }
        r
    }

    /// `(τ, error)` of the successful ladder points.
    pub fn errors(&self) -> Vec<(f64, f64)> {
        self.ladder.iter().filter_map(|p| p.hs_error.map(|e| (p.tau, e))).collect()
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_secs_f64())
}

/// Runs the study selected by `cfg.kind`.
pub fn run_study(cfg: &StudyConfig) -> Result<StudyResult> {
    match cfg.kind {
        StudyKind::Convergence => run_convergence(cfg),
        StudyKind::Conservation => run_conservation(cfg),
        StudyKind::SingleRun => run_single(cfg),
    }
}

/// Global `H^s` error at `t_end` for each ladder step, measured against the
/// same method at `tau_ref`. Ladder points run on separate threads.
pub fn run_convergence(cfg: &StudyConfig) -> Result<StudyResult> {
    expect_kind(cfg, StudyKind::Convergence)?;
    cfg.validate()?;
    let grid = cfg.grid()?;
    let u0 = cfg.initial_data(&grid)?;
    let solve = |tau: f64| solve_dnls_final(&u0, &RunOptions::new(tau, cfg.t_end, cfg.method));

    let (reference, ref_time) = timed(|| solve(cfg.tau_ref));
    let reference = reference?;
    let ladder: Vec<LadderPoint> = thread::scope(|scope| {
        let handles: Vec<_> = cfg
            .tau_ladder
            .iter()
            .map(|&tau| {
                let (solve, reference) = (&solve, &reference);
                scope.spawn(move || {
                    let (out, runtime_s) = timed(|| solve(tau).and_then(|u| hs_distance(&u, reference, cfg.s)));
                    match out {
                        Ok(e) => LadderPoint { tau, hs_error: Some(e), failure: None, runtime_s },
                        Err(err) => LadderPoint { tau, hs_error: None, failure: Some(err.to_string()), runtime_s },
                    }
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("ladder worker panicked")).collect()
    });

    let mut result = StudyResult::new(cfg, crate::gauge::mean_intensity(&u0));
    result.reference_runtime_s = Some(ref_time);
    result.ladder = ladder;
    match fit_slope(&result.errors()) {
        Ok(fit) => result.fit = Some(fit),
        Err(err) => result.fit_failure = Some(err.to_string()),
    }
    Ok(result)
}

/// Mass and energy along one long run at the first ladder step.
pub fn run_conservation(cfg: &StudyConfig) -> Result<StudyResult> {
    expect_kind(cfg, StudyKind::Conservation)?;
    observed_run(cfg, false)
}

/// One run with observables and the final state.
pub fn run_single(cfg: &StudyConfig) -> Result<StudyResult> {
    expect_kind(cfg, StudyKind::SingleRun)?;
    observed_run(cfg, true)
}

fn observed_run(cfg: &StudyConfig, keep_final: bool) -> Result<StudyResult> {
    cfg.validate()?;
    let grid = cfg.grid()?;
    let u0 = cfg.initial_data(&grid)?;
    let tau = cfg.tau_ladder[0];
    let opts = RunOptions::new(tau, cfg.t_end, cfg.method).with_stride(cfg.stride);
    let mut series = ObservableSeries::new();
    let mut last = u0.clone();
    let (out, runtime_s) = timed(|| {
        solve_dnls_with(&u0, &opts, |t, u| {
            series.record(t, u, cfg.dealias);
            if keep_final {
                last = u.clone();
            }
            Ok(())
        })
    });
    let mu = out?;
    let mut result = StudyResult::new(cfg, mu);
    result.ladder.push(LadderPoint { tau, hs_error: None, failure: None, runtime_s });
    result.fit_failure = Some(Error::TooFewPoints(0).to_string());
    result.observables = Some(series);
    if keep_final {
        result.final_state = Some(last.into_coeffs());
    }
    Ok(result)
}

fn expect_kind(cfg: &StudyConfig, kind: StudyKind) -> Result<()> {
    if cfg.kind == kind {
        Ok(())
    } else {
        Err(Error::Parameter(format!("expected a {kind:?} config, got {:?}", cfg.kind)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(kind: StudyKind) -> StudyConfig {
        StudyConfig {
            kind,
            n_points: 32,
            tau_ladder: dyadic_ladder(3, 5),
            tau_ref: 2f64.powi(-7),
            t_end: 0.25,
            ..StudyConfig::convergence(0.5, Method::Basic)
        }
    }

    #[test]
    fn tau_specs() {
        assert_eq!(parse_tau("2^-5").unwrap(), 0.03125);
        assert_eq!(parse_tau(" 0.25 ").unwrap(), 0.25);
        assert!(parse_tau("2^x").is_err());
        assert!(parse_tau("-0.1").is_err());
        assert_eq!(parse_tau_arg("2^-5:2^-9").unwrap(), dyadic_ladder(5, 9));
        assert_eq!(parse_tau_arg("0.5").unwrap(), vec![0.5]);
        assert_eq!(parse_tau_arg("2^-3:2^-3").unwrap(), vec![0.125]);
        assert!(parse_tau_arg("2^-5:0.01").is_err());
        assert!(parse_tau_arg("2^-9:2^-5").is_err());
    }

    #[test]
    fn validation() {
        assert!(StudyConfig::convergence(0.5, Method::Basic).validate().is_ok());
        assert!(StudyConfig::conservation(Method::Symmetric).validate().is_ok());
        let mut c = small(StudyKind::Convergence);
        c.tau_ref = 0.125;
        assert!(c.validate().is_err());
        c.tau_ref = 1e-3;
        c.t_end = 0.3;
        assert!(c.validate().is_err());
        let mut c = small(StudyKind::Convergence);
        c.s = -0.5;
        assert!(c.validate().is_err());
        c.s = 0.5;
        c.tau_ladder.clear();
        assert!(c.validate().is_err());
    }

    #[test]
    fn convergence_is_deterministic() {
        let cfg = small(StudyKind::Convergence);
        let a = run_convergence(&cfg).unwrap();
        let b = run_convergence(&cfg).unwrap();
        assert_eq!(a.without_timings(), b.without_timings());
        assert_eq!(a.ladder.len(), 3);
        assert!(a.fit.is_some());
        let errs = a.errors();
        assert!(errs.windows(2).all(|w| w[1].1 < w[0].1));
    }

    #[test]
    fn short_ladder_has_no_fit() {
        let mut cfg = small(StudyKind::Convergence);
        cfg.tau_ladder.truncate(2);
        let r = run_convergence(&cfg).unwrap();
        assert!(r.fit.is_none());
        assert!(r.fit_failure.is_some());
    }

    #[test]
    fn failed_point_is_recorded() {
        // one explicit RK4 step of size 1/4 on large data overflows
        let mut cfg = small(StudyKind::Convergence);
        cfg.n_points = 64;
        cfg.target_norm = 8.0;
        cfg.method = Method::OracleRk4;
        cfg.tau_ladder = vec![0.25, 2f64.powi(-9), 2f64.powi(-10)];
        cfg.tau_ref = 2f64.powi(-12);
        let r = run_convergence(&cfg).unwrap();
        assert!(r.ladder[0].failure.is_some());
        assert!(r.ladder[0].hs_error.is_none());
        assert!(r.ladder[1].hs_error.is_some());
        assert!(r.fit.is_none());
    }

    #[test]
    fn conservation_and_single_runs() {
        let mut cfg = small(StudyKind::Conservation);
        cfg.tau_ladder = vec![2f64.powi(-6)];
        cfg.stride = 2;
        let r = run_conservation(&cfg).unwrap();
        let series = r.observables.as_ref().unwrap();
        // t = 0, every second of 16 steps
        assert_eq!(series.len(), 9);
        assert!(series.max_rel_mass_err() < 1e-2);
        assert!(run_single(&cfg).is_err());

        cfg.kind = StudyKind::SingleRun;
        let r = run_study(&cfg).unwrap();
        assert_eq!(r.final_state.as_ref().unwrap().len(), 32);
    }
}
