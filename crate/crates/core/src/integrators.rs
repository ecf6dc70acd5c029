//! Time integration of the gauge-transformed equation
//! `∂ₜv - i∂ₓ²v = F(v)`.
//!
//! Two low-regularity schemes are provided, plus a classical reference:
//!
//! - [`Method::Basic`]: the one-step scheme
//!   `v_{n+1} = e^{iτ∂ₓ²}(v_n + N(v_n, τ))` with
//!   ```text
//!   N(v, τ) = -(i/2)∂ₓ⁻¹g₁(v,τ) - τΠ₀(v²∂ₓv̄) + (i/2)τ v² φ₁(-2iτ∂ₓ²)(v̄²v)
//!             - iμτ v² φ₁(-2iτ∂ₓ²)v̄ + iτψ(v)v
//!   ```
//! - [`Method::Symmetric`]: the two-step scheme obtained by combining the
//!   basic scheme at `+τ` and `-τ`; the first step is the implicit
//!   `v₁ = (Ψ₁^{-τ/2})⁻¹ ∘ Ψ₁^{τ/2}(v₀)` ([`starter`]).
//! - [`Method::OracleRk4`]: classical RK4 on the twisted variable
//!   `z = e^{-it∂ₓ²}v`. Explicit and conditionally stable; meant for small
//!   grids as an independent check.
//!
//! Signed step sizes are accepted by the scheme objects; the trajectory
//! drivers require `τ > 0`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gauge::{gauge_forward, gauge_inverse, GaugeContext};
use crate::nonlinearity::{eval_f, mean_cubic_derivative, psi, ResonanceKernel};
use crate::spectral::{Field, Multiplier, MultiplierSymbol, SpectralGrid};

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Basic,
    Symmetric,
    OracleRk4,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Basic => "basic",
            Method::Symmetric => "symmetric",
            Method::OracleRk4 => "oracle_rk4",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "basic" => Ok(Method::Basic),
            "symmetric" => Ok(Method::Symmetric),
            "oracle" | "oracle_rk4" | "rk4" => Ok(Method::OracleRk4),
            other => Err(Error::Parameter(format!("unknown method `{other}`"))),
        }
    }
}

/// Operators of `Ψ₁^τ`, tabulated once per `(grid, τ)`.
#[derive(Clone, Debug)]
pub struct BasicScheme {
    tau: f64,
    mu: f64,
    // e^{iτ∂ₓ²}
    free: Multiplier,
    // φ₁(-2iτ∂ₓ²)
    phi: Multiplier,
    kernel: ResonanceKernel,
}

impl BasicScheme {
    pub fn new(grid: &SpectralGrid, tau: f64, mu: f64) -> Self {
        BasicScheme {
            tau,
            mu,
            free: MultiplierSymbol::free_flow(tau).tabulate(grid),
            phi: MultiplierSymbol::phi1_of_laplacian(Complex64::new(0.0, -2.0 * tau)).tabulate(grid),
            kernel: ResonanceKernel::new(grid, tau),
        }
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    /// The bracket of `Ψ₁^τ` minus `v`, i.e. `N(v, τ)`.
    pub fn nonlinear_part(&self, v: &Field) -> Field {
        let tau = self.tau;
        let vbar = v.conj();
        let v2 = v.mul(v).expect("same grid");
        let quintic_arg = vbar.mul(&vbar).and_then(|w| w.mul(v)).expect("same grid");

        let inner = &quintic_arg.apply(&self.phi) * (0.5 * I * tau);
        let inner = inner.axpy(-I * self.mu * tau, &vbar.apply(&self.phi));
        let mut out = v2.mul(&inner).expect("same grid");

        out = out.axpy(-0.5 * I, &self.kernel.g1(v).inv_derivative());
        out = out.axpy(I * tau * psi(v, self.mu), v);
        let mean = out.mean_mode() - tau * mean_cubic_derivative(v);
        out.set_coeff(0, mean);
        out
    }

    /// `Ψ₁^τ(v)`.
    pub fn step(&self, v: &Field) -> Field {
        (v + &self.nonlinear_part(v)).apply(&self.free)
    }
}

/// Operators of the symmetric two-step map `Ψ₂^τ`.
#[derive(Clone, Debug)]
pub struct SymmetricScheme {
    tau: f64,
    mu: f64,
    // e^{iτ∂ₓ²}
    free: Multiplier,
    // e^{2iτ∂ₓ²}
    free_double: Multiplier,
    // e^{2iτ∂ₓ²}φ₁(-4iτ∂ₓ²) = sin(2τk²)/(2τk²)
    even_phi: Multiplier,
    kernel: ResonanceKernel,
}

impl SymmetricScheme {
    pub fn new(grid: &SpectralGrid, tau: f64, mu: f64) -> Self {
        SymmetricScheme {
            tau,
            mu,
            free: MultiplierSymbol::free_flow(tau).tabulate(grid),
            free_double: MultiplierSymbol::free_flow(2.0 * tau).tabulate(grid),
            even_phi: MultiplierSymbol::symmetric_phi(tau).tabulate(grid),
            kernel: ResonanceKernel::new(grid, tau),
        }
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    /// The bracket of `Ψ₂^τ`; odd in `τ`.
    pub fn bracket(&self, v: &Field) -> Field {
        let tau = self.tau;
        let vbar = v.conj();
        let v2 = v.mul(v).expect("same grid");
        let quintic_arg = vbar.mul(&vbar).and_then(|w| w.mul(v)).expect("same grid");

        let inner = &quintic_arg.apply(&self.even_phi) * (I * tau);
        let inner = inner.axpy(-2.0 * I * self.mu * tau, &vbar.apply(&self.even_phi));
        let mut out = v2.mul(&inner).expect("same grid");

        out = out.axpy(-0.5 * I, &self.kernel.g2(v).inv_derivative());
        out = out.axpy(2.0 * I * tau * psi(v, self.mu), v);
        let mean = out.mean_mode() - 2.0 * tau * mean_cubic_derivative(v);
        out.set_coeff(0, mean);
        out
    }

    /// `Ψ₂^τ(v_n, v_{n-1}) = e^{2iτ∂ₓ²}v_{n-1} + e^{iτ∂ₓ²}B(v_n, τ)`.
    pub fn step(&self, v_curr: &Field, v_prev: &Field) -> Field {
        &v_prev.apply(&self.free_double) + &self.bracket(v_curr).apply(&self.free)
    }
}

/// `v_{n+1} = Ψ₁^τ(v_n)`.
pub fn step_basic(v: &Field, tau: f64, mu: f64) -> Field {
    BasicScheme::new(v.grid(), tau, mu).step(v)
}

/// `v_{n+1} = Ψ₂^τ(v_n, v_{n-1})`.
pub fn step_symmetric(v_curr: &Field, v_prev: &Field, tau: f64, mu: f64) -> Result<Field> {
    v_curr.grid().check_same(v_prev.grid())?;
    if tau == 0.0 {
        return Err(Error::Parameter("symmetric step needs tau != 0".into()));
    }
    Ok(SymmetricScheme::new(v_curr.grid(), tau, mu).step(v_curr, v_prev))
}

/// Fixed-point iteration controls for [`starter`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct StarterOptions {
    /// Stop once successive iterates differ by less than this in `H^s`.
    pub tol: f64,
    pub max_iter: usize,
    /// Sobolev index of the stopping norm.
    pub s: f64,
}

impl Default for StarterOptions {
    fn default() -> Self {
        StarterOptions { tol: 1e-12, max_iter: 50, s: 1.0 }
    }
}

/// Outcome of [`starter_with_report`].
#[derive(Clone, Debug)]
pub struct StarterReport {
    pub v1: Field,
    pub iterations: usize,
    pub last_increment: f64,
}

/// `v₁ = (Ψ₁^{-τ/2})⁻¹ ∘ Ψ₁^{τ/2}(v₀)`.
pub fn starter(v0: &Field, tau: f64, mu: f64, opts: StarterOptions) -> Result<Field> {
    starter_with_report(v0, tau, mu, opts).map(|r| r.v1)
}

/// As [`starter`], also reporting the iteration count.
///
/// With `w = Ψ₁^{τ/2}(v₀)` the defining equation
/// `e^{-i(τ/2)∂ₓ²}(v₁ + N(v₁, -τ/2)) = w` is iterated as
/// `v₁ ← e^{i(τ/2)∂ₓ²}w - N(v₁, -τ/2)`, starting from `e^{i(τ/2)∂ₓ²}w`.
pub fn starter_with_report(v0: &Field, tau: f64, mu: f64, opts: StarterOptions) -> Result<StarterReport> {
    if opts.tol <= 0.0 || opts.max_iter == 0 {
        return Err(Error::Parameter("starter needs tol > 0 and max_iter >= 1".into()));
    }
    let grid = v0.grid();
    let forward = BasicScheme::new(grid, 0.5 * tau, mu);
    let backward = BasicScheme::new(grid, -0.5 * tau, mu);
    let target = forward.step(v0).apply(&forward.free);

    let mut v = target.clone();
    let mut increment = f64::INFINITY;
    for iteration in 1..=opts.max_iter {
        let next = &target - &backward.nonlinear_part(&v);
        if !next.is_finite() {
            return Err(Error::StarterDiverged { iterations: iteration, residual: f64::INFINITY });
        }
        increment = (&next - &v).sobolev_norm(opts.s);
        v = next;
        if increment < opts.tol {
            return Ok(StarterReport { v1: v, iterations: iteration, last_increment: increment });
        }
    }
    Err(Error::StarterDiverged { iterations: opts.max_iter, residual: increment })
}

/// Right-hand side of the twisted equation
/// `∂ₜz = e^{-it∂ₓ²}F(e^{it∂ₓ²}z)`.
fn twisted_rhs(z: &Field, t: f64, mu: f64) -> Field {
    let v = z.apply_symbol(&MultiplierSymbol::free_flow(t));
    eval_f(&v, mu).total().apply_symbol(&MultiplierSymbol::free_flow(-t))
}

/// One classical RK4 step for the twisted variable.
fn rk4_twisted_step(z: &Field, t: f64, h: f64, mu: f64) -> Field {
    let half = Complex64::new(0.5 * h, 0.0);
    let k1 = twisted_rhs(z, t, mu);
    let k2 = twisted_rhs(&z.axpy(half, &k1), t + 0.5 * h, mu);
    let k3 = twisted_rhs(&z.axpy(half, &k2), t + 0.5 * h, mu);
    let k4 = twisted_rhs(&z.axpy(Complex64::new(h, 0.0), &k3), t + h, mu);
    let sixth = h / 6.0;
    let mut out = z.axpy(Complex64::new(sixth, 0.0), &k1);
    out = out.axpy(Complex64::new(2.0 * sixth, 0.0), &k2);
    out = out.axpy(Complex64::new(2.0 * sixth, 0.0), &k3);
    out.axpy(Complex64::new(sixth, 0.0), &k4)
}

/// Snapshot of a running integration.
#[derive(Clone, Debug)]
pub struct StepperState {
    pub v_curr: Field,
    /// Previous state, present for the symmetric method after its first step.
    pub v_prev: Option<Field>,
    pub t: f64,
    pub tau: f64,
    pub mu: f64,
    pub method: Method,
    pub steps: usize,
}

enum Scheme {
    Basic(BasicScheme),
    Symmetric(SymmetricScheme),
    // twisted variable z = e^{-it∂ₓ²}v
    Rk4 { z: Field, z0_norm: f64 },
}

/// Advances a [`StepperState`] one step at a time.
pub struct Stepper {
    state: StepperState,
    scheme: Scheme,
    starter: StarterOptions,
}

impl Stepper {
    pub fn new(v0: Field, tau: f64, mu: f64, method: Method, starter: StarterOptions) -> Result<Self> {
        let state = StepperState { v_curr: v0, v_prev: None, t: 0.0, tau, mu, method, steps: 0 };
        Stepper::from_state(state, starter)
    }

    /// Resumes from a saved state.
    pub fn from_state(state: StepperState, starter: StarterOptions) -> Result<Self> {
        if !(state.tau > 0.0) || !state.tau.is_finite() {
            return Err(Error::Parameter(format!("tau must be positive, got {}", state.tau)));
        }
        if state.method == Method::Symmetric && state.steps > 0 && state.v_prev.is_none() {
            return Err(Error::Parameter("symmetric method needs the previous state to resume".into()));
        }
        let grid = state.v_curr.grid().clone();
        let scheme = match state.method {
            Method::Basic => Scheme::Basic(BasicScheme::new(&grid, state.tau, state.mu)),
            Method::Symmetric => Scheme::Symmetric(SymmetricScheme::new(&grid, state.tau, state.mu)),
            Method::OracleRk4 => {
                let z = state.v_curr.apply_symbol(&MultiplierSymbol::free_flow(-state.t));
                let z0_norm = z.sobolev_norm(0.0);
                Scheme::Rk4 { z, z0_norm }
            }
        };
        Ok(Stepper { state, scheme, starter })
    }

    pub fn state(&self) -> &StepperState {
        &self.state
    }

    pub fn into_state(self) -> StepperState {
        self.state
    }

    pub fn advance(&mut self) -> Result<()> {
        let StepperState { tau, mu, .. } = self.state;
        let next = match &mut self.scheme {
            Scheme::Basic(scheme) => scheme.step(&self.state.v_curr),
            Scheme::Symmetric(scheme) => match &self.state.v_prev {
                None => starter(&self.state.v_curr, tau, mu, self.starter)?,
                Some(prev) => scheme.step(&self.state.v_curr, prev),
            },
            Scheme::Rk4 { z, z0_norm } => {
                let t = self.state.t;
                *z = rk4_twisted_step(z, t, tau, mu);
                let norm = z.sobolev_norm(0.0);
                if *z0_norm > 0.0 && norm > 10.0 * *z0_norm {
                    return Err(Error::Unstable { t: t + tau, initial: *z0_norm, current: norm });
                }
                z.apply_symbol(&MultiplierSymbol::free_flow(t + tau))
            }
        };
        self.state.steps += 1;
        self.state.t = self.state.steps as f64 * tau;
        if !next.is_finite() {
            return Err(Error::NonFinite { t: self.state.t });
        }
        let prev = std::mem::replace(&mut self.state.v_curr, next);
        if self.state.method == Method::Symmetric {
            self.state.v_prev = Some(prev);
        }
        Ok(())
    }
}

/// Parameters of a trajectory run.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RunOptions {
    pub tau: f64,
    pub t_end: f64,
    pub method: Method,
    /// Record every `stride`-th step (the final step is always recorded).
    pub stride: usize,
    pub starter: StarterOptions,
}

impl RunOptions {
    pub fn new(tau: f64, t_end: f64, method: Method) -> Self {
        RunOptions { tau, t_end, method, stride: 1, starter: StarterOptions::default() }
    }

    pub fn with_stride(self, stride: usize) -> Self {
        RunOptions { stride: stride.max(1), ..self }
    }

    pub fn with_starter(self, starter: StarterOptions) -> Self {
        RunOptions { starter, ..self }
    }
}

/// Number of steps `m` with `m τ = t_end`, or an error if there is none.
pub fn step_count(t_end: f64, tau: f64) -> Result<usize> {
    if !(tau > 0.0) || !tau.is_finite() {
        return Err(Error::Parameter(format!("tau must be positive, got {tau}")));
    }
    if !(t_end >= 0.0) || !t_end.is_finite() {
        return Err(Error::Parameter(format!("t_end must be non-negative, got {t_end}")));
    }
    let m = (t_end / tau).round();
    if (m * tau - t_end).abs() > 1e-9 * t_end.max(tau) {
        return Err(Error::StepCount { t_end, tau });
    }
    Ok(m as usize)
}

/// Run metadata carried by a [`Trajectory`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub method: Method,
    pub n_points: usize,
    pub tau: f64,
    pub s: Option<f64>,
    pub seed: Option<u64>,
    pub mu: f64,
}

/// Time-stamped states of one run.
#[derive(Clone, Debug)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub states: Vec<Field>,
    pub meta: RunManifest,
}

impl Trajectory {
    pub fn last(&self) -> Option<(f64, &Field)> {
        self.times.last().copied().zip(self.states.last())
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }
}

/// Integrates `v` from `v0`, calling `observe(t, v)` at `t = 0` and at every
/// recorded step.
pub fn evolve_with(
    v0: &Field,
    mu: f64,
    opts: &RunOptions,
    mut observe: impl FnMut(f64, &Field) -> Result<()>,
) -> Result<()> {
    let m = step_count(opts.t_end, opts.tau)?;
    if !v0.is_finite() {
        return Err(Error::NonFinite { t: 0.0 });
    }
    observe(0.0, v0)?;
    if m == 0 {
        return Ok(());
    }
    let mut stepper = Stepper::new(v0.clone(), opts.tau, mu, opts.method, opts.starter)?;
    let stride = opts.stride.max(1);
    for n in 1..=m {
        stepper.advance()?;
        if n % stride == 0 || n == m {
            let state = stepper.state();
            observe(state.t, &state.v_curr)?;
        }
    }
    Ok(())
}

/// Integrates the transformed equation and keeps every `stride`-th state.
pub fn evolve(v0: &Field, mu: f64, opts: &RunOptions) -> Result<Trajectory> {
    let mut times = Vec::new();
    let mut states = Vec::new();
    evolve_with(v0, mu, opts, |t, v| {
        times.push(t);
        states.push(v.clone());
        Ok(())
    })?;
    let meta =
        RunManifest { method: opts.method, n_points: v0.grid().n_points(), tau: opts.tau, s: None, seed: None, mu };
    Ok(Trajectory { times, states, meta })
}

/// Classical RK4 reference for the transformed equation with step `tau`.
pub fn oracle_rk4(v0: &Field, tau: f64, t_end: f64, mu: f64) -> Result<Trajectory> {
    evolve(v0, mu, &RunOptions::new(tau, t_end, Method::OracleRk4))
}

/// Solves the dNLS for `u` through the gauge: `v₀ = 𝒢₀(u₀)`, integrate `v`,
/// and observe `u(t_n) = 𝒢⁻¹(v_n)(t_n)`. Returns `μ`.
pub fn solve_dnls_with(
    u0: &Field,
    opts: &RunOptions,
    mut observe: impl FnMut(f64, &Field) -> Result<()>,
) -> Result<f64> {
    let ctx = GaugeContext::for_initial(u0);
    let v0 = gauge_forward(u0);
    evolve_with(
        &v0,
        ctx.mu,
        opts,
        |t, v| {
            if t == 0.0 {
                observe(t, u0)
            } else {
                observe(t, &gauge_inverse(v, ctx.at(t)))
            }
        },
    )?;
    Ok(ctx.mu)
}

/// Full `u`-trajectory of the dNLS.
pub fn solve_dnls(u0: &Field, opts: &RunOptions) -> Result<Trajectory> {
    let mut times = Vec::new();
    let mut states = Vec::new();
    let mu = solve_dnls_with(u0, opts, |t, u| {
        times.push(t);
        states.push(u.clone());
        Ok(())
    })?;
    let meta =
        RunManifest { method: opts.method, n_points: u0.grid().n_points(), tau: opts.tau, s: None, seed: None, mu };
    Ok(Trajectory { times, states, meta })
}

/// `u(t_end)` only.
pub fn solve_dnls_final(u0: &Field, opts: &RunOptions) -> Result<Field> {
    let opts = RunOptions { stride: usize::MAX, ..*opts };
    let mut last = u0.clone();
    solve_dnls_with(u0, &opts, |_, u| {
        last = u.clone();
        Ok(())
    })?;
    Ok(last)
}

/// Exact plane wave `a e^{i(kx + (k|a|² - k²)t)}` of the dNLS.
pub fn plane_wave(grid: &SpectralGrid, a: Complex64, k: i64, t: f64) -> Field {
    let kf = k as f64;
    let omega = kf * a.norm_sqr() - kf * kf;
    Field::mode(grid, k, a * Complex64::from_polar(1.0, omega * t))
}
