//! Right-hand side of the gauge-transformed equation
//! `∂ₜv - i∂ₓ²v = F(v)` and the resonance kernels used by the integrators.
//!
//! ```text
//! F(v) = -v² v̄ₓ + (i/2)|v|⁴v - iμ|v|²v + iψ(v)v
//! ψ(v) = Π₀(2 Im(v̄ₓ v) - |v|⁴/2) + μ²
//! ```
//!
//! Here `v̄ₓ` is always `∂ₓ(v̄)`, with the conjugate taken pointwise.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::spectral::{phi1, Field, Multiplier, MultiplierSymbol, SpectralGrid};

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// Grid size above which [`g0_integral_oracle`] refuses to run.
pub const ORACLE_MAX_POINTS: usize = 64;

/// The four summands of `F(v)` and the scalar `ψ(v)` entering `F₄`.
#[derive(Clone, Debug)]
pub struct NonlinearTerms {
    pub f1: Field,
    pub f2: Field,
    pub f3: Field,
    pub f4: Field,
    pub psi_value: f64,
}

impl NonlinearTerms {
    pub fn total(&self) -> Field {
        &(&(&self.f1 + &self.f2) + &self.f3) + &self.f4
    }
}

/// `ψ(v) = Π₀(2 Im(v̄ₓ v) - |v|⁴/2) + μ²`.
///
/// The means are read off the zero coefficient of the pseudospectral
/// products, which equals the rectangle-rule quadrature of the integrand.
pub fn psi(v: &Field, mu: f64) -> f64 {
    let vbar = v.conj();
    let twist = vbar.derivative().mul(v).expect("same grid").mean_mode();
    let intensity = v.mul(&vbar).expect("same grid");
    let quartic = intensity.mul(&intensity).expect("same grid").mean_mode();
    debug_assert!(!(quartic.im.abs() > 1e-12 * quartic.re.abs().max(1.0)));
    2.0 * twist.im - 0.5 * quartic.re + mu * mu
}

/// `Π₀(v² ∂ₓv̄)`.
pub fn mean_cubic_derivative(v: &Field) -> Complex64 {
    let v2 = v.mul(v).expect("same grid");
    v2.mul(&v.conj().derivative()).expect("same grid").mean_mode()
}

/// All four terms of `F(v)`, products formed pseudospectrally.
pub fn eval_f(v: &Field, mu: f64) -> NonlinearTerms {
    let vbar = v.conj();
    let v2 = v.mul(v).expect("same grid");
    let f1 = -&v2.mul(&vbar.derivative()).expect("same grid");
    let intensity = v.mul(&vbar).expect("same grid");
    let cubic = intensity.mul(v).expect("same grid");
    let f2 = &intensity.mul(&cubic).expect("same grid") * (0.5 * I);
    let f3 = &cubic * (-I * mu);
    let psi_value = psi(v, mu);
    let f4 = v * (I * psi_value);
    NonlinearTerms { f1, f2, f3, f4, psi_value }
}

/// Free-flow multipliers `e^{±iτ∂ₓ²}` tabulated once for repeated
/// evaluation of `g₀(·, ·, τ)`.
#[derive(Clone, Debug)]
pub struct ResonanceKernel {
    tau: f64,
    // e^{iτ∂ₓ²}
    forward: Multiplier,
    // e^{-iτ∂ₓ²}
    backward: Multiplier,
}

impl ResonanceKernel {
    pub fn new(grid: &SpectralGrid, tau: f64) -> Self {
        ResonanceKernel {
            tau,
            forward: MultiplierSymbol::free_flow(tau).tabulate(grid),
            backward: MultiplierSymbol::free_flow(-tau).tabulate(grid),
        }
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    /// The same kernel for `-τ`.
    pub fn reversed(&self) -> Self {
        ResonanceKernel { tau: -self.tau, forward: self.backward.clone(), backward: self.forward.clone() }
    }

    /// `g₀(v₁, v₂, τ) = (I - Π₀)(e^{-iτ∂ₓ²}((e^{-iτ∂ₓ²}v̄₁) e^{iτ∂ₓ²}v₂²) - v̄₁v₂²)`.
    pub fn g0(&self, v1: &Field, v2: &Field) -> Result<Field> {
        if v1.grid().n_points() != self.forward.n_points() {
            return Err(Error::GridMismatch { left: v1.grid().n_points(), right: self.forward.n_points() });
        }
        let vbar = v1.conj();
        let square = v2.mul(v2)?;
        let first = vbar.apply(&self.backward).mul(&square.apply(&self.forward))?.apply(&self.backward);
        let second = vbar.mul(&square)?;
        Ok((&first - &second).without_mean())
    }

    /// `g₁(v, τ) = g₀(v, v, τ)`.
    pub fn g1(&self, v: &Field) -> Field {
        self.g0(v, v).expect("same grid")
    }

    /// `g₂(v, τ) = g₁(v, τ) - g₁(v, -τ)`.
    pub fn g2(&self, v: &Field) -> Field {
        &self.g1(v) - &self.reversed().g1(v)
    }
}

pub fn g0(v1: &Field, v2: &Field, tau: f64) -> Result<Field> {
    v1.grid().check_same(v2.grid())?;
    ResonanceKernel::new(v1.grid(), tau).g0(v1, v2)
}

pub fn g1(v: &Field, tau: f64) -> Field {
    ResonanceKernel::new(v.grid(), tau).g1(v)
}

pub fn g2(v: &Field, tau: f64) -> Field {
    ResonanceKernel::new(v.grid(), tau).g2(v)
}

/// Independent evaluation of `g₀` from its integral representation
/// `-2i∂ₓ ∫₀^τ e^{-iν∂ₓ²}((∂ₓe^{-iν∂ₓ²}v̄₁) e^{iν∂ₓ²}v₂²) dν`.
///
/// Works triad by triad on the exact (alias-free) convolution: `v₂²` is
/// built by direct summation, each interaction `p + q = k` contributes its
/// phase integral `τφ₁(iτ(k² + p² - q²))` in closed form, and only modes
/// with `|k| < n/2` take part. It therefore agrees with
/// [`g0`] on dealiased grids, and on any grid when the inputs are band
/// limited so that no product aliases.
pub fn g0_integral_oracle(v1: &Field, v2: &Field, tau: f64) -> Result<Field> {
    let grid = v1.grid();
    grid.check_same(v2.grid())?;
    let n = grid.n_points();
    if n > ORACLE_MAX_POINTS {
        return Err(Error::GridTooLarge { n_points: n, limit: ORACLE_MAX_POINTS });
    }
    let ks = grid.wavenumbers();
    let vbar = v1.conj();
    let half = (n / 2) as i64;
    let kept = |k: i64| k.abs() < half;

    let mut square = Field::zeros(grid);
    for &p in ks {
        for &q in ks {
            if kept(p) && kept(q) && kept(p + q) {
                let c = square.coeff(p + q) + v2.coeff(p) * v2.coeff(q);
                square.set_coeff(p + q, c);
            }
        }
    }

    let mut out = Field::zeros(grid);
    for &p in ks {
        for &q in ks {
            let k = p + q;
            if k == 0 || !kept(p) || !kept(q) || !kept(k) {
                continue;
            }
            let (kf, pf, qf) = (k as f64, p as f64, q as f64);
            let alpha = kf * kf + pf * pf - qf * qf;
            let integral = tau * phi1(I * tau * alpha);
            let inner = I * pf * vbar.coeff(p) * square.coeff(q) * integral;
            let contribution = -2.0 * I * (I * kf) * inner;
            out.set_coeff(k, out.coeff(k) + contribution);
        }
    }
    Ok(out)
}
