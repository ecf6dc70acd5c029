//! Gauge transformation for the periodic dNLS.
//!
//! `𝒢₀(f) = e^{-iℐ(f)} f` with `ℐ(f)` the zero-mean primitive of
//! `|f|² - Π₀|f|²`, and `𝒢(u)(t) = κ_{-μ} 𝒢₀(u(t))` where `κ_c` translates by
//! `2ct`. The inverse is `𝒢⁻¹(v)(t) = e^{iℐ(κ_μ v)} κ_μ v`.

use num_complex::Complex64;

use crate::spectral::{Field, MultiplierSymbol};

/// Per-trajectory gauge parameters: `μ = Π₀|u₀|²`, fixed at `t = 0`, and the
/// time of the slice being mapped.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GaugeContext {
    pub mu: f64,
    pub t: f64,
}

impl GaugeContext {
    pub fn new(mu: f64, t: f64) -> Self {
        debug_assert!(mu >= 0.0);
        GaugeContext { mu, t }
    }

    /// Context for the trajectory starting at `u0`.
    pub fn for_initial(u0: &Field) -> Self {
        GaugeContext { mu: mean_intensity(u0), t: 0.0 }
    }

    pub fn at(self, t: f64) -> Self {
        GaugeContext { t, ..self }
    }
}

/// `μ(f) = Π₀|f|²`, computed through Parseval.
pub fn mean_intensity(f: &Field) -> f64 {
    f.coeffs().iter().map(|c| c.norm_sqr()).sum()
}

/// Zero-mean primitive of `|f|² - μ(f)`, returned as a real-valued field.
///
/// `|f|²` is formed pseudospectrally under the grid's dealiasing policy. The
/// unmatched mode `-n/2` has no real counterpart, so it is dropped from the
/// primitive; every other mode is divided by `ik`.
pub fn phase_primitive(f: &Field) -> Field {
    let intensity = f.mul(&f.conj()).expect("same grid");
    let nyquist = -(f.grid().max_mode() as i64);
    let primitive = intensity.inv_derivative();
    Field::from_modes(f.grid(), |k| if k == nyquist { Complex64::new(0.0, 0.0) } else { primitive.coeff(k) })
}

fn rotate_by_phase(f: &Field, phase: &Field, sign: f64) -> Field {
    let theta = phase.to_physical();
    let samples: Vec<Complex64> =
        f.to_physical().into_iter().zip(theta).map(|(s, th)| s * Complex64::from_polar(1.0, sign * th.re)).collect();
    Field::from_samples(f.grid(), &samples).expect("sample count matches grid")
}

/// `𝒢₀(f)(x) = e^{-iℐ(f)(x)} f(x)`, evaluated pointwise.
pub fn gauge_forward(f: &Field) -> Field {
    rotate_by_phase(f, &phase_primitive(f), -1.0)
}

/// `κ_c f` at time `t`: `f(x) ↦ f(x + 2ct)`.
pub fn translate(f: &Field, c: f64, t: f64) -> Field {
    f.apply_symbol(&MultiplierSymbol::translation(c, t))
}

/// `𝒢(f)(t) = κ_{-μ} 𝒢₀(f)`.
pub fn gauge_at_time(f: &Field, ctx: GaugeContext) -> Field {
    translate(&gauge_forward(f), -ctx.mu, ctx.t)
}

/// `𝒢⁻¹(v)(t) = e^{iℐ(w)} w` with `w = κ_μ v`.
pub fn gauge_inverse(v: &Field, ctx: GaugeContext) -> Field {
    let w = translate(v, ctx.mu, ctx.t);
    rotate_by_phase(&w, &phase_primitive(&w), 1.0)
}
