use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use super::grid::SpectralGrid;

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// `φ₁(z) = (eᶻ - 1) / z`, with `φ₁(0) = 1`.
///
/// Below `|z| < 1e-4` a four-term Taylor series is used. Elsewhere the
/// numerator is formed without cancellation as
/// `eˣ cos y - 1 = expm1(x) cos y - 2 sin²(y/2)`.
pub fn phi1(z: Complex64) -> Complex64 {
    if z.norm() < 1e-4 {
        return Complex64::new(1.0, 0.0) + z * (0.5 + z * (1.0 / 6.0 + z / 24.0));
    }
    let (x, y) = (z.re, z.im);
    let half = (0.5 * y).sin();
    let numerator = Complex64::new(x.exp_m1() * y.cos() - 2.0 * half * half, x.exp() * y.sin());
    numerator / z
}

/// `sin(x) / x`, with value 1 at the origin.
pub fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-4 {
        let x2 = x * x;
        1.0 - x2 / 6.0 * (1.0 - x2 / 20.0)
    } else {
        x.sin() / x
    }
}

/// A scalar function of the integer wavenumber, i.e. a diagonal operator in
/// Fourier space.
#[derive(Clone)]
pub struct MultiplierSymbol(Arc<dyn Fn(i64) -> Complex64 + Send + Sync>);

impl MultiplierSymbol {
    pub fn new(f: impl Fn(i64) -> Complex64 + Send + Sync + 'static) -> Self {
        MultiplierSymbol(Arc::new(f))
    }

    pub fn eval(&self, k: i64) -> Complex64 {
        (self.0)(k)
    }

    pub fn identity() -> Self {
        Self::new(|_| Complex64::new(1.0, 0.0))
    }

    /// Free Schrödinger flow `e^{it∂ₓ²}`, symbol `e^{-itk²}`.
    pub fn free_flow(t: f64) -> Self {
        Self::new(move |k| {
            let k = k as f64;
            Complex64::from_polar(1.0, -t * k * k)
        })
    }

    /// `∂ₓ`, symbol `ik`.
    pub fn derivative() -> Self {
        Self::new(|k| I * k as f64)
    }

    /// `∂ₓ⁻¹` on zero-mean functions, symbol `1/(ik)` and 0 at `k = 0`.
    pub fn inv_derivative() -> Self {
        Self::new(|k| if k == 0 { Complex64::new(0.0, 0.0) } else { -I / k as f64 })
    }

    /// `φ₁(a ∂ₓ²)` for complex `a`, symbol `φ₁(-a k²)`.
    pub fn phi1_of_laplacian(a: Complex64) -> Self {
        Self::new(move |k| {
            let k = k as f64;
            phi1(-a * k * k)
        })
    }

    /// `e^{2iτ∂ₓ²} φ₁(-4iτ∂ₓ²)` evaluated as the even symbol
    /// `sin(2τk²)/(2τk²)`.
    pub fn symmetric_phi(tau: f64) -> Self {
        Self::new(move |k| {
            let k = k as f64;
            Complex64::new(sinc(2.0 * tau * k * k), 0.0)
        })
    }

    /// Bessel potential `⟨∂ₓ⟩ˢ`, symbol `(1 + k²)^{s/2}`.
    pub fn bessel(s: f64) -> Self {
        Self::new(move |k| {
            let k = k as f64;
            Complex64::new((1.0 + k * k).powf(0.5 * s), 0.0)
        })
    }

    /// Translation `κ_c` at time `t`: `u(x) ↦ u(x + 2ct)`, symbol `e^{2ictk}`.
    pub fn translation(c: f64, t: f64) -> Self {
        Self::new(move |k| Complex64::from_polar(1.0, 2.0 * c * t * k as f64))
    }

    /// Samples the symbol on every wavenumber of `grid`.
    pub fn tabulate(&self, grid: &SpectralGrid) -> Multiplier {
        Multiplier { n_points: grid.n_points(), values: grid.wavenumbers().iter().map(|&k| self.eval(k)).collect() }
    }
}

impl fmt::Debug for MultiplierSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("MultiplierSymbol(..)")
    }
}

/// A [`MultiplierSymbol`] sampled on a grid, in transform order.
#[derive(Clone, Debug, PartialEq)]
pub struct Multiplier {
    n_points: usize,
    values: Vec<Complex64>,
}

impl Multiplier {
    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    /// Product of two diagonal operators.
    pub fn compose(&self, other: &Multiplier) -> Multiplier {
        assert_eq!(self.n_points, other.n_points, "multipliers tabulated on different grids");
        Multiplier {
            n_points: self.n_points,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect(),
        }
    }
}
