use std::f64::consts::PI;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::grid::{wavenumber_at, SpectralGrid};
use super::symbol::{Multiplier, MultiplierSymbol};
use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };

/// A complex function on the torus held by its Fourier coefficients,
/// `f(x) = Σ_k f̂_k e^{ikx}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Field {
    grid: SpectralGrid,
    coeffs: Vec<Complex64>,
}

impl Field {
    pub fn zeros(grid: &SpectralGrid) -> Self {
        Field { grid: grid.clone(), coeffs: vec![ZERO; grid.n_points()] }
    }

    pub fn from_coeffs(grid: &SpectralGrid, coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() != grid.n_points() {
            return Err(Error::LengthMismatch { expected: grid.n_points(), found: coeffs.len() });
        }
        Ok(Field { grid: grid.clone(), coeffs })
    }

    /// `c e^{ikx}`. Panics if `k` is not resolved on `grid`.
    pub fn mode(grid: &SpectralGrid, k: i64, c: Complex64) -> Self {
        let mut f = Field::zeros(grid);
        let j = grid.index_of(k).expect("wavenumber outside the grid");
        f.coeffs[j] = c;
        f
    }

    /// Builds a field from a coefficient rule `k ↦ f̂_k`.
    pub fn from_modes(grid: &SpectralGrid, mut rule: impl FnMut(i64) -> Complex64) -> Self {
        let coeffs = grid.wavenumbers().iter().map(|&k| rule(k)).collect();
        Field { grid: grid.clone(), coeffs }
    }

    /// Interpolates `f` at the grid points.
    pub fn from_fn(grid: &SpectralGrid, f: impl Fn(f64) -> Complex64) -> Self {
        let samples: Vec<Complex64> = grid.points().map(f).collect();
        Field::from_samples(grid, &samples).expect("sample count matches grid")
    }

    /// Forward transform: `f̂_k = (1/n) Σ_j f(x_j) e^{-ikx_j}`.
    pub fn from_samples(grid: &SpectralGrid, samples: &[Complex64]) -> Result<Self> {
        let n = grid.n_points();
        if samples.len() != n {
            return Err(Error::LengthMismatch { expected: n, found: samples.len() });
        }
        let mut buf = samples.to_vec();
        grid.plans().forward.process(&mut buf);
        let scale = 1.0 / n as f64;
        buf.iter_mut().for_each(|c| *c *= scale);
        Ok(Field { grid: grid.clone(), coeffs: buf })
    }

    /// Inverse transform: `f(x_j) = Σ_k f̂_k e^{ikx_j}`.
    pub fn to_physical(&self) -> Vec<Complex64> {
        let mut buf = self.coeffs.clone();
        self.grid.plans().inverse.process(&mut buf);
        buf
    }

    pub fn grid(&self) -> &SpectralGrid {
        &self.grid
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Complex64> {
        self.coeffs
    }

    /// Coefficient of wavenumber `k`; zero if `k` is not resolved.
    pub fn coeff(&self, k: i64) -> Complex64 {
        self.grid.index_of(k).map_or(ZERO, |j| self.coeffs[j])
    }

    pub fn set_coeff(&mut self, k: i64, c: Complex64) {
        let j = self.grid.index_of(k).expect("wavenumber outside the grid");
        self.coeffs[j] = c;
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.re.is_finite() && c.im.is_finite())
    }

    pub fn apply(&self, m: &Multiplier) -> Field {
        assert_eq!(m.n_points(), self.grid.n_points(), "multiplier tabulated on another grid");
        let coeffs = self.coeffs.iter().zip(m.values()).map(|(c, s)| c * s).collect();
        Field { grid: self.grid.clone(), coeffs }
    }

    pub fn apply_symbol(&self, m: &MultiplierSymbol) -> Field {
        let coeffs = self.coeffs.iter().zip(self.grid.wavenumbers()).map(|(c, &k)| c * m.eval(k)).collect();
        Field { grid: self.grid.clone(), coeffs }
    }

    pub fn derivative(&self) -> Field {
        self.apply_symbol(&MultiplierSymbol::derivative())
    }

    /// Zero-mean antiderivative; `∂ₓ ∘ ∂ₓ⁻¹ = I - Π₀`.
    pub fn inv_derivative(&self) -> Field {
        self.apply_symbol(&MultiplierSymbol::inv_derivative())
    }

    /// Pointwise complex conjugate. In coefficient space this is the
    /// reflection `k ↦ -k` taken modulo the grid.
    pub fn conj(&self) -> Field {
        let n = self.coeffs.len();
        let coeffs = (0..n).map(|j| self.coeffs[(n - j) % n].conj()).collect();
        Field { grid: self.grid.clone(), coeffs }
    }

    /// Pointwise product using the grid's dealiasing policy.
    pub fn mul(&self, other: &Field) -> Result<Field> {
        self.product(other, self.grid.dealias())
    }

    /// Pointwise product formed in physical space. With `dealias` the
    /// factors are interpolated to a 2x grid first, so the product is the
    /// exact convolution of the symmetric bands `|k| < n/2`. The unmatched
    /// mode `-n/2` is ignored in both factors and dropped from the result,
    /// so that `f · conj(f)` stays real.
    pub fn product(&self, other: &Field, dealias: bool) -> Result<Field> {
        self.grid.check_same(&other.grid)?;
        let n = self.grid.n_points();
        if !dealias {
            let a = self.to_physical();
            let b = other.to_physical();
            let prod: Vec<Complex64> = a.iter().zip(&b).map(|(x, y)| x * y).collect();
            return Field::from_samples(&self.grid, &prod);
        }
        let m = 2 * n;
        let plans = self.grid.padded_plans(m);
        let mut a = self.padded_coeffs(m);
        let mut b = other.padded_coeffs(m);
        a[m - n / 2] = ZERO;
        b[m - n / 2] = ZERO;
        plans.inverse.process(&mut a);
        plans.inverse.process(&mut b);
        a.iter_mut().zip(&b).for_each(|(x, y)| *x *= y);
        plans.forward.process(&mut a);
        let scale = 1.0 / m as f64;
        let mut coeffs: Vec<Complex64> =
            (0..n).map(|j| a[wavenumber_at(j, n).rem_euclid(m as i64) as usize] * scale).collect();
        coeffs[n / 2] = ZERO;
        Ok(Field { grid: self.grid.clone(), coeffs })
    }

    /// Samples of the trigonometric interpolant on `m >= n` equispaced points.
    pub fn oversampled(&self, m: usize) -> Vec<Complex64> {
        assert!(m >= self.grid.n_points());
        let plans = self.grid.padded_plans(m);
        let mut buf = self.padded_coeffs(m);
        plans.inverse.process(&mut buf);
        buf
    }

    fn padded_coeffs(&self, m: usize) -> Vec<Complex64> {
        let n = self.grid.n_points();
        let mut buf = vec![ZERO; m];
        for (j, c) in self.coeffs.iter().enumerate() {
            buf[wavenumber_at(j, n).rem_euclid(m as i64) as usize] = *c;
        }
        buf
    }

    /// Applies `f(x, sample)` to every physical sample.
    pub fn map_physical(&self, f: impl Fn(f64, Complex64) -> Complex64) -> Field {
        let samples: Vec<Complex64> =
            self.to_physical().into_iter().zip(self.grid.points()).map(|(s, x)| f(x, s)).collect();
        Field::from_samples(&self.grid, &samples).expect("sample count matches grid")
    }

    /// `Π₀f`, the spatial mean.
    pub fn mean_mode(&self) -> Complex64 {
        self.coeffs[0]
    }

    /// Removes the mean, `(I - Π₀)f`.
    pub fn without_mean(mut self) -> Field {
        self.coeffs[0] = ZERO;
        self
    }

    /// `‖f‖_s = (2π Σ_k (1+k²)^s |f̂_k|²)^{1/2}`.
    pub fn sobolev_norm(&self, s: f64) -> f64 {
        let sum: f64 = self
            .coeffs
            .iter()
            .zip(self.grid.wavenumbers())
            .map(|(c, &k)| {
                let k = k as f64;
                (1.0 + k * k).powf(s) * c.norm_sqr()
            })
            .sum();
        (2.0 * PI * sum).sqrt()
    }

    /// `⟨f, g⟩ = 2π Σ_k f̂_k conj(ĝ_k)`.
    pub fn inner_product(&self, other: &Field) -> Result<Complex64> {
        self.grid.check_same(&other.grid)?;
        let sum: Complex64 = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a * b.conj()).sum();
        Ok(sum * 2.0 * PI)
    }

    pub fn scale(&self, c: Complex64) -> Field {
        Field { grid: self.grid.clone(), coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: Complex64, other: &Field) -> Field {
        self.assert_same(other);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + c * b).collect();
        Field { grid: self.grid.clone(), coeffs }
    }

    /// Largest coefficient-wise modulus of `self - other`.
    pub fn max_coeff_diff(&self, other: &Field) -> f64 {
        self.assert_same(other);
        self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    pub fn max_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    fn assert_same(&self, other: &Field) {
        assert!(
            self.grid.same_as(&other.grid),
            "fields live on different grids ({} vs {})",
            self.grid.n_points(),
            other.grid.n_points()
        );
    }
}

impl Add for &Field {
    type Output = Field;
    fn add(self, rhs: &Field) -> Field {
        self.axpy(Complex64::new(1.0, 0.0), rhs)
    }
}

impl Sub for &Field {
    type Output = Field;
    fn sub(self, rhs: &Field) -> Field {
        self.axpy(Complex64::new(-1.0, 0.0), rhs)
    }
}

impl Neg for &Field {
    type Output = Field;
    fn neg(self) -> Field {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

impl Mul<Complex64> for &Field {
    type Output = Field;
    fn mul(self, rhs: Complex64) -> Field {
        self.scale(rhs)
    }
}

impl Mul<f64> for &Field {
    type Output = Field;
    fn mul(self, rhs: f64) -> Field {
        self.scale(Complex64::new(rhs, 0.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::testing::random_field;

    const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn constant_and_pure_mode_transforms() {
        let g = SpectralGrid::new(16).unwrap();
        let f = Field::from_fn(&g, |_| c(1.5, -0.5));
        assert!((f.coeff(0) - c(1.5, -0.5)).norm() < 1e-15);
        assert!(f.coeffs()[1..].iter().all(|x| x.norm() < 1e-15));

        let e1 = Field::from_fn(&g, |x| (I * x).exp());
        for &k in g.wavenumbers() {
            let want = if k == 1 { 1.0 } else { 0.0 };
            assert!((e1.coeff(k) - want).norm() < 1e-15);
        }
    }

    #[test]
    fn round_trip() {
        let g = SpectralGrid::new(64).unwrap();
        let f = random_field(&g, 1, 0.0);
        let back = Field::from_samples(&g, &f.to_physical()).unwrap();
        let rel = (&back - &f).sobolev_norm(0.0) / f.sobolev_norm(0.0);
        assert!(rel <= 1e-13, "{rel}");
    }

    #[test]
    fn length_mismatch_is_rejected() {
        let g = SpectralGrid::new(8).unwrap();
        assert!(matches!(
            Field::from_samples(&g, &[c(0.0, 0.0); 6]),
            Err(Error::LengthMismatch { expected: 8, found: 6 })
        ));
        assert!(Field::from_coeffs(&g, vec![c(0.0, 0.0); 9]).is_err());
    }

    #[test]
    fn derivative_of_mode() {
        let g = SpectralGrid::new(16).unwrap();
        let f = Field::mode(&g, 2, c(1.0, 0.0));
        let df = f.derivative();
        assert!((df.coeff(2) - c(0.0, 2.0)).norm() < 1e-15);
        let same = f.apply_symbol(&MultiplierSymbol::free_flow(0.0));
        assert_eq!(same, f);
    }

    #[test]
    fn inverse_derivative_examples() {
        let g = SpectralGrid::new(16).unwrap();
        let f = Field::mode(&g, 1, c(1.0, 0.0)).inv_derivative();
        assert!((f.coeff(1) - c(0.0, -1.0)).norm() < 1e-15);
        let one = Field::mode(&g, 0, c(1.0, 0.0)).inv_derivative();
        assert_eq!(one.max_coeff(), 0.0);

        let r = random_field(&g, 4, 0.0);
        let projected = r.clone().without_mean();
        assert!(r.inv_derivative().derivative().max_coeff_diff(&projected) < 1e-13);
        assert!(r.derivative().inv_derivative().max_coeff_diff(&projected) < 1e-13);
    }

    #[test]
    fn product_examples() {
        let g = SpectralGrid::new(16).unwrap();
        let e1 = Field::mode(&g, 1, c(1.0, 0.0));
        let sq = e1.product(&e1, false).unwrap();
        assert!((sq.coeff(2) - c(1.0, 0.0)).norm() < 1e-14);

        let a = c(0.3, -1.2);
        let f = Field::mode(&g, 5, a);
        let modulus = f.mul(&f.conj()).unwrap();
        assert!((modulus.coeff(0) - a.norm_sqr()).norm() < 1e-14);
        assert!((&modulus - &Field::mode(&g, 0, c(a.norm_sqr(), 0.0))).max_coeff() < 1e-14);
    }

    #[test]
    fn aliasing_and_dealiasing() {
        // (e^{i7x})² on 16 points: mode 14 aliases onto -2 without padding,
        // and is dropped by truncation with padding.
        let g = SpectralGrid::new(16).unwrap();
        let f = Field::mode(&g, 7, c(1.0, 0.0));
        let aliased = f.product(&f, false).unwrap();
        assert!((aliased.coeff(-2) - 1.0).norm() < 1e-14);
        let clean = f.product(&f, true).unwrap();
        assert!(clean.max_coeff() < 1e-14);

        // Dealiased product equals the exact convolution computed on a grid
        // large enough to hold every product mode.
        let big = SpectralGrid::new(64).unwrap();
        let u = random_field(&g, 9, 0.0);
        let w = random_field(&g, 10, 0.0);
        let lift = |f: &Field| Field::from_modes(&big, |k| f.coeff(k));
        let exact = lift(&u).product(&lift(&w), false).unwrap();
        let padded = u.product(&w, true).unwrap();
        for k in -7..8 {
            assert!((padded.coeff(k) - exact.coeff(k)).norm() < 1e-14, "k={k}");
        }
        assert_eq!(padded.coeff(-8), ZERO);
        assert!(g.with_dealiasing(true).dealias());
    }

    #[test]
    fn grid_mismatch() {
        let a = Field::zeros(&SpectralGrid::new(8).unwrap());
        let b = Field::zeros(&SpectralGrid::new(16).unwrap());
        assert!(matches!(a.product(&b, false), Err(Error::GridMismatch { .. })));
        assert!(matches!(a.inner_product(&b), Err(Error::GridMismatch { .. })));
    }

    #[test]
    fn mean_mode_examples() {
        let g = SpectralGrid::new(16).unwrap();
        assert_eq!(Field::mode(&g, 0, c(2.0, 1.0)).mean_mode(), c(2.0, 1.0));
        assert_eq!(Field::mode(&g, 1, c(1.0, 0.0)).mean_mode(), c(0.0, 0.0));
        let (a, b) = (c(0.4, 0.3), c(-1.0, 0.2));
        let v = &Field::mode(&g, 3, a) + &Field::mode(&g, 0, b);
        let m = v.mul(&v.conj()).unwrap().mean_mode();
        assert!((m - (a.norm_sqr() + b.norm_sqr())).norm() < 1e-15);
    }

    #[test]
    fn sobolev_norm_examples() {
        let g = SpectralGrid::new(16).unwrap();
        assert_eq!(Field::zeros(&g).sobolev_norm(1.0), 0.0);
        let e1 = Field::mode(&g, 1, c(1.0, 0.0));
        assert!((e1.sobolev_norm(1.0) - 2.0 * PI.sqrt()).abs() < 1e-15);

        let r = random_field(&g, 3, 0.0);
        let l2: f64 = r.coeffs().iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        assert!((r.sobolev_norm(0.0) - (2.0 * PI).sqrt() * l2).abs() < 1e-13 * l2);
        // physical-space Parseval
        let samples = r.to_physical();
        let mean_sq = samples.iter().map(|x| x.norm_sqr()).sum::<f64>() / 16.0;
        assert!((r.sobolev_norm(0.0).powi(2) - 2.0 * PI * mean_sq).abs() < 1e-12 * mean_sq);
    }

    #[test]
    fn inner_product_examples() {
        let g = SpectralGrid::new(16).unwrap();
        let f = random_field(&g, 5, 0.0);
        let h = random_field(&g, 6, 0.0);
        let ff = f.inner_product(&f).unwrap();
        assert!((ff.re - f.sobolev_norm(0.0).powi(2)).abs() < 1e-13);
        assert!(ff.im.abs() < 1e-15);
        let e1 = Field::mode(&g, 1, c(1.0, 0.0));
        let e2 = Field::mode(&g, 2, c(1.0, 0.0));
        assert_eq!(e1.inner_product(&e2).unwrap(), c(0.0, 0.0));
        let fh = f.inner_product(&h).unwrap();
        let hf = h.inner_product(&f).unwrap();
        assert!((fh - hf.conj()).norm() < 1e-13);
    }

    #[test]
    fn conj_matches_physical() {
        let g = SpectralGrid::new(16).unwrap();
        let f = random_field(&g, 8, 0.0);
        let phys: Vec<Complex64> = f.to_physical().iter().map(|x| x.conj()).collect();
        let want = Field::from_samples(&g, &phys).unwrap();
        assert!(f.conj().max_coeff_diff(&want) < 1e-15);
    }
}
