use num_complex::Complex64;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::spectral::{Field, SpectralGrid};

/// The pair of uniform draws on `[-1, 1)²` attached to wavenumber `k`.
///
/// A ChaCha8 generator is keyed by `seed` (via `seed_from_u64`) and put on
/// stream `2k` for `k >= 0` or `-2k - 1` for `k < 0`. Its first two 64-bit
/// outputs `w` become `2 (w >> 11) 2⁻⁵³ - 1`, real part first. The draw for
/// a given `(seed, k)` is therefore the same on every grid that resolves `k`
/// and on every platform.
pub fn mode_draw(seed: u64, k: i64) -> Complex64 {
    let stream = if k >= 0 { 2 * k as u64 } else { (-2 * k - 1) as u64 };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let mut uniform = || 2.0 * ((rng.next_u64() >> 11) as f64 * f64::EPSILON / 2.0) - 1.0;
    let re = uniform();
    let im = uniform();
    Complex64::new(re, im)
}

/// Coefficients `⟨k⟩^{-decay} ĝ_k` before normalisation; the unmatched mode
/// `-n/2` stays zero.
pub fn weighted_draws(grid: &SpectralGrid, seed: u64, decay: f64) -> Field {
    let nyquist = -(grid.max_mode() as i64);
    Field::from_modes(grid, |k| {
        if k == nyquist {
            Complex64::new(0.0, 0.0)
        } else {
            let bracket = (1.0 + (k * k) as f64).sqrt();
            mode_draw(seed, k) * bracket.powf(-decay)
        }
    })
}

/// Random initial data `u₀ = Σ_k ⟨k⟩^{-(s+1.5+ε)} ĝ_k e^{ikx}` scaled so that
/// `‖u₀‖_{s+1} = target_norm`.
pub fn gen_rough_data(s: f64, epsilon: f64, grid: &SpectralGrid, seed: u64, target_norm: f64) -> Result<Field> {
    if !(s >= 0.0) || !s.is_finite() {
        return Err(Error::Parameter(format!("s must be a non-negative number, got {s}")));
    }
    if !(epsilon >= 0.0) || !epsilon.is_finite() {
        return Err(Error::Parameter(format!("epsilon must be non-negative, got {epsilon}")));
    }
    if !(target_norm > 0.0) || !target_norm.is_finite() {
        return Err(Error::Parameter(format!("target norm must be positive, got {target_norm}")));
    }
    let raw = weighted_draws(grid, seed, s + 1.5 + epsilon);
    let norm = raw.sobolev_norm(s + 1.0);
    Ok(&raw * (target_norm / norm))
}
