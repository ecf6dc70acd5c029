//! Field algebra on the one-dimensional torus.
//!
//! Derivatives and operator functions of `∂ₓ` are diagonal in Fourier space
//! ([`MultiplierSymbol`]); products are formed in physical space.

mod field;
mod grid;
mod symbol;

pub use field::Field;
pub use grid::{SpectralGrid, MAX_POINTS};
pub use symbol::{phi1, sinc, Multiplier, MultiplierSymbol};

/// Seeded random fields for tests and examples.
pub mod testing {
    use num_complex::Complex64;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::{Field, SpectralGrid};

    /// Coefficients uniform in `[-1,1] + i[-1,1]` damped by `⟨k⟩^{-decay}`.
    /// The unmatched mode `-n/2` is left at zero.
    pub fn random_field(grid: &SpectralGrid, seed: u64, decay: f64) -> Field {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let nyquist = -(grid.max_mode() as i64);
        Field::from_modes(grid, |k| {
            let re = rng.gen_range(-1.0..=1.0);
            let im = rng.gen_range(-1.0..=1.0);
            if k == nyquist {
                return Complex64::new(0.0, 0.0);
            }
            let w = (1.0 + (k * k) as f64).powf(-0.5 * decay);
            Complex64::new(re, im) * w
        })
    }

    /// Random field supported on `|k| <= band`.
    pub fn band_limited(grid: &SpectralGrid, seed: u64, band: i64) -> Field {
        let f = random_field(grid, seed, 0.0);
        Field::from_modes(grid, |k| if k.abs() <= band { f.coeff(k) } else { Complex64::new(0.0, 0.0) })
    }
}
