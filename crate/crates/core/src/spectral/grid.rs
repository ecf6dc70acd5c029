use std::collections::HashMap;
use std::f64::consts::PI;
use std::fmt;
use std::sync::{Arc, Mutex};

use rustfft::{Fft, FftPlanner};

use crate::error::{Error, Result};

/// Largest accepted number of physical samples.
pub const MAX_POINTS: usize = 1 << 20;

/// Forward/inverse plan pair for one transform length.
#[derive(Clone)]
pub(crate) struct Plans {
    pub forward: Arc<dyn Fft<f64>>,
    pub inverse: Arc<dyn Fft<f64>>,
}

impl Plans {
    fn new(len: usize) -> Self {
        let mut planner = FftPlanner::new();
        Plans { forward: planner.plan_fft_forward(len), inverse: planner.plan_fft_inverse(len) }
    }
}

struct Inner {
    n_points: usize,
    wavenumbers: Vec<i64>,
    plans: Plans,
    // Oversampled plans for dealiased products and padded quadrature.
    padded: Mutex<HashMap<usize, Plans>>,
}

/// Equispaced discretisation of the torus `[0, 2π)` with `n_points` samples.
///
/// Coefficients are stored in transform order: index `j < n/2` holds
/// wavenumber `j`, index `j >= n/2` holds `j - n`. The resolved wavenumbers
/// are therefore `-n/2, ..., n/2 - 1`; the unmatched mode `-n/2` is kept and
/// treated literally by every multiplier. The largest Fourier mode is
/// `K = n_points / 2`.
///
/// Cloning is cheap: the transform plans are shared. Whether pseudospectral
/// products are dealiased is a per-handle policy set via
/// [`SpectralGrid::with_dealiasing`]; two handles with the same number of
/// points describe the same grid regardless of policy.
#[derive(Clone)]
pub struct SpectralGrid {
    inner: Arc<Inner>,
    dealias: bool,
}

impl SpectralGrid {
    pub fn new(n_points: usize) -> Result<Self> {
        if !n_points.is_multiple_of(2) {
            return Err(Error::GridSize { n_points, reason: "must be even" });
        }
        if n_points < 4 {
            return Err(Error::GridSize { n_points, reason: "must be at least 4" });
        }
        if n_points > MAX_POINTS {
            return Err(Error::GridSize { n_points, reason: "exceeds 2^20" });
        }
        let wavenumbers = (0..n_points).map(|j| wavenumber_at(j, n_points)).collect();
        Ok(SpectralGrid {
            inner: Arc::new(Inner {
                n_points,
                wavenumbers,
                plans: Plans::new(n_points),
                padded: Mutex::new(HashMap::new()),
            }),
            dealias: false,
        })
    }

    /// Same grid with products formed on a 2x zero-padded grid.
    pub fn with_dealiasing(&self, dealias: bool) -> Self {
        SpectralGrid { inner: Arc::clone(&self.inner), dealias }
    }

    pub fn dealias(&self) -> bool {
        self.dealias
    }

    pub fn n_points(&self) -> usize {
        self.inner.n_points
    }

    /// Largest Fourier mode `K = n_points / 2`.
    pub fn max_mode(&self) -> usize {
        self.inner.n_points / 2
    }

    pub fn wavenumbers(&self) -> &[i64] {
        &self.inner.wavenumbers
    }

    pub fn spacing(&self) -> f64 {
        2.0 * PI / self.inner.n_points as f64
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        let h = self.spacing();
        (0..self.inner.n_points).map(move |j| j as f64 * h)
    }

    /// Storage index of wavenumber `k`, if resolved.
    pub fn index_of(&self, k: i64) -> Option<usize> {
        let n = self.inner.n_points as i64;
        if k < -n / 2 || k >= n / 2 {
            None
        } else {
            Some(k.rem_euclid(n) as usize)
        }
    }

    pub fn same_as(&self, other: &SpectralGrid) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.n_points() == other.n_points()
    }

    pub(crate) fn check_same(&self, other: &SpectralGrid) -> Result<()> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(Error::GridMismatch { left: self.n_points(), right: other.n_points() })
        }
    }

    pub(crate) fn plans(&self) -> &Plans {
        &self.inner.plans
    }

    pub(crate) fn padded_plans(&self, len: usize) -> Plans {
        let mut cache = self.inner.padded.lock().expect("plan cache poisoned");
        cache.entry(len).or_insert_with(|| Plans::new(len)).clone()
    }
}

impl fmt::Debug for SpectralGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SpectralGrid").field("n_points", &self.inner.n_points).field("dealias", &self.dealias).finish()
    }
}

impl PartialEq for SpectralGrid {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

/// Wavenumber stored at transform index `j` on a grid of `n` points.
pub(crate) fn wavenumber_at(j: usize, n: usize) -> i64 {
    if j < n / 2 {
        j as i64
    } else {
        j as i64 - n as i64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_grid() {
        let g = SpectralGrid::new(4).unwrap();
        let mut k = g.wavenumbers().to_vec();
        k.sort();
        assert_eq!(k, vec![-2, -1, 0, 1]);
    }

    #[test]
    fn fine_grid_spacing() {
        let g = SpectralGrid::new(2048).unwrap();
        assert!((g.spacing() - 2.0 * PI / 2048.0).abs() < 1e-16);
        assert!((g.spacing() - 0.00307).abs() < 1e-5);
        // 1024 samples, i.e. 2^10 wavenumbers, give mesh size 0.0061
        let g = SpectralGrid::new(1024).unwrap();
        assert!((g.spacing() - 0.0061).abs() < 1e-4);
        assert_eq!(g.max_mode(), 512);
    }

    #[test]
    fn rejects_bad_sizes() {
        assert!(matches!(SpectralGrid::new(5), Err(Error::GridSize { .. })));
        assert!(matches!(SpectralGrid::new(2), Err(Error::GridSize { .. })));
        assert!(matches!(SpectralGrid::new(0), Err(Error::GridSize { .. })));
        assert!(matches!(SpectralGrid::new(MAX_POINTS * 2), Err(Error::GridSize { .. })));
        assert!(SpectralGrid::new(MAX_POINTS).is_ok());
    }

    #[test]
    fn wavenumbers_cover_range_once() {
        for n in [4, 6, 16, 30] {
            let g = SpectralGrid::new(n).unwrap();
            let mut k = g.wavenumbers().to_vec();
            k.sort();
            let expected: Vec<i64> = (-(n as i64) / 2..(n as i64) / 2).collect();
            assert_eq!(k, expected);
            for (j, &kk) in g.wavenumbers().iter().enumerate() {
                assert_eq!(g.index_of(kk), Some(j));
            }
            assert_eq!(g.index_of(n as i64 / 2), None);
        }
    }
}
