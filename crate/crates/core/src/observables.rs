//! Mass, energy and distance diagnostics for `u`-trajectories.
//!
//! ```text
//! M(u) = ∫ |u|²
//! E(u) = ∫ |uₓ|² + (3/2) Im(|u|²u ūₓ) + (1/2)|u|⁶
//! ```

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::integrators::Trajectory;
use crate::spectral::Field;

/// Denominator guard for relative errors.
pub const RELATIVE_FLOOR: f64 = 1e-30;

/// `M(u) = 2π Σ_k |û_k|²`.
pub fn mass(u: &Field) -> f64 {
    2.0 * PI * u.coeffs().iter().map(|c| c.norm_sqr()).sum::<f64>()
}

/// Quadrature of the energy integrand on the base grid.
pub fn energy(u: &Field) -> f64 {
    energy_with(u, false)
}

/// Energy by the periodic rectangle rule; with `padded` the samples are
/// taken on a 3x grid, which integrates the sextic term without aliasing.
pub fn energy_with(u: &Field, padded: bool) -> f64 {
    let ux = u.derivative();
    let (samples, dsamples) = if padded {
        let m = 3 * u.grid().n_points();
        (u.oversampled(m), ux.oversampled(m))
    } else {
        (u.to_physical(), ux.to_physical())
    };
    let count = samples.len() as f64;
    let sum: f64 = samples
        .iter()
        .zip(&dsamples)
        .map(|(v, dv)| {
            let intensity = v.norm_sqr();
            dv.norm_sqr() + 1.5 * (intensity * v * dv.conj()).im + 0.5 * intensity.powi(3)
        })
        .sum();
    2.0 * PI * sum / count
}

/// `‖f - g‖_s`.
pub fn hs_distance(f: &Field, g: &Field, s: f64) -> Result<f64> {
    if !f.grid().same_as(g.grid()) {
        return Err(Error::GridMismatch { left: f.grid().n_points(), right: g.grid().n_points() });
    }
    Ok((f - g).sobolev_norm(s))
}

/// `|q - q₀| / max(|q₀|, 1e-30)`.
pub fn relative_error(q: f64, q0: f64) -> f64 {
    (q - q0).abs() / q0.abs().max(RELATIVE_FLOOR)
}

/// Mass and energy along a trajectory, with errors relative to `t = 0`.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ObservableSeries {
    pub times: Vec<f64>,
    pub mass: Vec<f64>,
    pub energy: Vec<f64>,
    pub rel_mass_err: Vec<f64>,
    pub rel_energy_err: Vec<f64>,
}

impl ObservableSeries {
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends the observables of `u` at time `t`. The first sample fixes
    /// the reference values.
    pub fn record(&mut self, t: f64, u: &Field, padded_energy: bool) {
        let m = mass(u);
        let e = energy_with(u, padded_energy);
        let (m0, e0) = match (self.mass.first(), self.energy.first()) {
            (Some(&m0), Some(&e0)) => (m0, e0),
            _ => (m, e),
        };
        self.times.push(t);
        self.mass.push(m);
        self.energy.push(e);
        self.rel_mass_err.push(relative_error(m, m0));
        self.rel_energy_err.push(relative_error(e, e0));
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn max_rel_mass_err(&self) -> f64 {
        self.rel_mass_err.iter().copied().fold(0.0, f64::max)
    }

    pub fn max_rel_energy_err(&self) -> f64 {
        self.rel_energy_err.iter().copied().fold(0.0, f64::max)
    }
}

/// Observables of every state of a `u`-trajectory.
pub fn conservation_series(traj: &Trajectory) -> Result<ObservableSeries> {
    if traj.is_empty() {
        return Err(Error::Parameter("empty trajectory".into()));
    }
    let mut series = ObservableSeries::new();
    for (&t, u) in traj.times.iter().zip(&traj.states) {
        series.record(t, u, false);
    }
    Ok(series)
}
