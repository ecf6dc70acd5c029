//! Low-regularity exponential integrators for the periodic derivative
//! nonlinear Schrödinger equation
//!
//! ```text
//! ∂ₜu - i∂ₓ²u = ∂ₓ(|u|²u),   x ∈ 𝕋 = ℝ/2πℤ.
//! ```
//!
//! The solver works on the gauge-transformed unknown `v = 𝒢(u)`, which moves
//! the derivative off the full nonlinearity, advances `v` with either the
//! first-order one-step scheme ([`integrators::step_basic`]) or its symmetric
//! two-step companion ([`integrators::step_symmetric`]), and maps back with
//! `𝒢⁻¹`. All spatial operations are Fourier pseudospectral.
//!
//! Module map:
//! - [`spectral`]: grids, fields, diagonal multipliers, Sobolev norms.
//! - [`gauge`]: the phase primitive, `𝒢₀`, `𝒢`, `𝒢⁻¹`.
//! - [`nonlinearity`]: the transformed right-hand side and the resonance
//!   kernels `g₀`, `g₁`, `g₂`.
//! - [`integrators`]: time steppers, the fixed-point starter, an RK4
//!   reference integrator and the end-to-end [`integrators::solve_dnls`].
//! - [`observables`]: mass, energy and conservation diagnostics.
//! - [`experiments`]: seeded rough data, convergence and conservation
//!   studies, result files.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod experiments;
pub mod gauge;
pub mod integrators;
pub mod nonlinearity;
pub mod observables;
pub mod spectral;

pub use error::{Error, Result};
pub use spectral::{Field, SpectralGrid};
