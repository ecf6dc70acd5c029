//! Brute-force reference sums shared by the integration and acceptance tests.
//!
//! Coefficient arrays are in transform order. A cyclic sum adds indices mod
//! n, which is exactly what an aliased pseudospectral product computes; a
//! truncated sum drops every output wavenumber outside the grid, which is
//! what a dealiased product computes.

#![allow(dead_code, clippy::needless_range_loop)]

use dnls::spectral::testing::random_field;
use dnls::{Field, SpectralGrid};
use num_complex::Complex64;

pub type C = Complex64;

pub const I: C = C { re: 0.0, im: 1.0 };

pub fn wavenumber(j: usize, n: usize) -> i64 {
    if j < n / 2 {
        j as i64
    } else {
        j as i64 - n as i64
    }
}

fn index(k: i64, n: usize) -> usize {
    k.rem_euclid(n as i64) as usize
}

/// Coefficients of `conj(f)`: `c_k ↦ conj(c_{-k})`, indices mod n.
pub fn conj(a: &[C]) -> Vec<C> {
    let n = a.len();
    (0..n).map(|j| a[(n - j) % n].conj()).collect()
}

/// `∂ₓ` with the literal symbol `ik`, including the unmatched mode.
pub fn deriv(a: &[C]) -> Vec<C> {
    let n = a.len();
    (0..n).map(|j| I * wavenumber(j, n) as f64 * a[j]).collect()
}

pub fn cyclic(a: &[C], b: &[C]) -> Vec<C> {
    let n = a.len();
    let mut out = vec![C::new(0.0, 0.0); n];
    for p in 0..n {
        for q in 0..n {
            out[(p + q) % n] += a[p] * b[q];
        }
    }
    out
}

pub fn truncated(a: &[C], b: &[C]) -> Vec<C> {
    let n = a.len();
    let half = n as i64 / 2;
    let mut out = vec![C::new(0.0, 0.0); n];
    for p in 0..n {
        for q in 0..n {
            let (kp, kq) = (wavenumber(p, n), wavenumber(q, n));
            let k = kp + kq;
            if kp.abs() < half && kq.abs() < half && k.abs() < half {
                out[index(k, n)] += a[p] * b[q];
            }
        }
    }
    out
}

/// `Σ_{p+q+r ≡ k} a_p b_q c_r` as an explicit triple loop.
pub fn triad(a: &[C], b: &[C], c: &[C]) -> Vec<C> {
    let n = a.len();
    let mut out = vec![C::new(0.0, 0.0); n];
    for p in 0..n {
        for q in 0..n {
            let ab = a[p] * b[q];
            for r in 0..n {
                out[(p + q + r) % n] += ab * c[r];
            }
        }
    }
    out
}

/// `Σ_{p+q+r+s+t ≡ k} a_p b_q c_r d_s e_t`.
pub fn quintic(a: &[C], b: &[C], c: &[C], d: &[C], e: &[C]) -> Vec<C> {
    let n = a.len();
    let mut out = vec![C::new(0.0, 0.0); n];
    for p in 0..n {
        for q in 0..n {
            let ab = a[p] * b[q];
            for r in 0..n {
                let abc = ab * c[r];
                for s in 0..n {
                    let abcd = abc * d[s];
                    for t in 0..n {
                        out[(p + q + r + s + t) % n] += abcd * e[t];
                    }
                }
            }
        }
    }
    out
}

/// Aliased `F₁..F₄` and `ψ` from explicit wavenumber sums.
pub struct TriadTerms {
    pub f: [Vec<C>; 4],
    pub psi: f64,
    pub mean_cubic_derivative: C,
}

pub fn triad_terms(v: &[C], mu: f64) -> TriadTerms {
    let n = v.len();
    let vb = conj(v);
    let vbx = deriv(&vb);
    let f1: Vec<C> = triad(v, v, &vbx).iter().map(|c| -c).collect();
    let quint = quintic(v, &vb, v, &vb, v);
    let f2: Vec<C> = quint.iter().map(|c| 0.5 * I * c).collect();
    let cubic = triad(v, &vb, v);
    let f3: Vec<C> = cubic.iter().map(|c| -I * mu * c).collect();

    // zero modes: Σ_{p+q ≡ 0} (v̄ₓ)_p v_q and Σ_{p+q+r+s ≡ 0} v vb v vb
    let mut twist = C::new(0.0, 0.0);
    for p in 0..n {
        twist += vbx[p] * v[(n - p) % n];
    }
    let mut quartic = C::new(0.0, 0.0);
    for p in 0..n {
        for q in 0..n {
            for r in 0..n {
                quartic += v[p] * vb[q] * v[r] * vb[(3 * n - p - q - r) % n];
            }
        }
    }
    let psi = 2.0 * twist.im - 0.5 * quartic.re + mu * mu;
    let f4: Vec<C> = v.iter().map(|c| I * psi * c).collect();
    let mean_cubic_derivative = -f1[0];
    TriadTerms { f: [f1, f2, f3, f4], psi, mean_cubic_derivative }
}

/// Dealiased `F₁..F₃` with the same binary product order as the solver.
pub fn truncated_terms(v: &[C], mu: f64) -> [Vec<C>; 3] {
    let vb = conj(v);
    let f1: Vec<C> = truncated(&truncated(v, v), &deriv(&vb)).iter().map(|c| -c).collect();
    let intensity = truncated(v, &vb);
    let cubic = truncated(&intensity, v);
    let f2: Vec<C> = truncated(&intensity, &cubic).iter().map(|c| 0.5 * I * c).collect();
    let f3: Vec<C> = cubic.iter().map(|c| -I * mu * c).collect();
    [f1, f2, f3]
}

pub fn max_diff(a: &[C], b: &[C]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// Random field whose coefficients are bounded by `√2 ⟨k⟩^{-decay}`.
pub fn field(grid: &SpectralGrid, seed: u64, decay: f64) -> Field {
    random_field(grid, seed, decay)
}

/// Least-squares slope of `log₂ y` against `log₂ x`.
pub fn slope(points: &[(f64, f64)]) -> f64 {
    dnls::experiments::fit_slope(points).expect("fit").slope
}
