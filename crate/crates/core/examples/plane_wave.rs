//! Both methods against the exact plane wave `a e^{i(kx + (k|a|² - k²)t)}`.
//!
//! ```text
//! cargo run --release --example plane_wave
//! ```

use dnls::experiments::{dyadic_ladder, fit_slope};
use dnls::integrators::{plane_wave, solve_dnls_final, Method, RunOptions};
use dnls::SpectralGrid;
use num_complex::Complex64;

fn main() -> dnls::Result<()> {
    let grid = SpectralGrid::new(64)?;
    let (a, k, t_end) = (Complex64::new(0.5, 0.0), 1, 1.0);
    let exact = plane_wave(&grid, a, k, t_end);

    for method in [Method::Basic, Method::Symmetric] {
        println!("{method}");
        let mut points = Vec::new();
        for tau in dyadic_ladder(4, 9) {
            let u = solve_dnls_final(&plane_wave(&grid, a, k, 0.0), &RunOptions::new(tau, t_end, method))?;
            let err = (&u - &exact).sobolev_norm(1.0);
            println!("  tau = {tau:<12} H1 error = {err:.3e}");
            points.push((tau, err));
        }
        println!("  observed order {:.3}", fit_slope(&points)?.slope);
    }
    Ok(())
}
