//! Driving a solver by hand: gauge, step the transformed variable, map back.

use dnls::gauge::{gauge_forward, gauge_inverse, GaugeContext};
use dnls::integrators::{Method, StarterOptions, Stepper};
use dnls::observables::{energy, mass};
use dnls::{Field, SpectralGrid};
use num_complex::Complex64;

fn main() -> dnls::Result<()> {
    let grid = SpectralGrid::new(128)?.with_dealiasing(true);
    let u0 = Field::from_fn(&grid, |x| Complex64::new(0.4 * x.cos(), 0.2 * (2.0 * x).sin()));
    let ctx = GaugeContext::for_initial(&u0);

    let mut stepper =
        Stepper::new(gauge_forward(&u0), 2f64.powi(-8), ctx.mu, Method::Symmetric, StarterOptions::default())?;
    println!("{:>6} {:>22} {:>22}", "t", "mass", "energy");
    for _ in 0..5 {
        for _ in 0..64 {
            stepper.advance()?;
        }
        let state = stepper.state();
        let u = gauge_inverse(&state.v_curr, ctx.at(state.t));
        println!("{:>6.3} {:>22.15} {:>22.15}", state.t, mass(&u), energy(&u));
    }
    Ok(())
}
