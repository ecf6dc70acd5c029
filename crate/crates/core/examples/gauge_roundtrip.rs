//! The gauge transform and its inverse on random data.

use dnls::gauge::{gauge_at_time, gauge_inverse, mean_intensity, GaugeContext};
use dnls::spectral::testing::random_field;
use dnls::SpectralGrid;

fn main() -> dnls::Result<()> {
    let grid = SpectralGrid::new(256)?;
    let f = random_field(&grid, 11, 1.5);
    let ctx = GaugeContext::for_initial(&f);
    println!("mu = {:.6}  (mean of |f|^2, {:.6})", ctx.mu, mean_intensity(&f));

    for t in [0.0, 0.37, 1.0] {
        let ctx = ctx.at(t);
        let v = gauge_at_time(&f, ctx);
        let back = gauge_inverse(&v, ctx);
        let rel = (&back - &f).sobolev_norm(1.0) / f.sobolev_norm(1.0);
        // the gauge is unitary on L2
        println!(
            "t = {t:<5} |v|_0 / |f|_0 = {:.15}  round-trip H1 error = {rel:.2e}",
            v.sobolev_norm(0.0) / f.sobolev_norm(0.0)
        );
    }
    Ok(())
}
