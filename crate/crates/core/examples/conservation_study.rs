//! Mass and energy drift of both methods on H² data.
//!
//! The default horizon is T = 10; pass a different one as the first argument
//! (the desk-scale study uses 100).

use dnls::experiments::{run_conservation, write_result, StudyConfig};
use dnls::integrators::Method;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t_end: f64 = std::env::args().nth(1).map(|a| a.parse()).transpose()?.unwrap_or(10.0);
    for method in [Method::Basic, Method::Symmetric] {
        let cfg = StudyConfig { t_end, ..StudyConfig::conservation(method) };
        let result = run_conservation(&cfg)?;
        let series = result.observables.as_ref().expect("conservation runs record observables");
        println!(
            "{method:<10} max rel mass error {:.3e}  max rel energy error {:.3e}",
            series.max_rel_mass_err(),
            series.max_rel_energy_err()
        );
        write_result(&result, format!("target/conservation-study/{method}"))?;
    }
    Ok(())
}
