//! Global error study on rough data, written to `target/convergence-study`.
//!
//! ```text
//! cargo run --release --example convergence_study -- [s] [basic|symmetric]
//! ```

use dnls::experiments::{run_convergence, write_result, StudyConfig};
use dnls::integrators::Method;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let s: f64 = args.next().map(|a| a.parse()).transpose()?.unwrap_or(0.5);
    let method: Method = args.next().map(|a| a.parse()).transpose()?.unwrap_or(Method::Basic);

    let cfg = StudyConfig::convergence(s, method);
    let result = run_convergence(&cfg)?;
    for p in &result.ladder {
        match (p.hs_error, &p.failure) {
            (Some(e), _) => println!("tau = {:<12} error = {e:.4e}  ({:.2}s)", p.tau, p.runtime_s),
            (None, Some(why)) => println!("tau = {:<12} failed: {why}", p.tau),
            _ => {}
        }
    }
    if let Some(fit) = result.fit {
        println!("fitted order {:.3}", fit.slope);
    }
    for path in write_result(&result, "target/convergence-study")? {
        println!("wrote {}", path.display());
    }
    Ok(())
}
