//! Seeded rough data, convergence and conservation studies, result files.

mod fit;
mod output;
mod rough_data;
mod study;

pub use fit::{fit_slope, SlopeFit};
pub use output::{
    csv_table, format_number, read_manifest, write_result, CONSERVATION_CSV, CONVERGENCE_CSV, FINAL_STATE_CSV, MANIFEST,
};
pub use rough_data::{gen_rough_data, mode_draw, weighted_draws};
pub use study::{
    dyadic_ladder, parse_tau, parse_tau_arg, run_conservation, run_convergence, run_single, run_study, LadderPoint,
    StudyConfig, StudyKind, StudyResult, DEFAULT_SEED,
};
