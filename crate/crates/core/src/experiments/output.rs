//! On-disk layout of a [`StudyResult`].
//!
//! A result directory holds `manifest.json` (the whole result, configuration
//! included) plus CSV tables and two-column `.dat` files for plotting:
//!
//! | file                | columns                                             |
//! |---------------------|-----------------------------------------------------|
//! | `convergence.csv`   | `tau,hs_error`                                      |
//! | `conservation.csv`  | `t,mass,energy,rel_mass_err,rel_energy_err`         |
//! | `final_state.csv`   | `x,re,im`                                           |
//! | `error_vs_tau.dat`  | `tau hs_error`                                      |
//! | `mass_error.dat`    | `t rel_mass_err`                                    |
//! | `energy_error.dat`  | `t rel_energy_err`                                  |
//!
//! Numbers are written as `{:.16e}` (17 significant digits, `.` separator),
//! lines end in `\n`. Failed ladder points appear as `NaN`.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use num_complex::Complex64;

use super::study::StudyResult;
use crate::error::{Error, Result};
use crate::spectral::{Field, SpectralGrid};

pub const MANIFEST: &str = "manifest.json";
pub const CONVERGENCE_CSV: &str = "convergence.csv";
pub const CONSERVATION_CSV: &str = "conservation.csv";
pub const FINAL_STATE_CSV: &str = "final_state.csv";

/// Formats one value with 17 significant digits.
pub fn format_number(x: f64) -> String {
    format!("{x:.16e}")
}

/// A table with a header row and numeric rows.
pub fn csv_table(header: &[&str], rows: impl IntoIterator<Item = Vec<f64>>, sep: &str) -> String {
    let mut out = header.join(sep);
    out.push('\n');
    for row in rows {
        let cells: Vec<String> = row.into_iter().map(format_number).collect();
        let _ = writeln!(out, "{}", cells.join(sep));
    }
    out
}

fn write_file(path: PathBuf, contents: &str) -> Result<PathBuf> {
    fs::write(&path, contents).map_err(|e| Error::io(&path, e))?;
    Ok(path)
}

/// Writes the manifest and every table that applies to `r` into `dir`,
/// creating it if needed. Returns the written paths.
pub fn write_result(r: &StudyResult, dir: impl AsRef<Path>) -> Result<Vec<PathBuf>> {
    let dir = dir.as_ref();
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let mut written = Vec::new();

    let manifest = dir.join(MANIFEST);
    let json = serde_json::to_string_pretty(r).map_err(|e| Error::Json { path: manifest.clone(), source: e })?;
    written.push(write_file(manifest, &(json + "\n"))?);

    if let Some(series) = &r.observables {
        let rows = (0..series.len()).map(|i| {
            vec![series.times[i], series.mass[i], series.energy[i], series.rel_mass_err[i], series.rel_energy_err[i]]
        });
        let header = ["t", "mass", "energy", "rel_mass_err", "rel_energy_err"];
        written.push(write_file(dir.join(CONSERVATION_CSV), &csv_table(&header, rows, ","))?);
        let pairs = |ys: &[f64]| series.times.iter().zip(ys).map(|(&t, &y)| vec![t, y]).collect::<Vec<_>>();
        written.push(write_file(
            dir.join("mass_error.dat"),
            &csv_table(&["# t", "rel_mass_err"], pairs(&series.rel_mass_err), " "),
        )?);
        written.push(write_file(
            dir.join("energy_error.dat"),
            &csv_table(&["# t", "rel_energy_err"], pairs(&series.rel_energy_err), " "),
        )?);
    } else {
        let rows: Vec<Vec<f64>> = r.ladder.iter().map(|p| vec![p.tau, p.hs_error.unwrap_or(f64::NAN)]).collect();
        written.push(write_file(dir.join(CONVERGENCE_CSV), &csv_table(&["tau", "hs_error"], rows.clone(), ","))?);
        written.push(write_file(dir.join("error_vs_tau.dat"), &csv_table(&["# tau", "hs_error"], rows, " "))?);
    }

    if let Some(coeffs) = &r.final_state {
        let grid = SpectralGrid::new(coeffs.len())?;
        let u = Field::from_coeffs(&grid, coeffs.clone())?;
        let rows = grid.points().zip(u.to_physical()).map(|(x, z): (f64, Complex64)| vec![x, z.re, z.im]);
        written.push(write_file(dir.join(FINAL_STATE_CSV), &csv_table(&["x", "re", "im"], rows, ","))?);
    }
    Ok(written)
}

/// Reads a manifest written by [`write_result`].
pub fn read_manifest(path: impl AsRef<Path>) -> Result<StudyResult> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    serde_json::from_str(&text).map_err(|e| Error::Json { path: path.to_path_buf(), source: e })
}
