use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Least-squares line `log₂ error = slope · log₂ τ + intercept`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SlopeFit {
    pub slope: f64,
    pub intercept: f64,
}

impl SlopeFit {
    pub fn predict(&self, tau: f64) -> f64 {
        (self.slope * tau.log2() + self.intercept).exp2()
    }
}

/// Fits the observed order from `(τ, error)` pairs. Needs at least three
/// points, all positive.
pub fn fit_slope(points: &[(f64, f64)]) -> Result<SlopeFit> {
    if points.len() < 3 {
        return Err(Error::TooFewPoints(points.len()));
    }
    if points.iter().any(|&(t, e)| !(t > 0.0) || !(e > 0.0)) {
        return Err(Error::Parameter("slope fit needs positive step sizes and errors".into()));
    }
    let n = points.len() as f64;
    let xs: Vec<f64> = points.iter().map(|p| p.0.log2()).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.1.log2()).collect();
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    if sxx == 0.0 {
        return Err(Error::Parameter("slope fit needs distinct step sizes".into()));
    }
    let slope = sxy / sxx;
    Ok(SlopeFit { slope, intercept: my - slope * mx })
}
