//! Least-squares extraction of an effective Maxwell-Boltzmann temperature
//! from a gridded density — the instrumentation behind the relaxation-rate
//! measurements.

use super::grid::DistributionGrid;
use crate::{Error, Result};

/// A fitted effective temperature and the quality of the fit.
#[derive(Debug, Clone, Copy)]
pub struct TemperatureFit {
    pub theta: f64,
    /// Mass-weighted RMS residual of ln g against the fitted line; a pure
    /// Maxwell-Boltzmann density fits to ~1e-10.
    pub residual: f64,
}

/// Fit ln(ρ/μ²) = a - μ²/(2θ) by mass-weighted linear least squares.
///
/// Fails on densities that do not look Maxwellian at all (non-negative
/// slope) or have too little support.
pub fn fit_effective_temperature(grid: &DistributionGrid) -> Result<TemperatureFit> {
    let peak = grid
        .density
        .iter()
        .cloned()
        .fold(0.0f64, f64::max);
    if !(peak > 0.0) {
        return Err(Error::Fit("empty density".into()));
    }

    let mut sw = 0.0;
    let mut sx = 0.0;
    let mut sy = 0.0;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    let mut points = 0usize;
    for (i, &rho) in grid.density.iter().enumerate() {
        if rho < 1e-12 * peak {
            continue;
        }
        let mu = grid.centers()[i];
        let w = rho * grid.cell_width(i);
        let x = mu * mu;
        let y = (rho / (mu * mu)).ln();
        sw += w;
        sx += w * x;
        sy += w * y;
        sxx += w * x * x;
        sxy += w * x * y;
        points += 1;
    }
    if points < 4 {
        return Err(Error::Fit(format!("only {points} usable cells")));
    }
    let det = sw * sxx - sx * sx;
    if det.abs() < 1e-300 {
        return Err(Error::Fit("degenerate abscissae".into()));
    }
    let slope = (sw * sxy - sx * sy) / det;
    let intercept = (sy - slope * sx) / sw;
    if !(slope < 0.0) {
        return Err(Error::Fit(format!(
            "non-Maxwellian density (slope {slope})"
        )));
    }
    let theta = -0.5 / slope;

    let mut ss = 0.0;
    for (i, &rho) in grid.density.iter().enumerate() {
        if rho < 1e-12 * peak {
            continue;
        }
        let mu = grid.centers()[i];
        let w = rho * grid.cell_width(i);
        let y = (rho / (mu * mu)).ln();
        let fitted = intercept + slope * mu * mu;
        ss += w * (y - fitted).powi(2);
    }
    Ok(TemperatureFit {
        theta,
        residual: (ss / sw).sqrt(),
    })
}
