//! Discretized electron density ρ(μ) on a log-spaced momentum grid.

use std::io::Write;

use super::{mb_density, mj_density};
use crate::{Error, Result};

/// Finite-volume momentum grid with a density per unit μ at each cell center.
#[derive(Debug, Clone)]
pub struct DistributionGrid {
    edges: Vec<f64>,
    centers: Vec<f64>,
    pub density: Vec<f64>,
}

impl DistributionGrid {
    /// Log-spaced grid of `cells` cells covering [mu_min, mu_max].
    pub fn log_spaced(mu_min: f64, mu_max: f64, cells: usize) -> Result<Self> {
        if !(mu_min > 0.0) || !(mu_max > mu_min) || !mu_max.is_finite() {
            return Err(Error::Domain(format!(
                "grid window must satisfy 0 < mu_min < mu_max, got [{mu_min}, {mu_max}]"
            )));
        }
        if !(4..=1_000_000).contains(&cells) {
            return Err(Error::Domain(format!(
                "cell count must lie in [4, 1e6], got {cells}"
            )));
        }
        let log_lo = mu_min.ln();
        let step = (mu_max / mu_min).ln() / cells as f64;
        let edges: Vec<f64> = (0..=cells).map(|i| (log_lo + step * i as f64).exp()).collect();
        let centers: Vec<f64> = edges.windows(2).map(|w| (w[0] * w[1]).sqrt()).collect();
        Ok(DistributionGrid {
            edges,
            centers,
            density: vec![0.0; cells],
        })
    }

    /// Default window for an initial distribution peaked at `mu_peak`:
    /// [1e-4, 1e4] · max(1, μ_peak), 400 cells.
    pub fn default_window(mu_peak: f64) -> Result<Self> {
        let scale = mu_peak.max(1.0);
        Self::log_spaced(1e-4 * scale, 1e4 * scale, 400)
    }

    pub fn n_cells(&self) -> usize {
        self.centers.len()
    }

    pub fn centers(&self) -> &[f64] {
        &self.centers
    }

    pub fn edges(&self) -> &[f64] {
        &self.edges
    }

    pub fn cell_width(&self, i: usize) -> f64 {
        self.edges[i + 1] - self.edges[i]
    }

    /// Fill the density from a pointwise function of μ.
    pub fn fill_with(&mut self, f: impl Fn(f64) -> f64) {
        for (rho, &mu) in self.density.iter_mut().zip(&self.centers) {
            *rho = f(mu);
        }
    }

    /// Maxwell-Jüttner initial state (pointwise, so it is also the discrete
    /// stationary state of the Fokker-Planck solver at the same θ).
    pub fn fill_maxwell_juttner(&mut self, theta: f64) {
        self.fill_with(|mu| mj_density(mu, theta));
    }

    pub fn fill_maxwell_boltzmann(&mut self, theta: f64) {
        self.fill_with(|mu| mb_density(mu, theta));
    }

    /// Gaussian pulse in μ, unnormalized amplitude 1.
    pub fn fill_gaussian(&mut self, mu0: f64, sigma: f64) {
        self.fill_with(|mu| (-((mu - mu0) / sigma).powi(2) / 2.0).exp());
    }

    /// Rescale the density so `total()` equals `target`.
    pub fn normalize_to(&mut self, target: f64) -> Result<()> {
        let total = self.total();
        if !(total > 0.0) {
            return Err(Error::Domain("cannot normalize an empty density".into()));
        }
        let scale = target / total;
        for rho in &mut self.density {
            *rho *= scale;
        }
        Ok(())
    }

    /// Total electron count N_Σ = Σ ρΔμ.
    pub fn total(&self) -> f64 {
        self.density
            .iter()
            .enumerate()
            .map(|(i, &rho)| rho * self.cell_width(i))
            .sum()
    }

    /// Raw moment Σ ρ μᵏ Δμ.
    pub fn moment(&self, k: i32) -> f64 {
        self.density
            .iter()
            .enumerate()
            .map(|(i, &rho)| rho * self.centers[i].powi(k) * self.cell_width(i))
            .sum()
    }

    /// Number-weighted mean Lorentz factor.
    pub fn mean_gamma(&self) -> f64 {
        let mut num = 0.0;
        let mut den = 0.0;
        for (i, &rho) in self.density.iter().enumerate() {
            let mu = self.centers[i];
            let w = rho * self.cell_width(i);
            num += w * (1.0 + mu * mu).sqrt();
            den += w;
        }
        num / den
    }

    /// Excess kurtosis of one Cartesian momentum component for an isotropic
    /// distribution: (9/5)·⟨μ⁴⟩/⟨μ²⟩² - 3, zero for a Maxwellian.
    pub fn excess_kurtosis_isotropic(&self) -> f64 {
        let n = self.total();
        let m2 = self.moment(2) / n;
        let m4 = self.moment(4) / n;
        1.8 * m4 / (m2 * m2) - 3.0
    }

    /// Smallest density value (negative means the evolution broke positivity).
    pub fn min_density(&self) -> f64 {
        self.density.iter().cloned().fold(f64::INFINITY, f64::min)
    }

    /// Serialize as `mu,rho` CSV with a comment header carrying the snapshot
    /// time, the bath temperature and the method that produced it.
    pub fn write_csv<W: Write>(
        &self,
        w: &mut W,
        tau: f64,
        theta_eq: f64,
        method: &str,
    ) -> std::io::Result<()> {
        writeln!(w, "# tau: {tau:.11e}")?;
        writeln!(w, "# theta_eq: {theta_eq:.11e}")?;
        writeln!(w, "# method: {method}")?;
        writeln!(w, "mu,rho")?;
        for (i, &rho) in self.density.iter().enumerate() {
            writeln!(w, "{:.11e},{:.11e}", self.centers[i], rho)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_grid_structure() {
        let g = DistributionGrid::log_spaced(1e-2, 1e2, 40).unwrap();
        assert_eq!(g.n_cells(), 40);
        assert_eq!(g.edges().len(), 41);
        // uniform in log: constant ratio
        let r0 = g.edges()[1] / g.edges()[0];
        for w in g.edges().windows(2) {
            assert!(((w[1] / w[0]) / r0 - 1.0).abs() < 1e-12);
        }
        // centers are geometric means, inside their cells
        for i in 0..g.n_cells() {
            assert!(g.edges()[i] < g.centers()[i] && g.centers()[i] < g.edges()[i + 1]);
        }
    }

    #[test]
    fn totals_and_moments() {
        let mut g = DistributionGrid::log_spaced(1e-4, 10.0, 3000).unwrap();
        let theta = 0.02;
        g.fill_maxwell_boltzmann(theta);
        assert!((g.total() - 1.0).abs() < 1e-6, "total {}", g.total());
        assert!((g.moment(2) / (3.0 * theta) - 1.0).abs() < 1e-5);
        assert!(g.excess_kurtosis_isotropic().abs() < 1e-5);
        g.normalize_to(2.5).unwrap();
        assert!((g.total() - 2.5).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_windows() {
        assert!(DistributionGrid::log_spaced(0.0, 1.0, 10).is_err());
        assert!(DistributionGrid::log_spaced(1.0, 0.5, 10).is_err());
        assert!(DistributionGrid::log_spaced(1e-3, 1e3, 2).is_err());
    }

    #[test]
    fn csv_snapshot_format() {
        let mut g = DistributionGrid::log_spaced(0.1, 1.0, 4).unwrap();
        g.fill_with(|mu| mu);
        let mut buf = Vec::new();
        g.write_csv(&mut buf, 1.5, 0.05, "fp").unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("# tau: 1.5"));
        assert!(text.contains("# method: fp"));
        assert!(text.contains("mu,rho"));
        assert_eq!(text.lines().count(), 4 + 4);
    }
}
