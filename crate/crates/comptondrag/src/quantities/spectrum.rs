//! Isotropic lab-frame photon spectra: the Planck blackbody density, a
//! tabulated spectrum read from CSV, and the transform of either into the
//! electron rest frame.
//!
//! Spectral density convention: ρ_L(ω) is the photon number density per cm³
//! per unit angular frequency, so ∫ρ_L(ω)dω is the photon number density.

use std::f64::consts::PI;
use std::io::BufRead;
use std::path::Path;

use super::constants::{C_CM_S, HBAR_ERG_S, KELVIN_PER_THETA};
use super::kinematics::{doppler_cos, ElectronKinematics};
use crate::{Error, Result};

/// Dimensionless radiation temperature θ = k_B·T/m₀c² with its Kelvin value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiationTemperature {
    theta: f64,
}

impl RadiationTemperature {
    pub fn from_theta(theta: f64) -> Result<Self> {
        if !(theta > 0.0) || !theta.is_finite() {
            return Err(Error::Domain(format!(
                "temperature must be positive and finite, got θ = {theta}"
            )));
        }
        Ok(RadiationTemperature { theta })
    }

    pub fn from_kelvin(kelvin: f64) -> Result<Self> {
        Self::from_theta(kelvin / KELVIN_PER_THETA)
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn kelvin(&self) -> f64 {
        self.theta * KELVIN_PER_THETA
    }
}

/// Planck photon number density ρ_TR(ω) = (ω²/π²c³)/(e^{ħω/k_BT} - 1),
/// per cm³ per (rad/s). The ω → 0 limit ω·k_BT/(π²c³ħ) is reached through
/// `expm1`, not a 0/0.
pub fn planck_density(theta: &RadiationTemperature, omega: f64) -> f64 {
    if omega <= 0.0 {
        return 0.0;
    }
    let x = HBAR_ERG_S * omega / (theta.theta() * super::constants::ELECTRON_REST_ENERGY_ERG);
    let denom = x.exp_m1();
    if denom.is_infinite() {
        return 0.0;
    }
    omega * omega / (PI * PI * C_CM_S.powi(3)) / denom
}

/// A tabulated spectrum: strictly increasing ω samples, log-linearly
/// interpolated (power-law segments), zero outside the tabulated support.
#[derive(Debug, Clone)]
pub struct TabulatedSpectrum {
    omega: Vec<f64>,
    rho: Vec<f64>,
}

impl TabulatedSpectrum {
    pub fn from_points(points: Vec<(f64, f64)>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::Format(
                "a tabulated spectrum needs at least 2 rows".into(),
            ));
        }
        for w in points.windows(2) {
            if !(w[0].0 < w[1].0) {
                return Err(Error::Format(format!(
                    "omega samples must be strictly increasing ({} then {})",
                    w[0].0, w[1].0
                )));
            }
        }
        for &(omega, rho) in &points {
            if !omega.is_finite() || !rho.is_finite() || omega <= 0.0 || rho < 0.0 {
                return Err(Error::Format(format!(
                    "bad spectrum row (omega {omega}, rho {rho})"
                )));
            }
        }
        let (omega, rho) = points.into_iter().unzip();
        Ok(TabulatedSpectrum { omega, rho })
    }

    /// Parse the CSV interface format: a header line
    /// `omega_rad_per_s,rho_per_cm3_per_rad_s` followed by data rows.
    /// Lines starting with `#` are ignored.
    pub fn from_csv_reader<R: BufRead>(reader: R) -> Result<Self> {
        let mut lines = reader
            .lines()
            .collect::<std::io::Result<Vec<_>>>()?
            .into_iter()
            .map(|l| l.trim().to_string())
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Format("empty spectrum file".into()))?;
        if header.replace(' ', "") != "omega_rad_per_s,rho_per_cm3_per_rad_s" {
            return Err(Error::Format(format!(
                "expected header 'omega_rad_per_s,rho_per_cm3_per_rad_s', got '{header}'"
            )));
        }
        let mut points = Vec::new();
        for (n, line) in lines.enumerate() {
            let mut cols = line.split(',');
            let omega = cols
                .next()
                .and_then(|s| s.trim().parse::<f64>().ok())
                .ok_or_else(|| Error::Format(format!("row {}: bad omega", n + 2)))?;
            let rho = cols
                .next()
                .and_then(|s| s.trim().parse::<f64>().ok())
                .ok_or_else(|| Error::Format(format!("row {}: bad rho", n + 2)))?;
            if cols.next().is_some() {
                return Err(Error::Format(format!("row {}: too many columns", n + 2)));
            }
            points.push((omega, rho));
        }
        Self::from_points(points)
    }

    pub fn from_csv_path<P: AsRef<Path>>(path: P) -> Result<Self> {
        let file = std::fs::File::open(path)?;
        Self::from_csv_reader(std::io::BufReader::new(file))
    }

    pub fn density(&self, omega: f64) -> f64 {
        let n = self.omega.len();
        if omega < self.omega[0] || omega > self.omega[n - 1] {
            return 0.0;
        }
        let idx = match self
            .omega
            .binary_search_by(|probe| probe.partial_cmp(&omega).unwrap())
        {
            Ok(i) => return self.rho[i],
            Err(i) => i - 1,
        };
        let (w0, w1) = (self.omega[idx], self.omega[idx + 1]);
        let (r0, r1) = (self.rho[idx], self.rho[idx + 1]);
        if r0 > 0.0 && r1 > 0.0 {
            // power-law segment
            let p = (r1 / r0).ln() / (w1 / w0).ln();
            r0 * (omega / w0).powf(p)
        } else {
            // fall back to linear where a zero endpoint defeats the log
            r0 + (r1 - r0) * (omega - w0) / (w1 - w0)
        }
    }

    pub fn support(&self) -> (f64, f64) {
        (self.omega[0], *self.omega.last().unwrap())
    }
}

/// An isotropic lab-frame spectrum model.
#[derive(Debug, Clone)]
pub enum SpectrumModel {
    Planck(RadiationTemperature),
    Tabulated(TabulatedSpectrum),
}

/// Planck support window in units of x = ħω/k_BT: [1e-6, 80] holds all but a
/// ~1e-19 relative sliver of every spectral moment used here.
const PLANCK_X_LO: f64 = 1e-6;
const PLANCK_X_HI: f64 = 80.0;

impl SpectrumModel {
    pub fn planck(theta: f64) -> Result<Self> {
        Ok(SpectrumModel::Planck(RadiationTemperature::from_theta(
            theta,
        )?))
    }

    /// Photon number spectral density ρ_L(ω) ≥ 0.
    pub fn density(&self, omega: f64) -> f64 {
        match self {
            SpectrumModel::Planck(t) => planck_density(t, omega),
            SpectrumModel::Tabulated(t) => t.density(omega),
        }
    }

    /// Angular frequency window outside which the density is zero or
    /// negligible for any integral at the tolerances used in this crate.
    pub fn support(&self) -> (f64, f64) {
        match self {
            SpectrumModel::Planck(t) => {
                let scale = t.theta() * super::constants::ELECTRON_REST_ENERGY_ERG / HBAR_ERG_S;
                (PLANCK_X_LO * scale, PLANCK_X_HI * scale)
            }
            SpectrumModel::Tabulated(t) => t.support(),
        }
    }
}

/// Rest-frame (P-frame) spectral density seen by a moving electron:
/// ρ_P(ω, ξ_P) = ρ_L(ω/D)·D² with the Doppler coefficient D(β, ξ_P).
pub fn transformed_spectrum(
    spec: &SpectrumModel,
    kin: &ElectronKinematics,
    omega: f64,
    xi_p: f64,
) -> Result<f64> {
    if !(0.0..=PI).contains(&xi_p) {
        return Err(Error::Domain(format!(
            "angle must lie in [0, π], got {xi_p}"
        )));
    }
    if omega < 0.0 {
        return Err(Error::Domain(format!(
            "frequency must be non-negative, got {omega}"
        )));
    }
    let d = doppler_cos(kin, xi_p.cos());
    Ok(spec.density(omega / d) * d * d)
}
