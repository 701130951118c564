//! Electron kinematics in the dimensionless momentum μ = p/m₀c, and the
//! Doppler transform between the lab frame (isotropic radiation) and the
//! electron rest frame.

use super::constants::COMPTON_Q;
use crate::{Error, Result};

/// Electron state derived from μ = βγ = p/m₀c.
///
/// `one_minus_beta` is carried as a first-class field computed without
/// subtraction, 1-β = 1/(γ(γ+μ)); terms like e^{-x(1-β)} lose all precision
/// past γ ~ 1e8 if 1-β is formed by cancellation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElectronKinematics {
    pub mu: f64,
    pub gamma: f64,
    pub beta: f64,
    pub one_minus_beta: f64,
}

impl ElectronKinematics {
    /// Build the kinematic state from μ ≥ 0.
    pub fn from_mu(mu: f64) -> Result<Self> {
        if !mu.is_finite() || mu < 0.0 {
            return Err(Error::Domain(format!(
                "momentum must be finite and non-negative, got {mu}"
            )));
        }
        let gamma = (1.0 + mu * mu).sqrt();
        Ok(ElectronKinematics {
            mu,
            gamma,
            beta: mu / gamma,
            one_minus_beta: 1.0 / (gamma * (gamma + mu)),
        })
    }

    /// γ - μ computed without cancellation (equals 1/(γ+μ)).
    pub fn gamma_minus_mu(&self) -> f64 {
        1.0 / (self.gamma + self.mu)
    }

    /// Compton factor K_C = qθγ separating the classical (K_C ≪ 1) from the
    /// QED (K_C ≫ 1) drag regime.
    pub fn compton_factor(&self, theta: f64) -> f64 {
        COMPTON_Q * theta * self.gamma
    }
}

/// Doppler coefficient D = ω_P/ω_L = [γ(1 + β·cos ξ_P)]⁻¹ for a photon seen
/// at angle ξ_P ∈ [0, π] from the electron's direction of motion in its rest
/// frame.
pub fn doppler(kin: &ElectronKinematics, xi_p: f64) -> Result<f64> {
    if !(0.0..=std::f64::consts::PI).contains(&xi_p) {
        return Err(Error::Domain(format!(
            "angle must lie in [0, π], got {xi_p}"
        )));
    }
    Ok(doppler_cos(kin, xi_p.cos()))
}

/// Doppler coefficient from cos ξ_P directly; 1 + β·cos ξ is assembled as
/// (1-β) + β(1+cos ξ) so that nothing cancels at ξ → π, β → 1.
pub(crate) fn doppler_cos(kin: &ElectronKinematics, cos_xi_p: f64) -> f64 {
    let one_plus_beta_cos = kin.one_minus_beta + kin.beta * (1.0 + cos_xi_p);
    1.0 / (kin.gamma * one_plus_beta_cos)
}

/// K_C = qθγ for a bare Lorentz factor (used where no full kinematic state
/// exists, e.g. relaxation-rate formulas).
pub fn compton_factor_from_gamma(gamma: f64, theta: f64) -> f64 {
    COMPTON_Q * theta * gamma
}
