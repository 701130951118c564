//! Photon-electron scattering cross-sections in units of the Thompson
//! cross-section σ₀: the Compton energy ratio R, the Klein-Nishina
//! differential and total forms, the "projection" term σ_R that weights
//! scattering by the forward momentum returned to the photon field, and the
//! momentum-transfer cross-section σ_MT = σ_KN - σ_R that actually drives
//! the drag force.
//!
//! Every closed form has a quadrature oracle over the differential
//! cross-section; `sigma_mt_oracle` is the one the acceptance suite uses.

use crate::numerics::{integrate_panels, QuadratureConfig, QuadratureResult};
use crate::{Error, Result};

/// Dimensionless photon energy ε = ħω/m₀c².
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhotonEnergy(f64);

impl PhotonEnergy {
    pub fn new(eps: f64) -> Result<Self> {
        if !eps.is_finite() || eps < 0.0 {
            return Err(Error::Domain(format!(
                "photon energy must be finite and non-negative, got {eps}"
            )));
        }
        Ok(PhotonEnergy(eps))
    }

    pub fn value(&self) -> f64 {
        self.0
    }
}

/// Which cross-section feeds the force integrals: the full momentum-transfer
/// form σ_MT = σ_KN - σ_R, or σ_KN alone (the projection term dropped).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SigmaMode {
    MomentumTransfer,
    KleinNishina,
}

impl SigmaMode {
    pub fn sigma_hat(&self, eps: f64) -> f64 {
        match self {
            SigmaMode::MomentumTransfer => sigma_mt(eps),
            SigmaMode::KleinNishina => kn_total(eps),
        }
    }
}

/// Ratio of scattered to incident photon energy,
/// R = [1 + ε(1 - cos ψ)]⁻¹ ∈ (0, 1].
pub fn compton_ratio(eps: f64, psi: f64) -> f64 {
    // 1 - cos ψ = 2 sin²(ψ/2), exact at ψ → 0.
    let u = 2.0 * (0.5 * psi).sin().powi(2);
    1.0 / (1.0 + eps * u)
}

/// Klein-Nishina differential cross-section dσ/dΩ in units of σ₀:
/// (3/16π)·R²(R + 1/R - sin²ψ).
pub fn kn_differential(eps: f64, psi: f64) -> f64 {
    let r = compton_ratio(eps, psi);
    let sin2 = psi.sin().powi(2);
    3.0 / (16.0 * std::f64::consts::PI) * r * r * (r + 1.0 / r - sin2)
}

/// d = 2(1+ε)/(1+2ε) - ln(1+2ε)/ε, the difference both cancelling groups of
/// the σ_R closed form are built from; series below ε = 1/4 where the direct
/// subtraction starts losing digits.
fn kn_log_difference(eps: f64) -> f64 {
    if eps >= 0.25 {
        return 2.0 * (1.0 + eps) / (1.0 + 2.0 * eps) - (2.0 * eps).ln_1p() / eps;
    }
    // d = Σ_{k≥2} (-1)^k 2^k (k-1)/(k+1) ε^k
    let mut sum = 0.0;
    let mut pow = (-2.0 * eps) * (-2.0 * eps); // (-2ε)^2
    let mut k = 2u32;
    loop {
        let term = pow * f64::from(k - 1) / f64::from(k + 1);
        sum += term;
        if term.abs() < 1e-18 * sum.abs().max(1e-300) || k > 120 {
            break;
        }
        pow *= -2.0 * eps;
        k += 1;
    }
    sum
}

/// Total Klein-Nishina cross-section σ_KN/σ₀ (exact to first order in α).
pub fn kn_total(eps: f64) -> f64 {
    debug_assert!(eps >= 0.0);
    if eps < 5e-3 {
        // 1 - 2ε + 26ε²/5 - 133ε³/10 + 1144ε⁴/35 - 544ε⁵/7; the closed form
        // loses ~ε⁻² digits in its bracket here.
        return 1.0
            + eps
                * (-2.0
                    + eps
                        * (26.0 / 5.0
                            + eps * (-13.3 + eps * (1144.0 / 35.0 - eps * 544.0 / 7.0))));
    }
    let l = (2.0 * eps).ln_1p();
    let one_p2 = 1.0 + 2.0 * eps;
    3.0 / (8.0 * eps)
        * ((1.0 - 2.0 / eps - 2.0 / (eps * eps)) * l + 0.5 + 4.0 / eps - 0.5 / (one_p2 * one_p2))
}

/// Projection cross-section σ_R/σ₀: the part of σ_KN carried forward by the
/// scattered photon. Vanishes for constant σ and at ε = 0, peaks near
/// ε ≈ 0.54.
pub fn sigma_r(eps: f64) -> f64 {
    debug_assert!(eps >= 0.0);
    if eps < 7.5e-3 {
        // 6ε/5 - 53ε²/10 + 636ε³/35 - 388ε⁴/7 + 1100ε⁵/7
        return eps
            * (6.0 / 5.0
                + eps
                    * (-5.3 + eps * (636.0 / 35.0 + eps * (-388.0 / 7.0 + eps * 1100.0 / 7.0))));
    }
    let one_p2 = 1.0 + 2.0 * eps;
    let d = kn_log_difference(eps);
    // Three groups, each vanishing at ε = 0.
    let t1 = 2.0 * eps * (1.0 - 2.0 * eps) / (3.0 * one_p2.powi(3));
    let t2 = d / eps;
    let t3 = 2.0 * (2.0 + 4.0 * eps + eps * eps) / (eps * one_p2 * one_p2)
        - 3.0 * (1.0 + eps) / (eps * eps * eps) * d;
    0.375 * (t1 + t2 + t3)
}

/// Momentum-transfer cross-section σ_MT/σ₀ = σ_KN/σ₀ - σ_R/σ₀.
pub fn sigma_mt(eps: f64) -> f64 {
    kn_total(eps) - sigma_r(eps)
}

/// The three integrated cross-sections at one photon energy.
#[derive(Debug, Clone, Copy)]
pub struct CrossSectionTriple {
    pub eps: f64,
    pub kn: f64,
    pub r: f64,
    pub mt: f64,
}

impl CrossSectionTriple {
    pub fn at(eps: PhotonEnergy) -> Self {
        let eps = eps.value();
        let kn = kn_total(eps);
        let r = sigma_r(eps);
        CrossSectionTriple {
            eps,
            kn,
            r,
            mt: kn - r,
        }
    }
}

/// Panel edges in u = 1 - cos ψ resolving the forward Klein-Nishina peak
/// (width ~ 1/ε) at high energy.
fn angular_panels(eps: f64) -> Vec<f64> {
    let mut edges = vec![0.0];
    if eps > 10.0 {
        let u_star = 1.0 / eps;
        let mut u = 1e-3 * u_star;
        while u < 2.0 {
            edges.push(u);
            u *= 10.0;
        }
    } else {
        edges.push(0.5);
        edges.push(1.0);
        edges.push(1.5);
    }
    edges.push(2.0);
    edges
}

/// σ_MT/σ₀ by direct quadrature of the momentum-transfer integral over the
/// Klein-Nishina differential cross-section,
/// 2π∫[1 - R cos ψ](dσ/dΩ)sin ψ dψ / σ₀, in the variable u = 1 - cos ψ.
pub fn sigma_mt_oracle(eps: f64, cfg: &QuadratureConfig) -> QuadratureResult {
    // [1 - R(1-u)] simplifies to u(1+ε)/(1+εu): no cancellation anywhere.
    let f = |u: f64| {
        let r = 1.0 / (1.0 + eps * u);
        let sin2 = u * (2.0 - u);
        0.375 * r * r * (r + 1.0 / r - sin2) * (u * (1.0 + eps) / (1.0 + eps * u))
    };
    integrate_panels(&f, &angular_panels(eps), cfg)
}

/// σ_KN/σ₀ by quadrature of the differential form (test oracle).
pub fn kn_total_oracle(eps: f64, cfg: &QuadratureConfig) -> QuadratureResult {
    let f = |u: f64| {
        let r = 1.0 / (1.0 + eps * u);
        let sin2 = u * (2.0 - u);
        0.375 * r * r * (r + 1.0 / r - sin2)
    };
    integrate_panels(&f, &angular_panels(eps), cfg)
}

/// σ_R/σ₀ by quadrature (test oracle).
pub fn sigma_r_oracle(eps: f64, cfg: &QuadratureConfig) -> QuadratureResult {
    let f = |u: f64| {
        let r = 1.0 / (1.0 + eps * u);
        let sin2 = u * (2.0 - u);
        0.375 * r * r * (r * r - sin2 * r + 1.0) * (1.0 - u)
    };
    integrate_panels(&f, &angular_panels(eps), cfg)
}
