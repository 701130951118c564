//! Electron distribution-function kinetics: Maxwell-Jüttner and
//! Maxwell-Boltzmann equilibria, analytic relaxation rates, a conservative
//! positivity-preserving Fokker-Planck solver, and the exact
//! method-of-characteristics solution of the advection (drift-only) limit.
//!
//! Densities are ρ(μ) = number of electrons per unit μ per unit volume;
//! the distribution function g = ρ/μ² (per momentum-space volume) is what
//! the solver evolves internally.

mod characteristics;
mod fit;
mod fokker_planck;
mod grid;

pub use characteristics::characteristics_solve;
pub use fit::{fit_effective_temperature, TemperatureFit};
pub use fokker_planck::{fp_evolve, FokkerPlanckOptions, FokkerPlanckSolver};
pub use grid::DistributionGrid;

use crate::numerics::bessel_k2_scaled;
use crate::quantities::constants::{COMPTON_Q, COMPTON_TIME_S};
use crate::quantities::compton_factor_from_gamma;
use crate::{Error, Result};

/// Maxwell-Jüttner density ρ_MJ(μ) = μ²e^{-γ/θ}/[θK₂(1/θ)], normalized to
/// unit total: ∫ρ_MJ dμ = 1 exactly (θK₂(1/θ) is the exact normalizer).
///
/// Evaluated as μ²e^{-(γ-1)/θ} against the scaled Bessel function
/// e^{1/θ}K₂(1/θ), which survives θ ≪ 1 where both factors under/overflow.
pub fn mj_density(mu: f64, theta: f64) -> f64 {
    assert!(theta > 0.0, "mj_density requires θ > 0");
    if mu < 0.0 {
        return 0.0;
    }
    let gamma = (1.0 + mu * mu).sqrt();
    let gamma_minus_one = mu * mu / (gamma + 1.0);
    mu * mu * (-gamma_minus_one / theta).exp() / (theta * k2e_cached(1.0 / theta))
}

/// Density sweeps hold θ fixed while μ varies; one-slot memoization spares
/// the (quadrature-backed) Bessel evaluation per point.
fn k2e_cached(x: f64) -> f64 {
    use std::cell::Cell;
    thread_local! {
        static LAST: Cell<(u64, f64)> = const { Cell::new((0, 0.0)) };
    }
    LAST.with(|slot| {
        let (bits, value) = slot.get();
        if bits == x.to_bits() {
            return value;
        }
        let value = bessel_k2_scaled(x).expect("argument is positive");
        slot.set((x.to_bits(), value));
        value
    })
}

/// Maxwell-Boltzmann density ρ_MB(μ) = μ²e^{-μ²/2θ}/[√(π/2)·θ^{3/2}],
/// normalized to unit total.
pub fn mb_density(mu: f64, theta: f64) -> f64 {
    assert!(theta > 0.0, "mb_density requires θ > 0");
    if mu < 0.0 {
        return 0.0;
    }
    let norm = (std::f64::consts::PI / 2.0).sqrt() * theta.powf(1.5);
    mu * mu * (-mu * mu / (2.0 * theta)).exp() / norm
}

/// Lorentz factor at the peak of the Maxwell-Jüttner density,
/// γ_in = θ + √(1+θ²) (the positive root of γ² = 1 + 2θγ).
pub fn mj_peak_gamma(theta: f64) -> f64 {
    theta + (1.0 + theta * theta).sqrt()
}

/// Drag regime by Compton factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// K_C ≤ 0.1: classical constant-cross-section drag.
    Thompson,
    /// 0.1 < K_C < 10: transition.
    General,
    /// K_C ≥ 10: QED-suppressed cross-section, logarithmic rates.
    Compton,
}

impl Regime {
    pub fn from_compton_factor(kc: f64) -> Self {
        if kc <= 0.1 {
            Regime::Thompson
        } else if kc < 10.0 {
            Regime::General
        } else {
            Regime::Compton
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Regime::Thompson => "thompson",
            Regime::General => "general",
            Regime::Compton => "compton",
        }
    }
}

/// Which analytic rate produced a relaxation time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RateFormula {
    /// τ_rlx = 1/2θ⁴: Gaussian-component decay, non-relativistic bath.
    ThompsonGaussian,
    /// τ_rlx⁻¹ = 2θ³ln(1+qθγ_in)/q: arbitrary initial energy.
    General,
    /// τ_rlx = q/[2θ³ln(2qθθ_in)]: hot near-equilibrium bath.
    HotEquilibrium,
    /// τ = 1/(γ₀θ⁴): the deceleration-trajectory e-folding scale.
    TrajectoryScale,
}

impl RateFormula {
    pub fn label(&self) -> &'static str {
        match self {
            RateFormula::ThompsonGaussian => "thompson-gaussian",
            RateFormula::General => "general-log",
            RateFormula::HotEquilibrium => "hot-equilibrium",
            RateFormula::TrajectoryScale => "trajectory-scale",
        }
    }
}

/// A relaxation time with its provenance.
#[derive(Debug, Clone, Copy)]
pub struct RelaxationReport {
    pub theta_eq: f64,
    pub gamma_in: f64,
    pub compton_factor: f64,
    /// Dimensionless relaxation time (units of t_C).
    pub tau_rlx: f64,
    pub t_rlx_seconds: f64,
    pub regime: Regime,
    pub formula: RateFormula,
}

fn check_theta(theta: f64) -> Result<()> {
    if !(theta > 0.0) || !theta.is_finite() {
        return Err(Error::Domain(format!(
            "temperature must be positive and finite, got θ = {theta}"
        )));
    }
    Ok(())
}

fn report(theta_eq: f64, gamma_in: f64, tau_rlx: f64, formula: RateFormula) -> RelaxationReport {
    let kc = compton_factor_from_gamma(gamma_in, theta_eq);
    RelaxationReport {
        theta_eq,
        gamma_in,
        compton_factor: kc,
        tau_rlx,
        t_rlx_seconds: tau_rlx * COMPTON_TIME_S,
        regime: Regime::from_compton_factor(kc),
        formula,
    }
}

/// General relaxation rate τ_rlx⁻¹ = q⁻¹·2θ_eq³·ln(1 + qθ_eq·γ_in);
/// reduces to 1/2θ⁴ as K_C → 0.
pub fn relaxation_rate(theta_eq: f64, gamma_in: f64) -> Result<RelaxationReport> {
    check_theta(theta_eq)?;
    if !(gamma_in >= 1.0) {
        return Err(Error::Domain(format!(
            "initial Lorentz factor must be ≥ 1, got {gamma_in}"
        )));
    }
    let kc = compton_factor_from_gamma(gamma_in, theta_eq);
    let rate = 2.0 * theta_eq.powi(3) * kc.ln_1p() / COMPTON_Q;
    Ok(report(theta_eq, gamma_in, 1.0 / rate, RateFormula::General))
}

/// Thompson-regime relaxation time τ_rlx = 1/2θ_eq⁴ (Gaussian components of
/// a non-relativistic distribution decay at exactly this rate).
pub fn relaxation_rate_thompson(theta_eq: f64) -> Result<RelaxationReport> {
    check_theta(theta_eq)?;
    Ok(report(
        theta_eq,
        1.0,
        0.5 / theta_eq.powi(4),
        RateFormula::ThompsonGaussian,
    ))
}

/// Hot near-equilibrium relaxation τ_rlx = q/[2θ_eq³·ln(2qθ_eqθ_in)],
/// valid for θ_in² ≫ 1.
pub fn relaxation_rate_hot(theta_eq: f64, theta_in: f64) -> Result<RelaxationReport> {
    check_theta(theta_eq)?;
    check_theta(theta_in)?;
    let log = (2.0 * COMPTON_Q * theta_eq * theta_in).ln();
    if log <= 0.0 {
        return Err(Error::Domain(format!(
            "hot-equilibrium rate needs 2qθ_eqθ_in > 1, got {}",
            2.0 * COMPTON_Q * theta_eq * theta_in
        )));
    }
    let tau = COMPTON_Q / (2.0 * theta_eq.powi(3) * log);
    Ok(report(
        theta_eq,
        mj_peak_gamma(theta_in),
        tau,
        RateFormula::HotEquilibrium,
    ))
}

/// Deceleration-trajectory time scale τ = 1/(γ₀θ⁴) (the e-folding scale of
/// the closed-form Thompson trajectory).
pub fn trajectory_time_scale(theta: f64, gamma0: f64) -> Result<RelaxationReport> {
    check_theta(theta)?;
    if !(gamma0 >= 1.0) {
        return Err(Error::Domain(format!(
            "Lorentz factor must be ≥ 1, got {gamma0}"
        )));
    }
    Ok(report(
        theta,
        gamma0,
        1.0 / (gamma0 * theta.powi(4)),
        RateFormula::TrajectoryScale,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{integrate_panels, integrate_semi_infinite, QuadratureConfig};
    use crate::quantities::constants::ELECTRON_REST_ENERGY_EV;

    #[test]
    fn mj_normalization() {
        let cfg = QuadratureConfig::with_rel_tol(1e-11);
        for &theta in &[1e-3, 0.1, 1.7, 100.0] {
            let r = integrate_semi_infinite(&|mu: f64| mj_density(mu, theta), 0.0, &cfg);
            assert!(
                (r.value - 1.0).abs() < 1e-8,
                "θ={theta}: ∫ρ_MJ = {}",
                r.value
            );
        }
    }

    #[test]
    fn mb_normalization_and_moments() {
        let cfg = QuadratureConfig::with_rel_tol(1e-12);
        let theta = 0.037;
        let edges = [0.0, 0.05, 0.1, 0.3, 0.6, 1.2, 2.5];
        let total = integrate_panels(&|mu: f64| mb_density(mu, theta), &edges, &cfg).value;
        assert!((total - 1.0).abs() < 1e-10, "∫ρ_MB = {total}");
        // equipartition: ⟨μ²⟩ = 3θ
        let second =
            integrate_panels(&|mu: f64| mu * mu * mb_density(mu, theta), &edges, &cfg).value;
        assert!((second / (3.0 * theta) - 1.0).abs() < 1e-9, "⟨μ²⟩ = {second}");
        // peak at √(2θ)
        let (peak, _) = crate::numerics::golden_section_max(
            &|mu| mb_density(mu, theta),
            0.0,
            1.0,
            1e-12,
        );
        assert!(((peak - (2.0 * theta).sqrt()) / peak).abs() < 1e-6);
    }

    #[test]
    fn mj_reduces_to_mb_when_cold() {
        // θ = 1e-3: deviation relative to the peak density stays below 1%
        // out to μ = 5√θ (plain pointwise ratio degrades in the far tail).
        let theta: f64 = 1e-3;
        let peak = mb_density((2.0 * theta).sqrt(), theta);
        let mut worst = 0.0f64;
        for i in 1..=200 {
            let mu = 5.0 * theta.sqrt() * f64::from(i) / 200.0;
            let dev = (mj_density(mu, theta) - mb_density(mu, theta)).abs() / peak;
            worst = worst.max(dev);
        }
        assert!(worst < 0.01, "worst peak-relative deviation {worst}");
    }

    #[test]
    fn mj_peak_location() {
        // argmax of ρ_MJ sits at γ_in = θ + √(1+θ²), i.e. μ_in = √(γ_in²-1).
        for &theta in &[0.05, 0.5, 1.7, 10.0] {
            let mu_in = (mj_peak_gamma(theta).powi(2) - 1.0).sqrt();
            let (peak, _) = crate::numerics::golden_section_max(
                &|mu| mj_density(mu, theta),
                mu_in * 0.2,
                mu_in * 5.0,
                1e-10,
            );
            assert!(
                ((peak - mu_in) / mu_in).abs() < 1e-6,
                "θ={theta}: peak {peak} vs {mu_in}"
            );
        }
    }

    #[test]
    fn relaxation_reduces_to_thompson() {
        let theta = 1e-4;
        let general = relaxation_rate(theta, 1.0).unwrap();
        let thompson = relaxation_rate_thompson(theta).unwrap();
        assert!((general.tau_rlx / thompson.tau_rlx - 1.0).abs() < 1e-3);
        assert_eq!(thompson.regime, Regime::Thompson);
    }

    #[test]
    fn hot_rate_consistent_with_general() {
        // For θ_in ≫ 1 the general rate at the MJ peak energy approaches the
        // hot near-equilibrium form.
        let (theta_eq, theta_in) = (1.7, 50.0);
        let hot = relaxation_rate_hot(theta_eq, theta_in).unwrap();
        let general = relaxation_rate(theta_eq, mj_peak_gamma(theta_in)).unwrap();
        assert!(
            (hot.tau_rlx / general.tau_rlx - 1.0).abs() < 0.01,
            "{} vs {}",
            hot.tau_rlx,
            general.tau_rlx
        );
    }

    #[test]
    fn headline_relaxation_times() {
        // Compton threshold: θ = 0.1, γ_in = 1 → 23 fs.
        let r = relaxation_rate(0.1, 1.0).unwrap();
        assert!((r.t_rlx_seconds / 2.3e-14 - 1.0).abs() < 0.05, "{:e}", r.t_rlx_seconds);
        assert!((r.compton_factor - 1.0).abs() < 1e-12);

        // 50 MeV beam in a θ = 1.7 bath → 0.4 as, K_C ≈ 1700.
        let gamma_in = 50.0e6 / ELECTRON_REST_ENERGY_EV;
        let r = relaxation_rate(1.7, gamma_in).unwrap();
        assert!((r.compton_factor / 1700.0 - 1.0).abs() < 0.05);
        assert!((r.t_rlx_seconds / 0.4e-18 - 1.0).abs() < 0.15, "{:e}", r.t_rlx_seconds);
        assert_eq!(r.regime, Regime::Compton);

        // 1300 K lab bath → 0.7e9 s.
        let theta = crate::quantities::RadiationTemperature::from_kelvin(1300.0)
            .unwrap()
            .theta();
        let r = relaxation_rate_thompson(theta).unwrap();
        assert!((r.t_rlx_seconds / 0.7e9 - 1.0).abs() < 0.10, "{:e}", r.t_rlx_seconds);
    }

    #[test]
    fn rate_domain_errors() {
        assert!(relaxation_rate(-0.1, 1.0).is_err());
        assert!(relaxation_rate(0.1, 0.5).is_err());
        assert!(relaxation_rate_hot(1e-6, 1e-6).is_err());
    }
}
