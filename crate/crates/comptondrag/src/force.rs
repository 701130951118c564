//! Radiation-pressure drag force on an electron in isotropic radiation, in
//! dimensionless form f = dμ/dτ.
//!
//! Five evaluation routes, deliberately redundant so they can cross-check
//! each other:
//!
//! * `force_general` — nested quadrature with the outer integral over the
//!   rest-frame photon frequency (the cross-section weighting) and the inner
//!   over the incidence angle;
//! * `force_general_alt` — the same integral rearranged with the outer
//!   integral over the lab-frame frequency (the spectrum weighting);
//! * `force_blackbody` — for a Planck bath, reduced to a single integral via
//!   dilogarithms;
//! * `force_thompson` — the constant-cross-section limit f = -θ⁴μγ with its
//!   closed-form trajectory;
//! * `force_model` — the analytic fit f = -μθ³·ln(1 + qθγ)/q.
//!
//! All force values are ≤ 0 (a drag), vanishing at μ = 0 by isotropy.

use crate::numerics::{
    dilog_exp_neg, integrate_panels, ln_one_minus_exp_neg, QuadratureConfig, QuadratureResult,
};
use crate::quantities::constants::{
    COMPTON_Q, COMPTON_TIME_S, C_CM_S, ELECTRON_MASS_G, HBAR_ERG_S, SIGMA_THOMPSON_CM2,
};
use crate::quantities::{ElectronKinematics, SpectrumModel};
use crate::xsection::{sigma_mt, SigmaMode};
use crate::{Error, Result};

/// 45/(8π⁴), the prefactor of the reduced blackbody integral.
const BLACKBODY_PREFACTOR: f64 = 45.0 / (8.0 * 97.409_091_034_002_43);
/// 15/(16π⁴), the prefactor of the low-velocity factor Θ(θ).
const THETA_PREFACTOR: f64 = 15.0 / (16.0 * 97.409_091_034_002_43);
/// Below this μ the reduced blackbody integral hands over to f = -μθ⁴Θ(θ):
/// its 1/(μγ)² prefactor rides on an O(μ³) cancellation in the kernel.
const MU_LINEAR_BRANCH: f64 = 1e-4;
/// Below this β the drag kernel switches to its analytic small-β expansion.
const BETA_KERNEL_SERIES: f64 = 0.03;

/// Which formulation produced a force value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ForceMethod {
    /// Nested quadrature, outer integral over rest-frame frequency.
    GeneralRestFrame,
    /// Nested quadrature, outer integral over lab-frame frequency.
    GeneralLabFrame,
    /// Reduced single-integral blackbody form (dilogarithm kernel).
    BlackbodyReduced,
    /// Constant cross-section: f = -θ⁴μγ exactly.
    Thompson,
    /// Analytic fit f = -μθ³ ln(1+qθγ)/q.
    Model,
}

/// A force value with its provenance and quadrature error.
#[derive(Debug, Clone, Copy)]
pub struct ForceEvaluation {
    /// Dimensionless force f = dμ/dτ (≤ 0 for μ > 0).
    pub f: f64,
    /// Q = |f|/(μθ⁴); the Θ(θ) limit at μ = 0. None for spectra without a
    /// temperature.
    pub q_factor: Option<f64>,
    pub method: ForceMethod,
    pub error_estimate: f64,
    pub converged: bool,
}

/// One point of the Thompson-limit deceleration trajectory μ(τ).
#[derive(Debug, Clone, Copy)]
pub struct TrajectoryPoint {
    pub tau: f64,
    pub mu: f64,
}

fn check_theta(theta: f64) -> Result<()> {
    if !(theta > 0.0) || !theta.is_finite() {
        return Err(Error::Domain(format!(
            "temperature must be positive and finite, got θ = {theta}"
        )));
    }
    Ok(())
}

/// Thompson-limit drag f = -θ⁴μγ (constant cross-section).
pub fn force_thompson(kin: &ElectronKinematics, theta: f64) -> Result<ForceEvaluation> {
    check_theta(theta)?;
    let f = -theta.powi(4) * kin.mu * kin.gamma;
    Ok(ForceEvaluation {
        f,
        q_factor: Some(kin.gamma),
        method: ForceMethod::Thompson,
        error_estimate: 0.0,
        converged: true,
    })
}

/// Analytic model f = -μθ³·ln(1 + K_C)/q with K_C = qθγ and q = 10.
pub fn force_model(kin: &ElectronKinematics, theta: f64) -> Result<ForceEvaluation> {
    check_theta(theta)?;
    let kc = kin.compton_factor(theta);
    let f = -kin.mu * theta.powi(3) * kc.ln_1p() / COMPTON_Q;
    // |f|/(μθ⁴) without the 0/0 at μ = 0.
    let q_factor = kc.ln_1p() / (COMPTON_Q * theta);
    Ok(ForceEvaluation {
        f,
        q_factor: Some(q_factor),
        method: ForceMethod::Model,
        error_estimate: 0.0,
        converged: true,
    })
}

/// Closed-form Thompson deceleration: μ(τ) = 1/sinh(τθ⁴ + δ₀) with
/// δ₀ = ln[(1+γ₀)/μ₀] = asinh(1/μ₀).
pub fn thompson_trajectory(mu0: f64, theta: f64, tau: f64) -> Result<TrajectoryPoint> {
    check_theta(theta)?;
    if !(mu0 > 0.0) || !mu0.is_finite() {
        return Err(Error::Domain(format!(
            "initial momentum must be positive, got {mu0}"
        )));
    }
    if !(tau >= 0.0) {
        return Err(Error::Domain(format!("time must be non-negative, got {tau}")));
    }
    let delta0 = (1.0 / mu0).asinh();
    let mu = 1.0 / (tau * theta.powi(4) + delta0).sinh();
    Ok(TrajectoryPoint { tau, mu })
}

/// The dilogarithm kernel of the reduced blackbody integral: the sum of the
/// co- and counter-propagating pieces
///
///   ±x·Li₂[e^{-x(1±β)}] - x²β·ln[1 - e^{-x(1±β)}]
///
/// equal to x·(∫g - trapezoid(g)) for g(s) = ln(1-e^{-s}) over
/// [x(1-β), x(1+β)]. Directly it cancels to O(β³); below β = 0.03 it is
/// evaluated by the corresponding Euler-Maclaurin-type series in powers of
/// (xβ)² built from Bose-function derivatives, which keeps full relative
/// accuracy down to β → 0.
fn drag_kernel(x: f64, kin: &ElectronKinematics) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let beta = kin.beta;
    let d = x * beta;
    // The series converges like β² at small x and like (xβ)²/10 at large x;
    // outside that corner the direct form's cancellation stays below ~1e-11.
    if beta < BETA_KERNEL_SERIES && d <= 0.15 {
        let b = 1.0 / x.exp_m1(); // 1/(eˣ-1); 0 at large x
        if !b.is_finite() {
            // x so small that eˣ-1 underflows: kernel ~ (2/3)β³x² → 0
            return 2.0 / 3.0 * beta.powi(3) * x * x;
        }
        let bb = b + b * b;
        let g4 = (6.0 * b + 6.0) * b + 1.0;
        let g6 = (((120.0 * b + 240.0) * b + 150.0) * b + 30.0) * b + 1.0;
        let d2 = d * d;
        x * d * d2 * bb * (2.0 / 3.0 + d2 * (g4 / 15.0 + d2 * g6 / 420.0))
    } else {
        let sm = x * kin.one_minus_beta;
        let sp = x * (2.0 - kin.one_minus_beta);
        x * (dilog_exp_neg(sp) - dilog_exp_neg(sm))
            - x * d * (ln_one_minus_exp_neg(sp) + ln_one_minus_exp_neg(sm))
    }
}

/// Panel edges for the reduced blackbody integral in x = ħωγ/k_BT: fixed
/// low-x resolution, then decades out to where e^{-x(1-β)} has died.
fn blackbody_panels(kin: &ElectronKinematics) -> Vec<f64> {
    let x_max = (50.0 / kin.one_minus_beta).clamp(64.0, 1e30);
    let mut edges = vec![0.0, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0];
    let mut x = 64.0;
    while x < x_max {
        x = (x * 10.0).min(x_max);
        edges.push(x);
    }
    edges
}

/// Blackbody drag with the full momentum-transfer cross-section (or σ_KN
/// only, per `mode`).
pub fn force_blackbody(
    kin: &ElectronKinematics,
    theta: f64,
    mode: SigmaMode,
    cfg: &QuadratureConfig,
) -> Result<ForceEvaluation> {
    force_blackbody_with(kin, theta, &|eps| mode.sigma_hat(eps), cfg)
}

/// Blackbody drag with an arbitrary cross-section profile σ̂(ε) = σ_MT/σ₀.
pub fn force_blackbody_with(
    kin: &ElectronKinematics,
    theta: f64,
    sigma_hat: &dyn Fn(f64) -> f64,
    cfg: &QuadratureConfig,
) -> Result<ForceEvaluation> {
    check_theta(theta)?;
    let theta4 = theta.powi(4);

    if kin.mu < MU_LINEAR_BRANCH {
        // f = -μθ⁴Θ(θ): the 1/(μγ)² prefactor is not worth fighting here.
        let th = theta_factor_with(theta, sigma_hat, cfg);
        return Ok(ForceEvaluation {
            f: -kin.mu * theta4 * th.value,
            q_factor: Some(th.value),
            method: ForceMethod::BlackbodyReduced,
            error_estimate: kin.mu * theta4 * th.error_estimate,
            converged: th.converged,
        });
    }

    let eps_scale = theta / kin.gamma;
    let integrand = |x: f64| sigma_hat(x * eps_scale) * drag_kernel(x, kin);
    let quad = integrate_panels(&integrand, &blackbody_panels(kin), cfg);

    let mu_gamma_sq = (kin.mu * kin.gamma) * (kin.mu * kin.gamma);
    let scale = BLACKBODY_PREFACTOR * theta4 / mu_gamma_sq;
    let f = -scale * quad.value;
    Ok(ForceEvaluation {
        f,
        q_factor: Some(f.abs() / (kin.mu * theta4)),
        method: ForceMethod::BlackbodyReduced,
        error_estimate: scale * quad.error_estimate,
        converged: quad.converged,
    })
}

/// Low-velocity drag factor Θ(θ) = (15/16π⁴)∫σ̂(xθ)·x⁴/sinh²(x/2) dx,
/// normalized so Θ(0) = 1; f → -μθ⁴Θ(θ) as μ → 0.
pub fn theta_factor(theta: f64, cfg: &QuadratureConfig) -> Result<QuadratureResult> {
    check_theta(theta)?;
    Ok(theta_factor_with(theta, &sigma_mt, cfg))
}

/// Θ(θ) with an arbitrary cross-section profile.
pub fn theta_factor_with(
    theta: f64,
    sigma_hat: &dyn Fn(f64) -> f64,
    cfg: &QuadratureConfig,
) -> QuadratureResult {
    let f = |x: f64| {
        if x == 0.0 {
            return 0.0;
        }
        let sh = (0.5 * x).sinh();
        sigma_hat(x * theta) * x.powi(4) / (sh * sh)
    };
    let edges = [0.0, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 80.0];
    let mut q = integrate_panels(&f, &edges, cfg);
    q.value *= THETA_PREFACTOR;
    q.error_estimate *= THETA_PREFACTOR;
    q
}

/// Dimensionless prefactor ħσ₀t_C/(2m₀c) of the general (physical-units)
/// force integrals.
fn general_prefactor() -> f64 {
    HBAR_ERG_S * SIGMA_THOMPSON_CM2 * COMPTON_TIME_S / (2.0 * ELECTRON_MASS_G * C_CM_S)
}

/// Inner-integral panel edges in η = 1 + cos ξ ∈ [0, 2]: decades of the
/// Doppler denominator (1-β) + βη, which concentrates everything near η = 0
/// when β → 1.
fn incidence_panels(kin: &ElectronKinematics) -> Vec<f64> {
    if kin.beta <= 0.5 {
        return vec![0.0, 0.5, 1.0, 1.5, 2.0];
    }
    let eta_star = kin.one_minus_beta / kin.beta;
    let mut edges = vec![0.0];
    let mut eta = 1e-3 * eta_star;
    while eta < 2.0 {
        edges.push(eta);
        eta *= 10.0;
    }
    edges.push(2.0);
    edges
}

/// Log-spaced outer panel edges covering [lo, hi], roughly one per decade.
fn log_panels(lo: f64, hi: f64) -> Vec<f64> {
    let decades = (hi / lo).log10().ceil().max(1.0) as usize;
    let step = (hi / lo).powf(1.0 / decades as f64);
    let mut edges = Vec::with_capacity(decades + 1);
    let mut x = lo;
    for _ in 0..decades {
        edges.push(x);
        x *= step;
    }
    edges.push(hi);
    edges
}

fn q_factor_for_spectrum(
    spec: &SpectrumModel,
    kin: &ElectronKinematics,
    f: f64,
    sigma_hat: &dyn Fn(f64) -> f64,
    cfg: &QuadratureConfig,
) -> Option<f64> {
    match spec {
        SpectrumModel::Planck(t) => {
            let theta4 = t.theta().powi(4);
            if kin.mu == 0.0 {
                Some(theta_factor_with(t.theta(), sigma_hat, cfg).value)
            } else {
                Some(f.abs() / (kin.mu * theta4))
            }
        }
        SpectrumModel::Tabulated(_) => None,
    }
}

/// General drag force for an arbitrary isotropic spectrum and cross-section:
/// outer integral over the rest-frame frequency ω (where σ̂ is evaluated),
/// inner over the incidence angle, with the spectrum boosted into the rest
/// frame.
pub fn force_general(
    kin: &ElectronKinematics,
    spec: &SpectrumModel,
    sigma_hat: &dyn Fn(f64) -> f64,
    cfg: &QuadratureConfig,
) -> Result<ForceEvaluation> {
    if kin.mu == 0.0 {
        // isotropy: the angular integrand is exactly odd
        return Ok(ForceEvaluation {
            f: 0.0,
            q_factor: q_factor_for_spectrum(spec, kin, 0.0, sigma_hat, cfg),
            method: ForceMethod::GeneralRestFrame,
            error_estimate: 0.0,
            converged: true,
        });
    }
    let (nu_lo, nu_hi) = spec.support();
    let boost = kin.gamma + kin.mu; // γ(1+β)
    let omega_lo = nu_lo / boost;
    let omega_hi = nu_hi * boost;

    let eta_edges = incidence_panels(kin);
    let inner_cfg = QuadratureConfig {
        rel_tol: 0.3 * cfg.rel_tol,
        max_evaluations: cfg.max_evaluations / 8,
        ..*cfg
    };
    let eps_per_omega = HBAR_ERG_S / crate::quantities::constants::ELECTRON_REST_ENERGY_ERG;

    let outer = |omega: f64| {
        let inner = |eta: f64| {
            let s = kin.one_minus_beta + kin.beta * eta;
            spec.density(omega * kin.gamma * s) * (eta - 1.0) / (s * s)
        };
        let angular = integrate_panels(&inner, &eta_edges, &inner_cfg).value;
        omega * sigma_hat(omega * eps_per_omega) / (kin.gamma * kin.gamma) * angular
    };
    let quad = integrate_panels(&outer, &log_panels(omega_lo, omega_hi), cfg);

    let f = general_prefactor() * quad.value;
    Ok(ForceEvaluation {
        f,
        q_factor: q_factor_for_spectrum(spec, kin, f, sigma_hat, cfg),
        method: ForceMethod::GeneralRestFrame,
        error_estimate: general_prefactor() * quad.error_estimate,
        converged: quad.converged,
    })
}

/// The same force with the integration order exchanged: outer integral over
/// the lab-frame frequency ν (where the spectrum is evaluated), inner over
/// the incidence angle with σ̂ inside.
pub fn force_general_alt(
    kin: &ElectronKinematics,
    spec: &SpectrumModel,
    sigma_hat: &dyn Fn(f64) -> f64,
    cfg: &QuadratureConfig,
) -> Result<ForceEvaluation> {
    if kin.mu == 0.0 {
        return Ok(ForceEvaluation {
            f: 0.0,
            q_factor: q_factor_for_spectrum(spec, kin, 0.0, sigma_hat, cfg),
            method: ForceMethod::GeneralLabFrame,
            error_estimate: 0.0,
            converged: true,
        });
    }
    let (nu_lo, nu_hi) = spec.support();
    let eta_edges = incidence_panels(kin);
    let inner_cfg = QuadratureConfig {
        rel_tol: 0.3 * cfg.rel_tol,
        max_evaluations: cfg.max_evaluations / 8,
        ..*cfg
    };
    let eps_per_omega = HBAR_ERG_S / crate::quantities::constants::ELECTRON_REST_ENERGY_ERG;
    let gamma4 = kin.gamma.powi(4);

    let outer = |nu: f64| {
        let eps_lab = nu * eps_per_omega;
        let inner = |eta: f64| {
            let s = kin.one_minus_beta + kin.beta * eta;
            sigma_hat(eps_lab / (kin.gamma * s)) * (eta - 1.0) / (s * s * s * s)
        };
        let angular = integrate_panels(&inner, &eta_edges, &inner_cfg).value;
        nu * spec.density(nu) / gamma4 * angular
    };
    let quad = integrate_panels(&outer, &log_panels(nu_lo, nu_hi), cfg);

    let f = general_prefactor() * quad.value;
    Ok(ForceEvaluation {
        f,
        q_factor: q_factor_for_spectrum(spec, kin, f, sigma_hat, cfg),
        method: ForceMethod::GeneralLabFrame,
        error_estimate: general_prefactor() * quad.error_estimate,
        converged: quad.converged,
    })
}

/// Evaluate the drag on a Planck bath by any method (the CLI entry point).
pub fn evaluate_planck(
    kin: &ElectronKinematics,
    theta: f64,
    method: ForceMethod,
    mode: SigmaMode,
    cfg: &QuadratureConfig,
) -> Result<ForceEvaluation> {
    match method {
        ForceMethod::Thompson => force_thompson(kin, theta),
        ForceMethod::Model => force_model(kin, theta),
        ForceMethod::BlackbodyReduced => force_blackbody(kin, theta, mode, cfg),
        ForceMethod::GeneralRestFrame => {
            let spec = SpectrumModel::planck(theta)?;
            force_general(kin, &spec, &|eps| mode.sigma_hat(eps), cfg)
        }
        ForceMethod::GeneralLabFrame => {
            let spec = SpectrumModel::planck(theta)?;
            force_general_alt(kin, &spec, &|eps| mode.sigma_hat(eps), cfg)
        }
    }
}
