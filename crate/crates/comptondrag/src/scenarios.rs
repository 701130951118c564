//! Headline derived quantities and the worked-example table: plasma-damping
//! critical density, inverse-Compton maximum energy and quantum efficiency,
//! and the named physical scenarios spanning the CMB to nuclear-fusion
//! conditions.

use serde::Serialize;

use crate::kinetics::{
    relaxation_rate, relaxation_rate_hot, relaxation_rate_thompson, trajectory_time_scale,
    RelaxationReport,
};
use crate::quantities::constants::{
    AGE_OF_UNIVERSE_S, COMPTON_TIME_S, ELECTRON_MASS_G, ELECTRON_REST_ENERGY_EV,
    ELEMENTARY_CHARGE_ESU, KELVIN_PER_THETA, THETA_CMB,
};
use crate::quantities::ElectronKinematics;
use crate::{Error, Result};

/// Verdict on light-pressure damping of plasma oscillations at a given
/// relaxation time.
#[derive(Debug, Clone, Copy)]
pub struct PlasmaAssessment {
    /// Critical electron number density, cm⁻³: below it the drag out-damps
    /// the plasma oscillation.
    pub n_cr_cm3: f64,
    /// Dimensionless relaxation time used.
    pub tau_rlx: f64,
    /// Damping frequency bound t_rlx⁻¹, s⁻¹.
    pub omega_dmp_per_s: f64,
    /// The density that was assessed, if any.
    pub n_e_cm3: Option<f64>,
    /// N_e below `threshold_ratio`·N_cr counts as strongly damped.
    pub damped: Option<bool>,
    pub threshold_ratio: f64,
}

/// Default reading of "N_e ≪ N_cr".
pub const DAMPED_THRESHOLD_RATIO: f64 = 0.1;

/// Critical density N_cr = (m₀/πe²)/(t_C·τ_rlx)², i.e. the density whose
/// plasma frequency equals the damping rate (up to the rough-approximation
/// prefactor).
pub fn critical_density(tau_rlx: f64) -> Result<PlasmaAssessment> {
    assess_plasma(tau_rlx, None, DAMPED_THRESHOLD_RATIO)
}

/// Critical density plus a damping verdict for an actual electron density.
pub fn assess_plasma(
    tau_rlx: f64,
    n_e_cm3: Option<f64>,
    threshold_ratio: f64,
) -> Result<PlasmaAssessment> {
    if !(tau_rlx > 0.0) || !tau_rlx.is_finite() {
        return Err(Error::Domain(format!(
            "relaxation time must be positive, got {tau_rlx}"
        )));
    }
    let t_rlx = tau_rlx * COMPTON_TIME_S;
    let n_cr = ELECTRON_MASS_G
        / (std::f64::consts::PI * ELEMENTARY_CHARGE_ESU * ELEMENTARY_CHARGE_ESU)
        / (t_rlx * t_rlx);
    Ok(PlasmaAssessment {
        n_cr_cm3: n_cr,
        tau_rlx,
        omega_dmp_per_s: 1.0 / t_rlx,
        n_e_cm3,
        damped: n_e_cm3.map(|ne| ne < threshold_ratio * n_cr),
        threshold_ratio,
    })
}

/// One inverse-Compton backscatter event at the kinematic maximum.
#[derive(Debug, Clone, Copy)]
pub struct ICSEvent {
    /// Incident photon energy ε_in = ħω/m₀c².
    pub eps_in: f64,
    pub mu: f64,
    pub gamma: f64,
    /// Maximum scattered photon energy in the lab frame,
    /// ε_sc = ε_in(γ+μ)/(γ-μ+2ε_in).
    pub eps_sc_max: f64,
    /// Quantum efficiency η = ε_sc/γ ∈ (0, 1).
    pub eta: f64,
}

/// Kinematic maximum of the scattered photon energy (exact head-on
/// backscatter), with γ-μ evaluated as 1/(γ+μ).
pub fn ics_max_energy(eps_in: f64, kin: &ElectronKinematics) -> Result<ICSEvent> {
    if !(eps_in > 0.0) || !eps_in.is_finite() {
        return Err(Error::Domain(format!(
            "incident photon energy must be positive, got {eps_in}"
        )));
    }
    let boost = kin.gamma + kin.mu;
    let eps_sc = eps_in * boost / (1.0 / boost + 2.0 * eps_in);
    Ok(ICSEvent {
        eps_in,
        mu: kin.mu,
        gamma: kin.gamma,
        eps_sc_max: eps_sc,
        eta: eps_sc / kin.gamma,
    })
}

/// A named worked example.
#[derive(Debug, Clone, Serialize)]
pub struct Scenario {
    pub name: &'static str,
    pub t_kelvin: f64,
    pub theta: f64,
    pub gamma_in: f64,
    pub compton_factor: f64,
    pub tau_rlx: f64,
    pub t_rlx_seconds: f64,
    pub rate_formula: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_cr_cm3: Option<f64>,
}

fn scenario(name: &'static str, report: &RelaxationReport, n_cr: Option<f64>) -> Scenario {
    Scenario {
        name,
        t_kelvin: report.theta_eq * KELVIN_PER_THETA,
        theta: report.theta_eq,
        gamma_in: report.gamma_in,
        compton_factor: report.compton_factor,
        tau_rlx: report.tau_rlx,
        t_rlx_seconds: report.t_rlx_seconds,
        rate_formula: report.formula.label(),
        n_cr_cm3: n_cr,
    }
}

/// The worked examples as a reproducible table: a pure function of the
/// constants table, bit-stable across runs.
pub fn scenario_table() -> Vec<Scenario> {
    let mut rows = Vec::new();

    // Present-day CMB: thermalization slower than the age of the universe
    // by ~1e2 (on the deceleration-trajectory scale).
    rows.push(scenario(
        "cmb-today",
        &trajectory_time_scale(THETA_CMB, 1.0).expect("valid"),
        None,
    ));

    // An easily lab-accessible 1300 K bath.
    rows.push(scenario(
        "lab-1300k",
        &relaxation_rate_thompson(1300.0 / KELVIN_PER_THETA).expect("valid"),
        None,
    ));

    // The Compton threshold K_C = 1 at θ = 0.1.
    rows.push(scenario(
        "compton-threshold",
        &relaxation_rate(0.1, 1.0).expect("valid"),
        None,
    ));

    // Controlled-fusion bath T = 1e10 K, thermal electrons; near-equilibrium
    // damping wipes out plasma oscillations below N_cr.
    {
        let theta = 1e10 / KELVIN_PER_THETA;
        let report = relaxation_rate(theta, 1.0).expect("valid");
        let hot = relaxation_rate_hot(theta, theta).expect("valid");
        let n_cr = critical_density(hot.tau_rlx).expect("valid").n_cr_cm3;
        rows.push(scenario("fusion-1e10k", &report, Some(n_cr)));
    }

    // T = 1e8 K: the Thompson deceleration scale (~40 ps).
    rows.push(scenario(
        "thompson-1e8k",
        &trajectory_time_scale(1e8 / KELVIN_PER_THETA, 1.0).expect("valid"),
        None,
    ));

    // A 50 MeV diagnostic beam in the fusion bath: K_C ≈ 1700, sub-as decay.
    {
        let gamma_in = 50.0e6 / ELECTRON_REST_ENERGY_EV;
        let report = relaxation_rate(1.7, gamma_in).expect("valid");
        rows.push(scenario("beam-50mev-fusion", &report, None));
    }

    rows
}

/// t_rlx of the CMB row in units of the age of the universe.
pub fn cmb_age_ratio() -> f64 {
    let row = &scenario_table()[0];
    row.t_rlx_seconds / AGE_OF_UNIVERSE_S
}
