//! Physical constants (CGS) and the derived scales of the problem.
//!
//! Primaries are CODATA values to 9-10 significant digits; everything else is
//! derived from them in one place so cross-module identities (σ₀ = 8πr₀²/3,
//! the Compton time normalization, W_C) hold to floating-point accuracy.

use std::f64::consts::PI;

/// Speed of light, cm/s (exact).
pub const C_CM_S: f64 = 2.997_924_58e10;
/// Reduced Planck constant, erg·s.
pub const HBAR_ERG_S: f64 = 1.054_571_817e-27;
/// Electron-volt in erg (exact).
pub const EV_ERG: f64 = 1.602_176_634e-12;
/// Boltzmann constant, erg/K (exact).
pub const BOLTZMANN_ERG_K: f64 = 1.380_649e-16;
/// Fine-structure constant α.
pub const FINE_STRUCTURE: f64 = 7.297_352_57e-3;
/// Elementary charge, esu.
pub const ELEMENTARY_CHARGE_ESU: f64 = 4.803_204_71e-10;
/// Electron rest energy m₀c², eV.
pub const ELECTRON_REST_ENERGY_EV: f64 = 510_998.95;
/// Planck temperature, K.
pub const PLANCK_TEMPERATURE_K: f64 = 1.416_784e32;

/// Electron rest energy m₀c², erg.
pub const ELECTRON_REST_ENERGY_ERG: f64 = ELECTRON_REST_ENERGY_EV * EV_ERG;
/// Electron mass, g.
pub const ELECTRON_MASS_G: f64 = ELECTRON_REST_ENERGY_ERG / (C_CM_S * C_CM_S);
/// Reduced Compton wavelength ħ/m₀c, cm.
pub const REDUCED_COMPTON_CM: f64 = HBAR_ERG_S * C_CM_S / ELECTRON_REST_ENERGY_ERG;
/// Compton wavelength λ_C = 2πħ/m₀c, cm.
pub const COMPTON_WAVELENGTH_CM: f64 = 2.0 * PI * REDUCED_COMPTON_CM;
/// Classical electron radius r₀ = e²/m₀c² = α·ħ/m₀c, cm.
pub const CLASSICAL_RADIUS_CM: f64 = FINE_STRUCTURE * REDUCED_COMPTON_CM;
/// Thompson cross-section σ₀ = (8π/3)r₀², cm².
pub const SIGMA_THOMPSON_CM2: f64 = 8.0 * PI / 3.0 * CLASSICAL_RADIUS_CM * CLASSICAL_RADIUS_CM;
/// Compton time scale t_C = 135·λ_C/(64π⁴α²c), s — the unit of dimensionless
/// time τ = t/t_C; it is exactly the normalization that turns the Thompson
/// drag into f = -θ⁴μγ.
pub const COMPTON_TIME_S: f64 = 135.0 * COMPTON_WAVELENGTH_CM
    / (64.0 * PI * PI * PI * PI * FINE_STRUCTURE * FINE_STRUCTURE * C_CM_S);
/// Compton energy density W_C = m₀c²/λ_C³, erg/cm³.
pub const COMPTON_ENERGY_DENSITY_ERG_CM3: f64 = ELECTRON_REST_ENERGY_ERG
    / (COMPTON_WAVELENGTH_CM * COMPTON_WAVELENGTH_CM * COMPTON_WAVELENGTH_CM);
/// Kelvin per unit of dimensionless temperature: T = θ · m₀c²/k_B.
pub const KELVIN_PER_THETA: f64 = ELECTRON_REST_ENERGY_ERG / BOLTZMANN_ERG_K;
/// Dimensionless momentum at the Planck temperature, μ_Pl ≈ 2.4e22.
pub const MU_PLANCK: f64 = PLANCK_TEMPERATURE_K / KELVIN_PER_THETA;

/// Dimensionless temperature of the present-day cosmic microwave background.
pub const THETA_CMB: f64 = 0.534e-9;
/// Age of the universe, s.
pub const AGE_OF_UNIVERSE_S: f64 = 4.4e17;

/// Fitting constant q in the Compton factor K_C = qθγ and the analytic force
/// model.
pub const COMPTON_Q: f64 = 10.0;

/// Snapshot of the derived constants (one struct for serialization and
/// reporting; the `const` items above are the source of truth).
#[derive(Debug, Clone, Copy)]
pub struct PhysicalConstants {
    pub alpha: f64,
    pub r0_cm: f64,
    pub sigma0_cm2: f64,
    pub lambda_c_cm: f64,
    pub t_c_s: f64,
    pub w_c_erg_cm3: f64,
    pub mu_planck: f64,
    pub electron_rest_energy_ev: f64,
}

impl PhysicalConstants {
    pub const fn table() -> Self {
        PhysicalConstants {
            alpha: FINE_STRUCTURE,
            r0_cm: CLASSICAL_RADIUS_CM,
            sigma0_cm2: SIGMA_THOMPSON_CM2,
            lambda_c_cm: COMPTON_WAVELENGTH_CM,
            t_c_s: COMPTON_TIME_S,
            w_c_erg_cm3: COMPTON_ENERGY_DENSITY_ERG_CM3,
            mu_planck: MU_PLANCK,
            electron_rest_energy_ev: ELECTRON_REST_ENERGY_EV,
        }
    }
}
