//! Modified Bessel function K₂ in exponentially scaled form eˣ·K₂(x).
//!
//! The scaled form survives x ≫ 1 (K₂ alone underflows past x ≈ 700), which
//! is what the Maxwell-Jüttner normalization θ·K₂(1/θ) needs at θ ≪ 1.
//!
//! Two independent routes: below x = 2 the standard small-argument series
//! (closed part + ln·I₂ part + digamma series); above, the integral
//! representation
//!
//!   eˣ K₂(x) = √(π/2x) / Γ(5/2) · ∫₀^∞ e⁻ᵗ t^{3/2} (1 + t/2x)^{3/2} dt
//!
//! evaluated with the crate's own quadrature. The unit tests check both
//! against a third route (K₀/K₁ rational approximations plus the recurrence
//! K₂ = K₀ + 2K₁/x).

use super::quad::{integrate_semi_infinite, QuadratureConfig};
use crate::{Error, Result};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
/// Γ(5/2) = 3√π/4.
const GAMMA_5_2: f64 = 1.329_340_388_179_137;

/// eˣ·K₂(x) for x > 0.
pub fn bessel_k2_scaled(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!(
            "bessel_k2_scaled requires x > 0, got {x}"
        )));
    }
    if x < 2.0 {
        Ok(x.exp() * k2_series(x))
    } else {
        Ok(k2_scaled_integral(x))
    }
}

/// Small-argument series for K₂ itself (unscaled; x < 2 so eˣ is harmless).
fn k2_series(x: f64) -> f64 {
    let q = 0.25 * x * x;

    // Closed part: (1/2)(x/2)^{-2} Σ_{k=0}^{1} ((1-k)!/k!)(-q)^k = 2/x² - 1/2.
    let closed = 2.0 / (x * x) - 0.5;

    // I₂(x) = q Σ qᵏ/(k!(k+2)!) and the digamma-weighted companion series.
    let mut term = 0.5; // k = 0: 1/(0!·2!)
    let mut psi1 = -EULER_GAMMA; // ψ(1)
    let mut psi3 = -EULER_GAMMA + 1.5; // ψ(3)
    let mut i2_sum = term;
    let mut psi_sum = (psi1 + psi3) * term;
    let mut k = 0u32;
    loop {
        let kf = f64::from(k);
        term *= q / ((kf + 1.0) * (kf + 3.0));
        psi1 += 1.0 / (kf + 1.0);
        psi3 += 1.0 / (kf + 3.0);
        i2_sum += term;
        psi_sum += (psi1 + psi3) * term;
        k += 1;
        if term * (psi1 + psi3).abs() < 1e-18 * psi_sum.abs().max(1.0) || k > 60 {
            break;
        }
    }
    let i2 = q * i2_sum;
    closed - (0.5 * x).ln() * i2 + 0.5 * q * psi_sum
}

fn k2_scaled_integral(x: f64) -> f64 {
    let cfg = QuadratureConfig {
        rel_tol: 5e-14,
        max_evaluations: 200_000,
        ..QuadratureConfig::default()
    };
    let inv2x = 0.5 / x;
    let f = |t: f64| {
        if t <= 0.0 {
            0.0
        } else {
            (-t).exp() * t.powf(1.5) * (1.0 + t * inv2x).powf(1.5)
        }
    };
    let integral = integrate_semi_infinite(&f, 0.0, &cfg);
    (std::f64::consts::PI / (2.0 * x)).sqrt() / GAMMA_5_2 * integral.value
}
