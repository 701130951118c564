//! Radiation-pressure drag on free electrons immersed in isotropic radiation,
//! from the classical (Thompson) regime to the QED (Klein-Nishina) regime,
//! together with the relativistic Fokker-Planck kinetics of electron
//! thermalization in a blackbody photon bath.
//!
//! The library works internally in dimensionless variables throughout:
//! momentum μ = p/m₀c, temperature θ = k_B·T/m₀c², photon energy ε = ħω/m₀c²,
//! time τ = t/t_C and force f = dμ/dτ. Conversions to seconds, Kelvin, eV and
//! cm⁻³ happen only at API boundaries (`quantities::constants`, `scenarios`,
//! the CLI).
//!
//! Module map:
//!
//! * [`quantities`] — constants, electron kinematics, Doppler transform,
//!   Planck and tabulated photon spectra.
//! * [`numerics`] — adaptive Gauss-Kronrod quadrature, dilogarithm, modified
//!   Bessel K₂ (scaled).
//! * [`xsection`] — Compton energy ratio, Klein-Nishina differential/total
//!   cross-sections, the projection term σ_R and the momentum-transfer
//!   cross-section σ_MT.
//! * [`force`] — the drag force on an electron: general spectrum integrals,
//!   the reduced blackbody (dilogarithm) form, the Thompson limit with its
//!   closed-form trajectory, the low-velocity factor Θ(θ) and the analytic
//!   fit model.
//! * [`kinetics`] — Maxwell-Jüttner / Maxwell-Boltzmann equilibria,
//!   relaxation rates, a conservative positivity-preserving Fokker-Planck
//!   solver and the exact method-of-characteristics transport solution.
//! * [`scenarios`] — plasma-damping critical density, inverse-Compton maximum
//!   energy/efficiency and the named worked-example table.
//! * [`cli`] — the `comptondrag` command-line front-end (CSV/JSON emission).
//!
//! Each major capability also ships as a runnable example; see `examples/`
//! and the README.

// Domain guards are written as `!(x > 0.0)` on purpose: the negation is what
// catches NaN. Tabulated rule constants keep their full published digits.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![allow(clippy::excessive_precision)]

pub mod cli;
pub mod force;
pub mod kinetics;
pub mod numerics;
pub mod quantities;
pub mod scenarios;
pub mod xsection;

mod error;

pub use error::{Error, Result};
pub use force::{ForceEvaluation, ForceMethod, TrajectoryPoint};
pub use kinetics::{DistributionGrid, RelaxationReport};
pub use quantities::{ElectronKinematics, RadiationTemperature, SpectrumModel};
pub use xsection::{CrossSectionTriple, SigmaMode};
