//! Numerical substrate: adaptive quadrature and the special functions needed
//! by the force and kinetics modules (dilogarithm, modified Bessel K₂).

mod bessel;
mod dilog;
mod quad;

pub use bessel::bessel_k2_scaled;
pub use dilog::{dilog, dilog_exp_neg, ln_one_minus_exp_neg, PI2_OVER_6};
pub use quad::{
    golden_section_max, integrate_finite, integrate_panels, integrate_semi_infinite,
    QuadratureConfig, QuadratureResult,
};
