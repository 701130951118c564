//! Shared vocabulary of the problem: physical constants, dimensionless
//! conversions, electron kinematics, the Doppler transform, and photon
//! spectra (Planck or tabulated) with their rest-frame transformation.

pub mod constants;
mod kinematics;
mod spectrum;

pub use constants::PhysicalConstants;
pub use kinematics::{compton_factor_from_gamma, doppler, ElectronKinematics};
pub use spectrum::{
    planck_density, transformed_spectrum, RadiationTemperature, SpectrumModel, TabulatedSpectrum,
};
