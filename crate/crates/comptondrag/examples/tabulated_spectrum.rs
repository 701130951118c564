//! Drag under a user-tabulated spectrum: sample the Planck density into the
//! CSV interchange format, load it back, and check the general force
//! integral against the analytic blackbody route.
//!
//! Run with: cargo run --release --example tabulated_spectrum

use comptondrag::force::{force_blackbody, force_general};
use comptondrag::numerics::QuadratureConfig;
use comptondrag::quantities::constants::{ELECTRON_REST_ENERGY_ERG, HBAR_ERG_S};
use comptondrag::quantities::{planck_density, RadiationTemperature};
use comptondrag::quantities::{ElectronKinematics, SpectrumModel, TabulatedSpectrum};
use comptondrag::xsection::{sigma_mt, SigmaMode};
use std::io::Write;

fn main() {
    let theta = 0.05;
    let bath = RadiationTemperature::from_theta(theta).unwrap();
    let scale = theta * ELECTRON_REST_ENERGY_ERG / HBAR_ERG_S; // k_B T / ħ

    // write the CSV interchange format, then load it back
    // modest sampling: every knot of the piecewise power-law interpolation
    // is a kink the adaptive quadrature must resolve
    let mut csv = Vec::new();
    writeln!(csv, "omega_rad_per_s,rho_per_cm3_per_rad_s").unwrap();
    let n = 240;
    for i in 0..n {
        let x = 10f64.powf(-4.0 + 6.3 * i as f64 / (n - 1) as f64); // ħω/k_BT
        let omega = x * scale;
        writeln!(csv, "{:.12e},{:.12e}", omega, planck_density(&bath, omega)).unwrap();
    }
    let path = std::env::temp_dir().join("comptondrag-example-spectrum.csv");
    std::fs::write(&path, &csv).unwrap();
    let table = TabulatedSpectrum::from_csv_path(&path).unwrap();
    std::fs::remove_file(&path).ok();
    let spec = SpectrumModel::Tabulated(table);

    let cfg = QuadratureConfig::with_rel_tol(1e-6);
    println!("mu,f_tabulated,f_planck,ratio");
    for &mu in &[0.5, 2.0] {
        let kin = ElectronKinematics::from_mu(mu).unwrap();
        let tab = force_general(&kin, &spec, &sigma_mt, &cfg).unwrap();
        let planck = force_blackbody(&kin, theta, SigmaMode::MomentumTransfer, &cfg).unwrap();
        println!(
            "{mu},{:.8e},{:.8e},{:.6}",
            tab.f,
            planck.f,
            tab.f / planck.f
        );
    }
    eprintln!("(the residual ratio error is the sampling truncation of the tabulated spectrum)");
}
