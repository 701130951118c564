//! Quantum efficiency of inverse-Compton backscatter: the fraction of the
//! electron energy handed to the photon, η = ε_sc/γ → [1 + (4γε_in)⁻¹]⁻¹,
//! crossing from η ≈ 4γε_in ≪ 1 to η ≈ 1 in the deep Klein-Nishina regime.
//!
//! Run with: cargo run --release --example ics_efficiency

use comptondrag::quantities::ElectronKinematics;
use comptondrag::scenarios::ics_max_energy;

fn main() {
    let eps_in = 1e-5; // ~5 eV photon
    println!("mu,gamma,four_gamma_eps,eps_sc_max,eta");
    for i in 0..=48 {
        let mu = 10f64.powf(1.0 + 8.0 * f64::from(i) / 48.0);
        let kin = ElectronKinematics::from_mu(mu).unwrap();
        let ev = ics_max_energy(eps_in, &kin).unwrap();
        println!(
            "{:.4e},{:.4e},{:.4e},{:.4e},{:.6}",
            ev.mu,
            ev.gamma,
            4.0 * ev.gamma * eps_in,
            ev.eps_sc_max,
            ev.eta
        );
    }
}
