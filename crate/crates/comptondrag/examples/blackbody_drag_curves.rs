//! QED/relativistic drag factor Q = |f|/μθ⁴ against momentum for three bath
//! temperatures: Q equals γ while the Compton factor K_C = qθγ is small and
//! flattens to logarithmic growth deep in the Klein-Nishina regime.
//!
//! Run with: cargo run --release --example blackbody_drag_curves

use comptondrag::force::force_blackbody;
use comptondrag::numerics::QuadratureConfig;
use comptondrag::quantities::constants::THETA_CMB;
use comptondrag::quantities::ElectronKinematics;
use comptondrag::xsection::SigmaMode;

fn main() {
    let cfg = QuadratureConfig::with_rel_tol(1e-8);
    println!("theta,mu,gamma,compton_factor,f,q_factor");
    for &theta in &[THETA_CMB, 1e-3, 1e6] {
        let n = 37;
        for i in 0..n {
            let mu = 10f64.powf(12.0 * i as f64 / (n - 1) as f64);
            let kin = ElectronKinematics::from_mu(mu).unwrap();
            let ev = force_blackbody(&kin, theta, SigmaMode::MomentumTransfer, &cfg).unwrap();
            println!(
                "{:.3e},{:.6e},{:.6e},{:.3e},{:.6e},{:.6e}",
                theta,
                mu,
                kin.gamma,
                kin.compton_factor(theta),
                ev.f,
                ev.q_factor.unwrap()
            );
        }
    }
}
