//! Deviation map of the analytic drag model f_M = -μθ³ln(1+qθγ)/q against
//! the full blackbody quadrature, over a log grid in (μ, θ).
//!
//! Run with: cargo run --release --example model_fit_quality

use comptondrag::force::{force_blackbody, force_model};
use comptondrag::numerics::QuadratureConfig;
use comptondrag::quantities::ElectronKinematics;
use comptondrag::xsection::SigmaMode;

fn main() {
    let cfg = QuadratureConfig::with_rel_tol(1e-9);
    let n = 7;
    println!("# rows: mu, columns: theta; entries f_model/f_numeric - 1");
    print!("{:>10}", "mu\\theta");
    let thetas: Vec<f64> = (0..n)
        .map(|j| 10f64.powf(-6.0 + 8.0 * j as f64 / (n - 1) as f64))
        .collect();
    let mus: Vec<f64> = (0..n)
        .map(|i| 10f64.powf(-2.0 + 12.0 * i as f64 / (n - 1) as f64))
        .collect();
    for th in &thetas {
        print!("{:>10.2e}", th);
    }
    println!();
    let mut worst_out: (f64, f64, f64) = (0.0, 0.0, 0.0);
    let mut worst_in: (f64, f64, f64) = (0.0, 0.0, 0.0);
    for &mu in &mus {
        let kin = ElectronKinematics::from_mu(mu).unwrap();
        print!("{:>10.2e}", mu);
        for &theta in &thetas {
            let num = force_blackbody(&kin, theta, SigmaMode::MomentumTransfer, &cfg).unwrap();
            let model = force_model(&kin, theta).unwrap();
            let dev = model.f / num.f - 1.0;
            let kc = kin.compton_factor(theta);
            if (0.3..=3.0).contains(&kc) {
                if dev.abs() > worst_in.0.abs() {
                    worst_in = (dev, mu, theta);
                }
            } else if dev.abs() > worst_out.0.abs() {
                worst_out = (dev, mu, theta);
            }
            print!("{:>10.1e}", dev);
        }
        println!();
    }
    println!(
        "worst |f_M/f - 1| with K_C inside [0.3, 3]: {:+.3} at mu={:.2e}, theta={:.2e}",
        worst_in.0, worst_in.1, worst_in.2
    );
    println!(
        "worst |f_M/f - 1| with K_C outside [0.3, 3]: {:+.3} at mu={:.2e}, theta={:.2e}",
        worst_out.0, worst_out.1, worst_out.2
    );
}
