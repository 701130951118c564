//! The low-velocity drag factor Θ(θ): f → -μθ⁴Θ(θ) as μ → 0, with Θ(0) = 1
//! and Klein-Nishina suppression at high bath temperature. The analytic
//! approximation ln(1+qθ)/qθ is printed alongside for comparison.
//!
//! Run with: cargo run --release --example theta_factor_curve

use comptondrag::force::theta_factor;
use comptondrag::numerics::QuadratureConfig;
use comptondrag::quantities::constants::COMPTON_Q;

fn main() {
    let cfg = QuadratureConfig::default();
    println!("theta,theta_factor,model_ln_form,ratio");
    let n = 41;
    for i in 0..n {
        let theta = 10f64.powf(-4.0 + 8.0 * i as f64 / (n - 1) as f64);
        let numeric = theta_factor(theta, &cfg).unwrap().value;
        let model = (COMPTON_Q * theta).ln_1p() / (COMPTON_Q * theta);
        println!(
            "{:.4e},{:.8e},{:.8e},{:.4}",
            theta,
            numeric,
            model,
            model / numeric
        );
    }
}
