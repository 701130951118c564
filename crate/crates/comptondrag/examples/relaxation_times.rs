//! Electron thermalization times across regimes: the Thompson 1/2θ⁴ law,
//! the general logarithmic rate, and the hot near-equilibrium form, in
//! dimensionless and physical units.
//!
//! Run with: cargo run --release --example relaxation_times

use comptondrag::kinetics::{relaxation_rate, relaxation_rate_hot, relaxation_rate_thompson};
use comptondrag::quantities::constants::ELECTRON_REST_ENERGY_EV;

fn main() {
    println!("case,theta_eq,gamma_in,compton_factor,tau_rlx,t_rlx_seconds,regime");
    let rows = [
        ("thompson-1300K", relaxation_rate_thompson(2.192e-7).unwrap()),
        ("threshold", relaxation_rate(0.1, 1.0).unwrap()),
        ("fusion-thermal", relaxation_rate(1.7, 1.0).unwrap()),
        (
            "fusion-50MeV-beam",
            relaxation_rate(1.7, 50.0e6 / ELECTRON_REST_ENERGY_EV).unwrap(),
        ),
        ("fusion-hot-eq", relaxation_rate_hot(1.7, 1.7).unwrap()),
    ];
    for (name, r) in rows {
        println!(
            "{name},{:.4e},{:.4},{:.4e},{:.4e},{:.4e},{}",
            r.theta_eq,
            r.gamma_in,
            r.compton_factor,
            r.tau_rlx,
            r.t_rlx_seconds,
            r.regime.label()
        );
    }
}
