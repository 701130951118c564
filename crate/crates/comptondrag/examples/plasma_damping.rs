//! Light-pressure damping of plasma oscillations: below the critical density
//! N_cr = (m₀/πe²)/(t_C·τ_rlx)² the drag beats the plasma frequency and
//! collective oscillations are extinguished — the fusion-temperature bath
//! out-damps any realizable laboratory density.
//!
//! Run with: cargo run --release --example plasma_damping

use comptondrag::kinetics::{relaxation_rate_hot, relaxation_rate_thompson};
use comptondrag::quantities::constants::KELVIN_PER_THETA;
use comptondrag::scenarios::assess_plasma;

fn main() {
    println!("case,theta_eq,tau_rlx,n_cr_cm3,omega_dmp_per_s,n_e_cm3,damped");
    let cases = [
        ("fusion-1e10K", relaxation_rate_hot(1.7, 1.7).unwrap(), 1e24),
        (
            "hot-star-1e9K",
            relaxation_rate_thompson(1e9 / KELVIN_PER_THETA).unwrap(),
            1e19,
        ),
        (
            "lab-plasma-1e8K",
            relaxation_rate_thompson(1e8 / KELVIN_PER_THETA).unwrap(),
            1e19,
        ),
    ];
    for (name, rate, ne) in cases {
        let a = assess_plasma(rate.tau_rlx, Some(ne), 0.1).unwrap();
        println!(
            "{name},{:.3e},{:.3e},{:.3e},{:.3e},{:.1e},{}",
            rate.theta_eq,
            a.tau_rlx,
            a.n_cr_cm3,
            a.omega_dmp_per_s,
            ne,
            if a.damped.unwrap() { "yes" } else { "no" }
        );
    }
}
