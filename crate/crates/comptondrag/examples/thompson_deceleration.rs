//! Closed-form deceleration of an electron in a cool photon bath:
//! μ(τ) = 1/sinh(τθ⁴ + asinh(1/μ₀)), exponential at small μ and 1/τ in the
//! relativistic stretch, with the physical time scales attached.
//!
//! Run with: cargo run --release --example thompson_deceleration

use comptondrag::force::thompson_trajectory;
use comptondrag::quantities::constants::{COMPTON_TIME_S, KELVIN_PER_THETA};

fn main() {
    let theta = 1e8 / KELVIN_PER_THETA; // a 1e8 K bath
    let mu0 = 1.0;
    eprintln!("bath: T = 1e8 K, theta = {theta:.3e}; decay scale t_C/theta^4 = {:.3e} s",
        COMPTON_TIME_S / theta.powi(4));
    println!("tau,t_seconds,mu");
    for i in 0..=40 {
        let tau = 5.0 / theta.powi(4) * f64::from(i) / 40.0;
        let p = thompson_trajectory(mu0, theta, tau).unwrap();
        println!("{:.6e},{:.6e},{:.6e}", p.tau, p.tau * COMPTON_TIME_S, p.mu);
    }
}
