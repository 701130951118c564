//! Far-from-equilibrium transport by characteristics: a hot relativistic
//! population dropped into a cold bath piles up near the Compton threshold
//! μ ~ 1/qθ, where the drag collapses and the spectrum freezes — the drift
//! narrows an initially broad distribution into a sharp spectral feature.
//!
//! Run with: cargo run --release --example frozen_nonequilibrium

use comptondrag::force::force_model;
use comptondrag::kinetics::{characteristics_solve, mj_density};
use comptondrag::numerics::QuadratureConfig;
use comptondrag::quantities::ElectronKinematics;

fn main() {
    let theta_eq = 1e-3; // cold bath
    let theta_in = 30.0; // hot initial Maxwell-Jüttner population
    let cfg = QuadratureConfig::with_rel_tol(1e-9);
    let drift = |mu: f64| {
        force_model(&ElectronKinematics::from_mu(mu).unwrap(), theta_eq)
            .unwrap()
            .f
    };
    let initial = |mu: f64| mj_density(mu, theta_in);

    let n = 160;
    let grid: Vec<f64> = (0..n)
        .map(|i| 10f64.powf(-1.0 + 4.5 * i as f64 / (n - 1) as f64))
        .collect();

    print!("mu");
    let taus = [0.0, 1e9, 1e10, 5e10];
    for tau in taus {
        print!(",rho_tau_{tau:.0e}");
    }
    println!();
    let snapshots: Vec<Vec<f64>> = taus
        .iter()
        .map(|&tau| characteristics_solve(&initial, &drift, tau, &grid, &cfg).unwrap())
        .collect();
    for (i, &mu) in grid.iter().enumerate() {
        print!("{mu:.5e}");
        for snap in &snapshots {
            print!(",{:.5e}", snap[i]);
        }
        println!();
    }
    eprintln!(
        "note: by tau = {:.0e} everything above the Compton threshold mu ~ 1/(q theta) = {:.0} has \
         drained into a sharp pile-up in the slow Thompson region, while mu < 1 has not moved: \
         a frozen non-equilibrium spectrum with a narrow line",
        taus[3],
        1.0 / (10.0 * theta_eq)
    );
}
