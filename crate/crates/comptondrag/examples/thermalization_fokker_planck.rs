//! A non-relativistic Maxwellian injected hotter than the bath relaxes with
//! the Thompson rate 1/τ_rlx = 2θ_eq⁴: the solver's fitted effective
//! temperature follows θ_eq + (θ_in - θ_eq)e^{-τ/τ_rlx} and the distribution
//! stays Gaussian throughout.
//!
//! Run with: cargo run --release --example thermalization_fokker_planck

use comptondrag::force::force_thompson;
use comptondrag::kinetics::{
    fit_effective_temperature, relaxation_rate_thompson, DistributionGrid, FokkerPlanckOptions,
    FokkerPlanckSolver,
};
use comptondrag::quantities::ElectronKinematics;

fn main() {
    let (theta_eq, theta_in) = (1e-2, 2e-2);
    let tau_rlx = relaxation_rate_thompson(theta_eq).unwrap().tau_rlx;
    let mut grid = DistributionGrid::log_spaced(1e-4, 10.0, 400).unwrap();
    grid.fill_maxwell_boltzmann(theta_in);

    let force = |mu: f64, th: f64| {
        force_thompson(&ElectronKinematics::from_mu(mu).unwrap(), th)
            .unwrap()
            .f
    };
    let opts = FokkerPlanckOptions {
        dt_max: Some(tau_rlx / 100.0),
        ..FokkerPlanckOptions::default()
    };
    let mut solver = FokkerPlanckSolver::new(&grid, theta_eq, force, opts).unwrap();

    println!("tau_over_tau_rlx,theta_eff,theta_predicted,excess_kurtosis,total");
    for k in 0..=16 {
        let tau = 2.0 * tau_rlx * f64::from(k) / 16.0;
        solver.evolve_to(tau).unwrap();
        let snap = solver.grid();
        let fit = fit_effective_temperature(&snap).unwrap();
        let predicted = theta_eq + (theta_in - theta_eq) * (-tau / tau_rlx).exp();
        println!(
            "{:.3},{:.6e},{:.6e},{:.2e},{:.8}",
            tau / tau_rlx,
            fit.theta,
            predicted,
            snap.excess_kurtosis_isotropic(),
            snap.total()
        );
    }
}
