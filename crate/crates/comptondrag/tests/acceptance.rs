//! Acceptance suite: one test per quantitative claim the crate is built to
//! reproduce, each printing a single PASS line (run with `-- --nocapture` to
//! see them; failures carry the full diagnostic).

use comptondrag::force::{
    evaluate_planck, force_blackbody, force_blackbody_with, force_model, force_thompson,
    theta_factor, thompson_trajectory, ForceMethod,
};
use comptondrag::kinetics::{
    characteristics_solve, fit_effective_temperature, relaxation_rate, relaxation_rate_hot,
    relaxation_rate_thompson, trajectory_time_scale, DistributionGrid, FokkerPlanckOptions,
    FokkerPlanckSolver,
};
use comptondrag::numerics::{golden_section_max, integrate_finite, QuadratureConfig};
use comptondrag::quantities::constants::{AGE_OF_UNIVERSE_S, ELECTRON_REST_ENERGY_EV, THETA_CMB};
use comptondrag::quantities::{ElectronKinematics, RadiationTemperature};
use comptondrag::scenarios::{critical_density, ics_max_energy};
use comptondrag::xsection::{compton_ratio, kn_total, sigma_mt, sigma_mt_oracle, sigma_r};
use comptondrag::SigmaMode;

fn kin(mu: f64) -> ElectronKinematics {
    ElectronKinematics::from_mu(mu).unwrap()
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

#[test]
fn criterion_01_cross_section_landmarks() {
    let (loc, val) = golden_section_max(&|e| sigma_r(e), 0.3, 0.9, 1e-12);
    assert!(
        (val - 0.1442).abs() <= 0.001,
        "σ_R peak value {val}, expected 0.1442 ± 0.001"
    );
    assert!(
        (loc - 0.543).abs() <= 0.01,
        "σ_R peak at ε = {loc}, expected 0.543 ± 0.01"
    );
    let kn = kn_total(loc);
    let mt = sigma_mt(loc);
    assert!((kn - 0.55).abs() <= 0.01, "σ_KN at the peak: {kn}");
    assert!((mt - 0.40).abs() <= 0.02, "σ_MT at the peak: {mt}");
    println!(
        "criterion 1 (cross-section landmarks): PASS — peak σ_R = {val:.4} at ε = {loc:.3}, σ_KN = {kn:.3}, σ_MT = {mt:.3}"
    );
}

#[test]
fn criterion_02_sigma_mt_closed_form_vs_oracle() {
    let cfg = QuadratureConfig::with_rel_tol(1e-12);
    let mut worst = 0.0f64;
    for i in 0..50 {
        let eps = 10f64.powf(-6.0 + 12.0 * i as f64 / 49.0);
        let oracle = sigma_mt_oracle(eps, &cfg);
        assert!(oracle.converged, "oracle quadrature at ε = {eps}");
        let err = rel(sigma_mt(eps), oracle.value);
        worst = worst.max(err);
        assert!(
            err <= 1e-8,
            "σ_MT closed form vs quadrature at ε = {eps}: rel {err:e}"
        );
    }
    println!("criterion 2 (σ_MT closed form vs oracle, 50 points): PASS — worst rel {worst:.2e}");
}

#[test]
fn criterion_03_asymptotics() {
    let cold_kn = rel(kn_total(1e-3), 1.0 - 2e-3);
    assert!(cold_kn <= 1e-4, "cold σ_KN deviation {cold_kn:e}");
    let cold_r = rel(sigma_r(1e-3), 1.2e-3);
    assert!(cold_r <= 0.02, "cold σ_R deviation {cold_r:e}");

    let eps = 1e4f64;
    let hot_kn = rel(kn_total(eps), 3.0 / (8.0 * eps) * ((2.0 * eps).ln() + 0.5));
    assert!(hot_kn <= 0.03, "hot σ_KN deviation {hot_kn:e}");
    let hot_r = rel(
        sigma_r(eps),
        0.5 / eps * (1.0 - 0.75 * (2.0 * eps).ln_1p() / eps),
    );
    assert!(hot_r <= 0.03, "hot σ_R deviation {hot_r:e}");
    println!(
        "criterion 3 (cold/hot asymptotics): PASS — cold {cold_kn:.1e}/{cold_r:.1e}, hot {hot_kn:.1e}/{hot_r:.1e}"
    );
}

#[test]
fn criterion_04_thompson_identity() {
    let cfg = QuadratureConfig::with_rel_tol(1e-9);
    let mut worst = 0.0f64;
    for &mu in &[0.1, 1.0, 10.0, 1e3] {
        for &theta in &[1e-6, 1e-2, 1.0] {
            let k = kin(mu);
            let got = force_blackbody_with(&k, theta, &|_| 1.0, &cfg).unwrap();
            assert!(got.converged);
            let err = rel(got.f, -theta.powi(4) * mu * k.gamma);
            worst = worst.max(err);
            assert!(
                err <= 1e-6,
                "constant-σ blackbody force at μ={mu}, θ={theta}: rel {err:e}"
            );
        }
    }
    println!("criterion 4 (Thompson identity, σ ≡ σ₀): PASS — worst rel {worst:.2e}");
}

#[test]
fn criterion_05_integral_form_equivalence() {
    let cfg = QuadratureConfig::with_rel_tol(1e-9);
    let mode = SigmaMode::MomentumTransfer;
    let mut worst = 0.0f64;
    let mut kc_lo = f64::INFINITY;
    let mut kc_hi = 0.0f64;
    for &mu in &[0.1, 1.0, 10.0, 100.0] {
        for &theta in &[1e-5, 1e-3, 0.1, 10.0] {
            let k = kin(mu);
            kc_lo = kc_lo.min(k.compton_factor(theta));
            kc_hi = kc_hi.max(k.compton_factor(theta));
            let a = evaluate_planck(&k, theta, ForceMethod::GeneralRestFrame, mode, &cfg).unwrap();
            let b = evaluate_planck(&k, theta, ForceMethod::GeneralLabFrame, mode, &cfg).unwrap();
            let c = evaluate_planck(&k, theta, ForceMethod::BlackbodyReduced, mode, &cfg).unwrap();
            assert!(a.converged && b.converged && c.converged, "μ={mu}, θ={theta}");
            for (x, y, what) in [
                (a.f, b.f, "rest vs lab"),
                (a.f, c.f, "rest vs reduced"),
                (b.f, c.f, "lab vs reduced"),
            ] {
                let err = rel(x, y);
                worst = worst.max(err);
                assert!(err <= 1e-6, "{what} at μ={mu}, θ={theta}: rel {err:e}");
            }
        }
    }
    assert!(kc_lo <= 1.1e-4 && kc_hi >= 1e4, "K_C span [{kc_lo:e}, {kc_hi:e}]");
    println!(
        "criterion 5 (three-route force equivalence, K_C ∈ [{kc_lo:.1e}, {kc_hi:.1e}]): PASS — worst pairwise rel {worst:.2e}"
    );
}

#[test]
fn criterion_06_analytic_model_fit() {
    // Θ(0) = 1 within 1e-4.
    let cfg = QuadratureConfig::with_rel_tol(1e-10);
    let th0 = theta_factor(1e-6, &cfg).unwrap().value;
    assert!((th0 - 1.0).abs() <= 1e-4, "Θ(θ→0) = {th0}");

    // |f_M/f_num - 1| on the 7x7 log grid: < 0.05 for K_C outside [0.3, 3],
    // < 0.20 inside.
    let cfg = QuadratureConfig::with_rel_tol(1e-7);
    let mut report = String::new();
    let mut failures = 0usize;
    let mut worst_in: (f64, f64, f64) = (0.0, 0.0, 0.0);
    let mut worst_out: (f64, f64, f64) = (0.0, 0.0, 0.0);
    for i in 0..7 {
        let mu = 10f64.powf(-2.0 + 12.0 * i as f64 / 6.0);
        let k = kin(mu);
        for j in 0..7 {
            let theta = 10f64.powf(-6.0 + 8.0 * j as f64 / 6.0);
            let num = force_blackbody(&k, theta, SigmaMode::MomentumTransfer, &cfg).unwrap();
            let model = force_model(&k, theta).unwrap();
            let dev = (model.f / num.f - 1.0).abs();
            let kc = k.compton_factor(theta);
            let in_band = (0.3..=3.0).contains(&kc);
            let bound = if in_band { 0.20 } else { 0.05 };
            if dev > bound {
                failures += 1;
                report.push_str(&format!(
                    "  μ={mu:9.2e} θ={theta:9.2e} K_C={kc:9.2e}: |f_M/f - 1| = {dev:.3} > {bound}\n"
                ));
            }
            if in_band && dev > worst_in.0 {
                worst_in = (dev, mu, theta);
            }
            if !in_band && dev > worst_out.0 {
                worst_out = (dev, mu, theta);
            }
        }
    }
    if failures == 0 {
        println!(
            "criterion 6 (analytic model fit): PASS — worst in-band {:.3}, out-of-band {:.3}",
            worst_in.0, worst_out.0
        );
    } else {
        println!("criterion 6 (analytic model fit): FAIL — {failures}/49 grid points out of bounds");
    }
    assert!(
        failures == 0,
        "\nanalytic model vs numeric blackbody force, {failures} of 49 points out of bounds \
         (worst in-band {:.3} at μ={:.2e}, θ={:.2e}; worst out-of-band {:.3} at μ={:.2e}, θ={:.2e}):\n{report}\
         The three numeric routes agree with each other to 1e-6 (criterion 5) and reduce exactly \
         to -θ⁴μγ for constant cross-section (criterion 4), so the gap is a property of the \
         fitted model itself in the transition region, not of the numerics.",
        worst_in.0, worst_in.1, worst_in.2, worst_out.0, worst_out.1, worst_out.2
    );
}

#[test]
fn criterion_07_q_factor_curves() {
    let cfg = QuadratureConfig::with_rel_tol(1e-7);
    let mut violations = String::new();
    for &theta in &[THETA_CMB, 1e-3, 1e6] {
        // 4 points per decade over μ ∈ [1, 1e12]
        let n = 49;
        let mus: Vec<f64> = (0..n)
            .map(|i| 10f64.powf(12.0 * i as f64 / (n - 1) as f64))
            .collect();
        let mut q = Vec::with_capacity(n);
        let mut kc = Vec::with_capacity(n);
        for &mu in &mus {
            let k = kin(mu);
            let ev = force_blackbody(&k, theta, SigmaMode::MomentumTransfer, &cfg).unwrap();
            assert!(ev.converged, "μ={mu}, θ={theta}");
            q.push(ev.q_factor.unwrap());
            kc.push(k.compton_factor(theta));
        }
        // monotone non-decreasing (up to quadrature noise)
        for i in 1..n {
            if q[i] < q[i - 1] * (1.0 - 1e-6) {
                violations.push_str(&format!(
                    "  θ={theta:9.2e}: Q not monotone at μ={:9.2e}: {} then {}\n",
                    mus[i],
                    q[i - 1],
                    q[i]
                ));
            }
        }
        // classical region: Q = γ within 1% while K_C < 0.01
        for i in 0..n {
            if kc[i] < 0.01 {
                let gamma = kin(mus[i]).gamma;
                let dev = rel(q[i], gamma);
                if dev > 0.01 {
                    violations.push_str(&format!(
                        "  θ={theta:9.2e}: |Q/γ - 1| = {dev:.4} at μ={:9.2e} (K_C = {:9.2e})\n",
                        mus[i], kc[i]
                    ));
                }
            }
        }
        // deep QED region: local log-slope < 0.2 once the whole stencil has
        // K_C > 100
        for i in 1..n - 1 {
            if kc[i - 1] > 100.0 {
                let slope =
                    (q[i + 1].ln() - q[i - 1].ln()) / (mus[i + 1].ln() - mus[i - 1].ln());
                if slope >= 0.2 {
                    violations.push_str(&format!(
                        "  θ={theta:9.2e}: log-slope {slope:.3} at μ={:9.2e} (K_C = {:9.2e})\n",
                        mus[i], kc[i]
                    ));
                }
            }
        }
    }
    if violations.is_empty() {
        println!("criterion 7 (Q(μ, θ) curve shapes for three temperatures): PASS");
    } else {
        println!("criterion 7 (Q(μ, θ) curve shapes): FAIL");
    }
    assert!(
        violations.is_empty(),
        "\nQ-curve property violations:\n{violations}\
         Two systematic effects, both properties of the asymptotics rather than \
         of the numerics: (a) the drag deficit below the Compton threshold scales \
         as ≈1.6·K_C (the energy-weighted mean photon energy in the electron frame \
         carries ⟨x⟩ ≈ 4.8), so |Q/γ - 1| crosses 1% near K_C ≈ 6e-3, not at 0.01; \
         (b) logarithmic growth Q ∝ ln(θμ) + O(1) has local log-slope \
         1/[ln(K_C/10) + O(1)] ≈ 0.2-0.3 at K_C = 100 — any logarithmic curve, \
         including the analytic model itself, only drops below slope 0.2 for \
         K_C ≳ 300. The curves are monotone throughout."
    );
}

#[test]
fn criterion_08_trajectory() {
    // ODE residual by 4th-order finite differences, relative 1e-8.
    let (mu0, theta) = (1.7, 0.3);
    let m = |t: f64| thompson_trajectory(mu0, theta, t).unwrap().mu;
    let mut worst = 0.0f64;
    for &tau_scaled in &[0.1, 1.0, 3.0] {
        let tau = tau_scaled / theta.powi(4);
        let h = 1e-4 / theta.powi(4);
        let deriv = (-m(tau + 2.0 * h) + 8.0 * m(tau + h) - 8.0 * m(tau - h) + m(tau - 2.0 * h))
            / (12.0 * h);
        let expect = force_thompson(&kin(m(tau)), theta).unwrap().f;
        let err = rel(deriv, expect);
        worst = worst.max(err);
        assert!(err <= 1e-8, "ODE residual at τθ⁴ = {tau_scaled}: {err:e}");
    }

    // limits within 0.1%
    let theta = 0.1f64;
    let got = thompson_trajectory(0.01, theta, 1.0 / theta.powi(4)).unwrap().mu;
    let expo = 0.01 * (-1.0f64).exp();
    assert!(rel(got, expo) <= 1e-3, "exponential limit: {got} vs {expo}");

    let mu0 = 100.0f64;
    let gamma0 = (1.0 + mu0 * mu0).sqrt();
    let tau = 1.0 / (gamma0 * theta.powi(4));
    let got = thompson_trajectory(mu0, theta, tau).unwrap().mu;
    let power = mu0 / (tau * theta.powi(4) * gamma0 + 1.0);
    assert!(rel(got, power) <= 1e-3, "power-law limit: {got} vs {power}");
    println!("criterion 8 (closed-form trajectory): PASS — worst ODE residual {worst:.2e}");
}

#[test]
fn criterion_09_fokker_planck_solver() {
    // (a) MJ(θ_eq = 0.05) stationary under the full blackbody drag:
    // L¹ drift < 1e-6 over τ = 5/θ⁴ at 400 cells.
    let theta = 0.05f64;
    let cfg = QuadratureConfig::with_rel_tol(1e-8);
    let blackbody = |mu: f64, th: f64| {
        force_blackbody(&kin(mu), th, SigmaMode::MomentumTransfer, &cfg)
            .unwrap()
            .f
    };
    let mut grid = DistributionGrid::log_spaced(1e-4, 1e4, 400).unwrap();
    grid.fill_maxwell_juttner(theta);
    let before = grid.density.clone();
    let total_before = grid.total();
    let mut solver =
        FokkerPlanckSolver::new(&grid, theta, blackbody, FokkerPlanckOptions::default()).unwrap();
    solver.evolve_to(5.0 / theta.powi(4)).unwrap();
    let after = solver.grid();
    let mut drift = 0.0;
    for (i, (a, b)) in after.density.iter().zip(&before).enumerate() {
        drift += (a - b).abs() * grid.cell_width(i);
    }
    assert!(drift < 1e-6, "stationarity L¹ drift {drift:e}");
    assert!(
        rel(after.total(), total_before) < 1e-8,
        "number conservation: {} vs {total_before}",
        after.total()
    );
    assert!(after.min_density() >= 0.0, "positivity violated");

    // (b) non-relativistic Gaussian relaxation at θ_eq = 1e-2, θ_in = 2e-2:
    // fitted rate within 5% of 1/τ_rlx = 2θ_eq⁴.
    let theta_eq = 1e-2f64;
    let tau_rlx = relaxation_rate_thompson(theta_eq).unwrap().tau_rlx;
    let mut grid = DistributionGrid::log_spaced(1e-4, 10.0, 400).unwrap();
    grid.fill_maxwell_boltzmann(2e-2);
    let total_before = grid.total();
    let thompson = |mu: f64, th: f64| force_thompson(&kin(mu), th).unwrap().f;
    let opts = FokkerPlanckOptions {
        dt_max: Some(tau_rlx / 100.0),
        ..FokkerPlanckOptions::default()
    };
    let mut solver = FokkerPlanckSolver::new(&grid, theta_eq, thompson, opts).unwrap();
    let samples = 10;
    let mut ts = Vec::new();
    let mut ys = Vec::new();
    for k in 0..=samples {
        let tau = tau_rlx * k as f64 / samples as f64;
        solver.evolve_to(tau).unwrap();
        let snap = solver.grid();
        assert!(snap.min_density() >= 0.0, "positivity during relaxation");
        let fit = fit_effective_temperature(&snap).unwrap();
        ts.push(tau);
        ys.push((fit.theta - theta_eq).ln());
    }
    let final_grid = solver.grid();
    assert!(
        rel(final_grid.total(), total_before) < 1e-8,
        "conservation during relaxation"
    );
    let n = ts.len() as f64;
    let (tbar, ybar) = (ts.iter().sum::<f64>() / n, ys.iter().sum::<f64>() / n);
    let slope = ts
        .iter()
        .zip(&ys)
        .map(|(t, y)| (t - tbar) * (y - ybar))
        .sum::<f64>()
        / ts.iter().map(|t| (t - tbar).powi(2)).sum::<f64>();
    let tau_fit = -1.0 / slope;
    let err = rel(tau_fit, tau_rlx);
    assert!(err <= 0.05, "fitted τ_rlx {tau_fit:e} vs 1/2θ⁴ = {tau_rlx:e}");
    println!(
        "criterion 9 (Fokker-Planck solver): PASS — MJ drift {drift:.1e}, fitted τ_rlx within {:.1}%",
        err * 100.0
    );
}

#[test]
fn criterion_10_relaxation_headline_numbers() {
    let r1 = relaxation_rate(0.1, 1.0).unwrap();
    assert!(
        rel(r1.t_rlx_seconds, 2.3e-14) <= 0.05,
        "Compton threshold: {:e}",
        r1.t_rlx_seconds
    );

    let gamma_in = 50.0e6 / ELECTRON_REST_ENERGY_EV;
    let r2 = relaxation_rate(1.7, gamma_in).unwrap();
    assert!(
        rel(r2.compton_factor, 1700.0) <= 0.05,
        "K_C = {}",
        r2.compton_factor
    );
    assert!(
        rel(r2.t_rlx_seconds, 0.4e-18) <= 0.15,
        "50 MeV beam: {:e}",
        r2.t_rlx_seconds
    );

    let theta_1300k = RadiationTemperature::from_kelvin(1300.0).unwrap().theta();
    let r3 = relaxation_rate_thompson(theta_1300k).unwrap();
    assert!(
        rel(r3.t_rlx_seconds, 0.7e9) <= 0.10,
        "1300 K: {:e}",
        r3.t_rlx_seconds
    );

    let cmb = trajectory_time_scale(THETA_CMB, 1.0).unwrap();
    let ratio = cmb.t_rlx_seconds / AGE_OF_UNIVERSE_S;
    assert!(
        (50.0..=200.0).contains(&ratio),
        "CMB decay time over universe age: {ratio}"
    );
    println!(
        "criterion 10 (relaxation headline numbers): PASS — 23 fs, 0.4 as (K_C = {:.0}), 0.7e9 s, CMB ratio {ratio:.0}",
        r2.compton_factor
    );
}

#[test]
fn criterion_11_plasma_criterion() {
    let hot = relaxation_rate_hot(1.7, 1.7).unwrap();
    let n_fusion = critical_density(hot.tau_rlx).unwrap().n_cr_cm3;
    assert!(rel(n_fusion, 2e27) <= 0.30, "fusion N_cr = {n_fusion:e}");

    let theta_1e9 = RadiationTemperature::from_kelvin(1e9).unwrap().theta();
    let th = relaxation_rate_thompson(theta_1e9).unwrap();
    let n_th = critical_density(th.tau_rlx).unwrap().n_cr_cm3;
    assert!(rel(n_th, 3.4e20) <= 0.15, "T = 1e9 K N_cr = {n_th:e}");

    let unit = critical_density(1.0).unwrap().n_cr_cm3;
    assert!(rel(unit, 1.2e26) <= 0.05, "N_cr·τ² constant = {unit:e}");
    println!(
        "criterion 11 (plasma damping criterion): PASS — {n_fusion:.2e}, {n_th:.2e}, constant {unit:.3e}"
    );
}

#[test]
fn criterion_12_characteristics_vs_pde() {
    // Gaussian pulse at μ₀ = 100, θ = 1, drift only (no diffusion), evolved
    // over one e-folding of μ; the exact transport and the finite-volume
    // solver agree to L¹ < 1%.
    let theta = 1.0f64;
    let mu0 = 100.0f64;
    let width = 10.0f64;
    let force = |mu: f64, th: f64| force_model(&kin(mu), th).unwrap().f;
    let drift = |mu: f64| force(mu, theta);

    // time for the pulse center to decay by e
    let cfg = QuadratureConfig::with_rel_tol(1e-11);
    let tau = -integrate_finite(&|m: f64| 1.0 / drift(m), mu0 / std::f64::consts::E, mu0, &cfg)
        .value;
    assert!(tau > 0.0);

    // First-order upwind advection: resolution is what buys the agreement
    // (numerical diffusion ~ |f|·Δμ/2 + |f|²·dt/2).
    let cells = 40_000;
    let mut grid = DistributionGrid::log_spaced(15.0, 160.0, cells).unwrap();
    grid.fill_gaussian(mu0, width);
    let total = grid.total();

    let opts = FokkerPlanckOptions {
        include_diffusion: false,
        dt_max: Some(1e-4),
        ..FokkerPlanckOptions::default()
    };
    let mut solver = FokkerPlanckSolver::new(&grid, theta, force, opts).unwrap();
    solver.evolve_to(tau).unwrap();
    let pde = solver.grid();

    let init = |mu: f64| (-((mu - mu0) / width).powi(2) / 2.0).exp();
    let exact = characteristics_solve(&init, &drift, tau, grid.centers(), &cfg).unwrap();

    let mut l1 = 0.0;
    for (i, (a, b)) in pde.density.iter().zip(&exact).enumerate() {
        l1 += (a - b).abs() * grid.cell_width(i);
    }
    let l1_rel = l1 / total;
    assert!(l1_rel < 0.01, "L¹ difference {l1_rel:.4} of the total count");
    println!(
        "criterion 12 (characteristics vs drift-only solver): PASS — L¹ difference {:.2}% over one e-folding",
        l1_rel * 100.0
    );
}

#[test]
fn criterion_13_ics_efficiency() {
    let k = kin(1e4);
    let eps_in = 100.0 / (4.0 * k.gamma);
    let ev = ics_max_energy(eps_in, &k).unwrap();
    assert!(
        (ev.eta - 0.99).abs() <= 0.005,
        "η at 4γε_in = 100: {}",
        ev.eta
    );

    // rest-frame backscatter reduces to the Compton ratio at ψ = π, exactly
    // (up to one rounding of the shared expression).
    let rest = kin(0.0);
    for &eps in &[1e-6, 1e-2, 1.0, 300.0] {
        let ev = ics_max_energy(eps, &rest).unwrap();
        let want = eps * compton_ratio(eps, std::f64::consts::PI);
        assert!(
            (ev.eps_sc_max - want).abs() <= 2.0 * f64::EPSILON * want,
            "rest-frame backscatter at ε = {eps}: {} vs {want}",
            ev.eps_sc_max
        );
    }
    println!(
        "criterion 13 (inverse-Compton efficiency): PASS — η(4γε=100) = {:.4}",
        ev.eta
    );
}

#[test]
fn criterion_14_cli_determinism() {
    use std::ffi::OsString;
    let run_once = |args: &[&str]| -> (i32, Vec<u8>) {
        let argv: Vec<OsString> = std::iter::once("comptondrag")
            .chain(args.iter().cloned())
            .map(OsString::from)
            .collect();
        let mut buf = Vec::new();
        let code = comptondrag::cli::run(&argv, &mut buf);
        (code, buf)
    };
    for args in [
        vec!["xsec", "--eps", "1e-3:1e3:200", "--log"],
        vec![
            "force", "--theta", "0.534e-9", "--mu", "1:1e12:40", "--log", "--method", "blackbody",
        ],
        vec!["scenarios"],
        vec!["scenarios", "--format", "json"],
    ] {
        let (c1, out1) = run_once(&args);
        let (c2, out2) = run_once(&args);
        assert_eq!(c1, 0, "{args:?} failed");
        assert_eq!(c2, 0);
        assert_eq!(out1, out2, "outputs differ for {args:?}");
        assert!(!out1.is_empty());
    }
    println!("criterion 14 (CLI determinism): PASS — byte-identical repeated runs");
}
