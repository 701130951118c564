//! Command-line front-end: grid sweeps over every operation, reproducible
//! CSV/JSON emission for the cross-section and force figures, the scenario
//! table, and kinetics evolutions.
//!
//! Exit codes: 0 success, 2 argument error, 3 numerical non-convergence.

mod grid;
mod output;

pub use grid::GridSpec;
pub use output::{fmt_float, Cell, Table};

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::force::{evaluate_planck, theta_factor, thompson_trajectory, ForceMethod};
use crate::kinetics::{
    characteristics_solve, fit_effective_temperature, mj_peak_gamma, relaxation_rate,
    relaxation_rate_hot, DistributionGrid, FokkerPlanckOptions, FokkerPlanckSolver,
};
use crate::numerics::QuadratureConfig;
use crate::quantities::ElectronKinematics;
use crate::scenarios::{assess_plasma, ics_max_energy, scenario_table, DAMPED_THRESHOLD_RATIO};
use crate::xsection::{CrossSectionTriple, PhotonEnergy, SigmaMode};
use crate::{Error, Result};

#[derive(Parser)]
#[command(
    name = "comptondrag",
    version,
    about = "Radiation-pressure drag on free electrons in isotropic radiation, \
             from the Thompson to the Klein-Nishina regime, with thermalization kinetics",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct OutputOpts {
    /// Output file (stdout when omitted).
    #[arg(long, short = 'o', global = true)]
    out: Option<PathBuf>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Relative quadrature tolerance override.
    #[arg(long, global = true)]
    rel_tol: Option<f64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    /// Nested quadrature, outer integral over the rest-frame frequency.
    General17,
    /// Nested quadrature, outer integral over the lab-frame frequency.
    General18,
    /// Reduced single-integral blackbody form.
    Blackbody,
    /// Analytic fit -μθ³ln(1+qθγ)/q.
    Model,
    /// Constant cross-section: -θ⁴μγ.
    Thompson,
}

impl MethodArg {
    fn to_method(self) -> ForceMethod {
        match self {
            MethodArg::General17 => ForceMethod::GeneralRestFrame,
            MethodArg::General18 => ForceMethod::GeneralLabFrame,
            MethodArg::Blackbody => ForceMethod::BlackbodyReduced,
            MethodArg::Model => ForceMethod::Model,
            MethodArg::Thompson => ForceMethod::Thompson,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SigmaArg {
    /// Momentum-transfer cross-section σ_KN - σ_R.
    Mt,
    /// Klein-Nishina total only (projection term dropped).
    Kn,
}

impl SigmaArg {
    fn to_mode(self) -> SigmaMode {
        match self {
            SigmaArg::Mt => SigmaMode::MomentumTransfer,
            SigmaArg::Kn => SigmaMode::KleinNishina,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum InitArg {
    Mj,
    Mb,
    Gauss,
}

#[derive(Clone, Copy, ValueEnum)]
enum EvolveMethod {
    Fp,
    Characteristics,
}

#[derive(Clone, Copy, ValueEnum)]
enum ForceArg {
    Model,
    Thompson,
    Blackbody,
}

#[derive(Subcommand)]
enum Command {
    /// Integrated cross-sections σ_KN, σ_R, σ_MT over a photon-energy grid.
    Xsec {
        /// Photon energy ε = ħω/m₀c², value or start:stop:count.
        #[arg(long)]
        eps: String,
        /// Log-space the grids of this command.
        #[arg(long)]
        log: bool,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Drag force f(μ, θ) and QED factor Q = |f|/μθ⁴ on a (θ, μ) grid.
    Force {
        #[arg(long)]
        theta: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        log: bool,
        #[arg(long, value_enum, default_value_t = MethodArg::Blackbody)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = SigmaArg::Mt)]
        sigma: SigmaArg,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Low-velocity drag factor Θ(θ) over a temperature grid.
    ThetaFactor {
        #[arg(long)]
        theta: String,
        #[arg(long)]
        log: bool,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Closed-form Thompson deceleration trajectory μ(τ).
    Trajectory {
        #[arg(long)]
        mu0: f64,
        #[arg(long)]
        theta: f64,
        #[arg(long)]
        tau: String,
        #[arg(long)]
        log: bool,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Relaxation time toward equilibrium at a bath temperature.
    Relax {
        #[arg(long)]
        theta_eq: f64,
        /// Initial Lorentz factor (peak of the initial distribution).
        #[arg(long, conflicts_with = "theta_in")]
        gamma_in: Option<f64>,
        /// Initial temperature; γ_in is taken at the Maxwell-Jüttner peak.
        #[arg(long)]
        theta_in: Option<f64>,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Evolve an electron distribution in a constant-temperature bath.
    Evolve {
        #[arg(long, value_enum)]
        init: InitArg,
        #[arg(long)]
        theta_in: f64,
        #[arg(long)]
        theta_eq: f64,
        #[arg(long)]
        tau_end: f64,
        /// Number of equally spaced snapshots (besides τ = 0).
        #[arg(long, default_value_t = 1)]
        snapshots: usize,
        #[arg(long, value_enum, default_value_t = EvolveMethod::Fp)]
        method: EvolveMethod,
        /// Drag model driving the evolution.
        #[arg(long, value_enum, default_value_t = ForceArg::Model)]
        force: ForceArg,
        /// Center of the gaussian initial pulse.
        #[arg(long, default_value_t = 100.0)]
        mu0: f64,
        /// Width of the gaussian initial pulse (defaults to mu0/10).
        #[arg(long)]
        width: Option<f64>,
        #[arg(long, default_value_t = 400)]
        cells: usize,
        #[arg(long)]
        mu_min: Option<f64>,
        #[arg(long)]
        mu_max: Option<f64>,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Plasma-oscillation damping assessment (critical density).
    Plasma {
        #[arg(long)]
        theta_eq: f64,
        /// Initial temperature for the hot near-equilibrium rate.
        #[arg(long)]
        theta_in: Option<f64>,
        /// Electron number density to assess, cm⁻³.
        #[arg(long)]
        ne: Option<f64>,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Maximum inverse-Compton scattered energy and quantum efficiency.
    Ics {
        /// Incident photon energy ε_in = ħω/m₀c².
        #[arg(long)]
        eps_in: f64,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        log: bool,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// The worked-example table (CMB to fusion conditions).
    Scenarios {
        #[command(flatten)]
        output: OutputOpts,
    },
}

/// Entry point for the binary: returns the process exit code.
pub fn run_main() -> i32 {
    let argv: Vec<OsString> = std::env::args_os().collect();
    let mut stdout = std::io::stdout();
    run(&argv, &mut stdout)
}

/// Run the CLI against explicit arguments, writing stdout-bound output to
/// `out`; returns the exit code (0 ok, 2 argument error, 3 non-convergence).
pub fn run<W: Write>(argv: &[OsString], out: &mut W) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = err.print();
            return code;
        }
    };
    let argv_echo: Vec<String> = argv
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    match execute(cli.command, &argv_echo, out) {
        Ok(()) => 0,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::NonConvergence { .. } => 3,
                Error::Domain(_) | Error::Format(_) => 2,
                _ => 1,
            }
        }
    }
}

fn quad_config(rel_tol: Option<f64>) -> Result<QuadratureConfig> {
    match rel_tol {
        None => Ok(QuadratureConfig::default()),
        Some(t) if t > 0.0 && t < 1.0 => Ok(QuadratureConfig::with_rel_tol(t)),
        Some(t) => Err(Error::Domain(format!(
            "relative tolerance must lie in (0, 1), got {t}"
        ))),
    }
}

fn emit(output: &OutputOpts, argv: &[String], table: &Table, out: &mut dyn Write) -> Result<()> {
    let mut sink: Box<dyn Write> = match &output.out {
        Some(path) => Box::new(std::fs::File::create(path)?),
        None => Box::new(out),
    };
    match output.format {
        Format::Csv => output::write_csv(&mut sink, argv, table)?,
        Format::Json => output::write_json(&mut sink, argv, table)?,
    }
    Ok(())
}

fn check_converged(what: &str, converged: bool, error_estimate: f64) -> Result<()> {
    if converged {
        Ok(())
    } else {
        Err(Error::NonConvergence {
            what: what.to_string(),
            error_estimate,
        })
    }
}

fn execute(cmd: Command, argv: &[String], out: &mut dyn Write) -> Result<()> {
    match cmd {
        Command::Xsec { eps, log, output } => {
            let grid = GridSpec::parse(&eps)?.values(log)?;
            let mut rows = Vec::with_capacity(grid.len());
            for eps in grid {
                let t = CrossSectionTriple::at(PhotonEnergy::new(eps)?);
                rows.push(vec![t.eps, t.kn, t.r, t.mt]);
            }
            let table = Table::numeric(vec!["eps", "sigma_kn", "sigma_r", "sigma_mt"], rows);
            emit(&output, argv, &table, out)
        }
        Command::Force {
            theta,
            mu,
            log,
            method,
            sigma,
            output,
        } => {
            let cfg = quad_config(output.rel_tol)?;
            let thetas = GridSpec::parse(&theta)?.values(log)?;
            let mus = GridSpec::parse(&mu)?.values(log)?;
            let mut rows = Vec::with_capacity(thetas.len() * mus.len());
            for &th in &thetas {
                for &m in &mus {
                    let kin = ElectronKinematics::from_mu(m)?;
                    let ev = evaluate_planck(&kin, th, method.to_method(), sigma.to_mode(), &cfg)?;
                    check_converged("force quadrature", ev.converged, ev.error_estimate)?;
                    rows.push(vec![
                        th,
                        m,
                        ev.f,
                        ev.q_factor.unwrap_or(f64::NAN),
                        ev.error_estimate,
                    ]);
                }
            }
            let table = Table::numeric(vec!["theta", "mu", "f", "q_factor", "error_estimate"], rows);
            emit(&output, argv, &table, out)
        }
        Command::ThetaFactor { theta, log, output } => {
            let cfg = quad_config(output.rel_tol)?;
            let thetas = GridSpec::parse(&theta)?.values(log)?;
            let mut rows = Vec::with_capacity(thetas.len());
            for &th in &thetas {
                let q = theta_factor(th, &cfg)?;
                check_converged("theta-factor quadrature", q.converged, q.error_estimate)?;
                rows.push(vec![th, q.value, q.error_estimate]);
            }
            let table = Table::numeric(vec!["theta", "theta_factor", "error_estimate"], rows);
            emit(&output, argv, &table, out)
        }
        Command::Trajectory {
            mu0,
            theta,
            tau,
            log,
            output,
        } => {
            let taus = GridSpec::parse(&tau)?.values(log)?;
            let mut rows = Vec::with_capacity(taus.len());
            for &t in &taus {
                let p = thompson_trajectory(mu0, theta, t)?;
                rows.push(vec![p.tau, p.mu]);
            }
            let table = Table::numeric(vec!["tau", "mu"], rows);
            emit(&output, argv, &table, out)
        }
        Command::Relax {
            theta_eq,
            gamma_in,
            theta_in,
            output,
        } => {
            let report = match (gamma_in, theta_in) {
                (Some(g), None) => relaxation_rate(theta_eq, g)?,
                (None, Some(t)) => relaxation_rate(theta_eq, mj_peak_gamma(t))?,
                (None, None) => relaxation_rate(theta_eq, 1.0)?,
                (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
            };
            let table = Table {
                columns: vec![
                    "theta_eq",
                    "gamma_in",
                    "compton_factor",
                    "tau_rlx",
                    "t_rlx_seconds",
                    "regime",
                    "rate_formula",
                ],
                rows: vec![vec![
                    Cell::Num(report.theta_eq),
                    Cell::Num(report.gamma_in),
                    Cell::Num(report.compton_factor),
                    Cell::Num(report.tau_rlx),
                    Cell::Num(report.t_rlx_seconds),
                    Cell::Text(report.regime.label().into()),
                    Cell::Text(report.formula.label().into()),
                ]],
            };
            emit(&output, argv, &table, out)
        }
        Command::Evolve {
            init,
            theta_in,
            theta_eq,
            tau_end,
            snapshots,
            method,
            force,
            mu0,
            width,
            cells,
            mu_min,
            mu_max,
            output,
        } => run_evolve(
            init, theta_in, theta_eq, tau_end, snapshots, method, force, mu0, width, cells,
            mu_min, mu_max, output, argv, out,
        ),
        Command::Plasma {
            theta_eq,
            theta_in,
            ne,
            output,
        } => {
            let report = match theta_in {
                Some(ti) => relaxation_rate_hot(theta_eq, ti)?,
                None => relaxation_rate(theta_eq, 1.0)?,
            };
            let a = assess_plasma(report.tau_rlx, ne, DAMPED_THRESHOLD_RATIO)?;
            let table = Table {
                columns: vec![
                    "theta_eq",
                    "tau_rlx",
                    "t_rlx_seconds",
                    "n_cr_cm3",
                    "omega_dmp_per_s",
                    "n_e_cm3",
                    "damped",
                ],
                rows: vec![vec![
                    Cell::Num(theta_eq),
                    Cell::Num(a.tau_rlx),
                    Cell::Num(report.t_rlx_seconds),
                    Cell::Num(a.n_cr_cm3),
                    Cell::Num(a.omega_dmp_per_s),
                    a.n_e_cm3.map_or(Cell::Empty, Cell::Num),
                    a.damped
                        .map_or(Cell::Empty, |d| Cell::Text(if d { "yes" } else { "no" }.into())),
                ]],
            };
            emit(&output, argv, &table, out)
        }
        Command::Ics {
            eps_in,
            mu,
            log,
            output,
        } => {
            let mus = GridSpec::parse(&mu)?.values(log)?;
            let mut rows = Vec::with_capacity(mus.len());
            for &m in &mus {
                let kin = ElectronKinematics::from_mu(m)?;
                let ev = ics_max_energy(eps_in, &kin)?;
                rows.push(vec![ev.eps_in, ev.mu, ev.gamma, ev.eps_sc_max, ev.eta]);
            }
            let table = Table::numeric(vec!["eps_in", "mu", "gamma", "eps_sc_max", "eta"], rows);
            emit(&output, argv, &table, out)
        }
        Command::Scenarios { output } => {
            let rows = scenario_table()
                .into_iter()
                .map(|s| {
                    vec![
                        Cell::Text(s.name.into()),
                        Cell::Num(s.t_kelvin),
                        Cell::Num(s.theta),
                        Cell::Num(s.gamma_in),
                        Cell::Num(s.compton_factor),
                        Cell::Num(s.tau_rlx),
                        Cell::Num(s.t_rlx_seconds),
                        Cell::Text(s.rate_formula.into()),
                        s.n_cr_cm3.map_or(Cell::Empty, Cell::Num),
                    ]
                })
                .collect();
            let table = Table {
                columns: vec![
                    "name",
                    "t_kelvin",
                    "theta",
                    "gamma_in",
                    "compton_factor",
                    "tau_rlx",
                    "t_rlx_seconds",
                    "rate_formula",
                    "n_cr_cm3",
                ],
                rows,
            };
            emit(&output, argv, &table, out)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn run_evolve(
    init: InitArg,
    theta_in: f64,
    theta_eq: f64,
    tau_end: f64,
    snapshots: usize,
    method: EvolveMethod,
    force: ForceArg,
    mu0: f64,
    width: Option<f64>,
    cells: usize,
    mu_min: Option<f64>,
    mu_max: Option<f64>,
    output: OutputOpts,
    argv: &[String],
    out: &mut dyn Write,
) -> Result<()> {
    if snapshots == 0 || snapshots > 10_000 {
        return Err(Error::Domain(format!(
            "snapshots must lie in [1, 1e4], got {snapshots}"
        )));
    }
    let cfg = quad_config(output.rel_tol)?;

    // window defaults: [1e-4, 1e4] · max(1, μ at the initial peak)
    let mu_peak = match init {
        InitArg::Mj => (mj_peak_gamma(theta_in).powi(2) - 1.0).sqrt(),
        InitArg::Mb => (2.0 * theta_in).sqrt(),
        InitArg::Gauss => mu0,
    };
    let scale = mu_peak.max(1.0);
    let lo = mu_min.unwrap_or(1e-4 * scale);
    let hi = mu_max.unwrap_or(1e4 * scale);
    let mut grid = DistributionGrid::log_spaced(lo, hi, cells)?;
    match init {
        InitArg::Mj => grid.fill_maxwell_juttner(theta_in),
        InitArg::Mb => grid.fill_maxwell_boltzmann(theta_in),
        InitArg::Gauss => {
            let w = width.unwrap_or(mu0 / 10.0);
            grid.fill_gaussian(mu0, w);
        }
    }

    let force_fn = move |mu: f64, theta: f64| -> f64 {
        let kin = ElectronKinematics::from_mu(mu).expect("grid momenta are valid");
        match force {
            ForceArg::Model => crate::force::force_model(&kin, theta).expect("θ > 0").f,
            ForceArg::Thompson => crate::force::force_thompson(&kin, theta).expect("θ > 0").f,
            ForceArg::Blackbody => {
                crate::force::force_blackbody(&kin, theta, SigmaMode::MomentumTransfer, &cfg)
                    .expect("θ > 0")
                    .f
            }
        }
    };

    let mut sink: Box<dyn Write> = match &output.out {
        Some(path) => Box::new(std::fs::File::create(path)?),
        None => Box::new(out),
    };
    writeln!(&mut sink, "# comptondrag {}", env!("CARGO_PKG_VERSION"))?;
    writeln!(&mut sink, "# argv: {}", argv.join(" "))?;

    match method {
        EvolveMethod::Fp => {
            let mut solver = FokkerPlanckSolver::new(
                &grid,
                theta_eq,
                force_fn,
                FokkerPlanckOptions::default(),
            )?;
            grid.write_csv(&mut sink, 0.0, theta_eq, "fp")?;
            for k in 1..=snapshots {
                let tau = tau_end * k as f64 / snapshots as f64;
                solver.evolve_to(tau)?;
                let snap = solver.grid();
                snap.write_csv(&mut sink, tau, theta_eq, "fp")?;
                // a fitted effective temperature is handy alongside snapshots
                if let Ok(fit) = fit_effective_temperature(&snap) {
                    writeln!(&mut sink, "# theta_eff: {}", fmt_float(fit.theta))?;
                }
            }
        }
        EvolveMethod::Characteristics => {
            let initial: Box<dyn Fn(f64) -> f64> = match init {
                InitArg::Mj => Box::new(move |mu| crate::kinetics::mj_density(mu, theta_in)),
                InitArg::Mb => Box::new(move |mu| crate::kinetics::mb_density(mu, theta_in)),
                InitArg::Gauss => {
                    let w = width.unwrap_or(mu0 / 10.0);
                    Box::new(move |mu: f64| (-((mu - mu0) / w).powi(2) / 2.0).exp())
                }
            };
            let drift = |mu: f64| force_fn(mu, theta_eq);
            grid.write_csv(&mut sink, 0.0, theta_eq, "characteristics")?;
            for k in 1..=snapshots {
                let tau = tau_end * k as f64 / snapshots as f64;
                let rho = characteristics_solve(&*initial, &drift, tau, grid.centers(), &cfg)?;
                let mut snap = grid.clone();
                snap.density = rho;
                snap.write_csv(&mut sink, tau, theta_eq, "characteristics")?;
            }
        }
    }
    Ok(())
}
