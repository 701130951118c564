//! Exact transport solution of the drift-only (diffusion-free) kinetic
//! equation ∂ρ/∂τ + ∂(fρ)/∂μ = 0 by the method of characteristics.
//!
//! With ξ(μ) = ∫dμ/f (monotonically decreasing, since f < 0), the general
//! solution is ρ(μ, τ) = Φ(ξ(μ) - τ)/f(μ); pinning Φ to the initial data
//! gives
//!
//!   ρ(μ, τ) = ρ₀(μ*)·f(μ*)/f(μ),   ξ(μ*) = ξ(μ) - τ,
//!
//! where μ* > μ is the launch point of the characteristic through (μ, τ).
//! ξ is tabulated by per-segment quadrature and inverted by bracketed
//! Newton iteration with the exact derivative ξ' = 1/f.

use crate::numerics::{integrate_finite, QuadratureConfig};
use crate::{Error, Result};

/// Points per decade of the ξ table.
const TABLE_DENSITY: usize = 400;
/// Give up extending the table once it spans this many decades above the
/// evaluation window (the characteristic "comes from infinity" well before).
const MAX_EXTRA_DECADES: f64 = 14.0;

struct XiTable {
    mu: Vec<f64>,
    xi: Vec<f64>,
}

impl XiTable {
    fn build(force: &dyn Fn(f64) -> f64, mu_lo: f64, mu_hi: f64, cfg: &QuadratureConfig) -> Result<Self> {
        let decades = (mu_hi / mu_lo).log10();
        let n = ((decades * TABLE_DENSITY as f64).ceil() as usize).max(8);
        let step = (mu_hi / mu_lo).ln() / n as f64;
        let mu: Vec<f64> = (0..=n).map(|i| mu_lo * (step * i as f64).exp()).collect();
        let mut xi = vec![0.0; n + 1];
        for j in 0..n {
            let seg = integrate_finite(
                &|m: f64| {
                    let f = force(m);
                    1.0 / f
                },
                mu[j],
                mu[j + 1],
                cfg,
            );
            // f < 0 means every segment contributes negatively; far out the
            // increment may round to nothing as ξ saturates, which is fine.
            if !(seg.value < 0.0) {
                return Err(Error::Domain(format!(
                    "force is not negative near μ = {}",
                    mu[j]
                )));
            }
            xi[j + 1] = xi[j] + seg.value;
        }
        Ok(XiTable { mu, xi })
    }

    /// ξ at an arbitrary μ inside the table (bracket + local quadrature).
    fn xi_at(&self, force: &dyn Fn(f64) -> f64, mu: f64, cfg: &QuadratureConfig) -> f64 {
        let j = match self
            .mu
            .binary_search_by(|probe| probe.partial_cmp(&mu).unwrap())
        {
            Ok(j) => return self.xi[j],
            Err(j) => j - 1,
        };
        let seg = integrate_finite(&|m: f64| 1.0 / force(m), self.mu[j], mu, cfg);
        self.xi[j] + seg.value
    }

    /// Solve ξ(μ*) = target by bracketed Newton with exact ξ' = 1/f.
    fn invert(&self, force: &dyn Fn(f64) -> f64, target: f64, cfg: &QuadratureConfig) -> Result<f64> {
        // ξ is decreasing: find segment with ξ[j] ≥ target ≥ ξ[j+1].
        if target > self.xi[0] {
            return Err(Error::Inversion(format!(
                "target {target} above table head {}",
                self.xi[0]
            )));
        }
        let last = *self.xi.last().unwrap();
        if target < last {
            return Err(Error::Inversion(format!(
                "target {target} below table tail {last}"
            )));
        }
        let mut lo = 0usize;
        let mut hi = self.xi.len() - 1;
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if self.xi[mid] >= target {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        // Newton from the segment midpoint; ξ within the segment evaluated by
        // local quadrature from the left node (exact to quadrature tolerance).
        let (m0, m1) = (self.mu[lo], self.mu[hi]);
        let mut mu = 0.5 * (m0 + m1);
        for _ in 0..60 {
            let xi_mu = self.xi[lo] + integrate_finite(&|m: f64| 1.0 / force(m), m0, mu, cfg).value;
            let residual = xi_mu - target;
            let step = -residual * force(mu); // d μ = -residual / ξ' = -residual·f
            let next = (mu + step).clamp(m0, m1);
            if (next - mu).abs() <= 1e-14 * mu {
                return Ok(next);
            }
            mu = next;
        }
        Ok(mu)
    }
}

/// Transport `initial` density through time `tau` under the (negative) drag
/// `force`, evaluated at the points `eval_mu`; exact up to quadrature and
/// inversion tolerances, conserves the total count.
pub fn characteristics_solve(
    initial: &dyn Fn(f64) -> f64,
    force: &dyn Fn(f64) -> f64,
    tau: f64,
    eval_mu: &[f64],
    cfg: &QuadratureConfig,
) -> Result<Vec<f64>> {
    if !(tau >= 0.0) || !tau.is_finite() {
        return Err(Error::Domain(format!("time must be non-negative, got {tau}")));
    }
    if eval_mu.is_empty() {
        return Ok(Vec::new());
    }
    let mut mu_lo = f64::INFINITY;
    let mut mu_hi = 0.0f64;
    for &mu in eval_mu {
        if !(mu > 0.0) || !mu.is_finite() {
            return Err(Error::Domain(format!("evaluation point {mu} not positive")));
        }
        mu_lo = mu_lo.min(mu);
        mu_hi = mu_hi.max(mu);
    }
    if tau == 0.0 {
        return Ok(eval_mu.iter().map(|&mu| initial(mu)).collect());
    }

    // Extend the table upward until the earliest launch point is covered:
    // the target ξ(μ*) = ξ(μ_hi) - τ must be above the table tail. When ξ
    // saturates toward its finite limit first, those characteristics would
    // have to launch beyond any finite momentum.
    let mut top = mu_hi * 2.0;
    let mut dead_tail_strikes = 0u32;
    let (table, saturated) = loop {
        let table = XiTable::build(force, mu_lo, top, cfg)?;
        let xi_hi_eval = table.xi_at(force, mu_hi, cfg);
        let needed = xi_hi_eval - tau;
        if *table.xi.last().unwrap() <= needed {
            break (table, false);
        }
        // Launches may sit beyond any finite momentum (ξ has a finite limit).
        // Once the initial data has been dead for several doublings, the
        // unreached densities are zero and extension is pointless.
        if initial(top).abs() <= 1e-300 {
            dead_tail_strikes += 1;
        } else {
            dead_tail_strikes = 0;
        }
        if dead_tail_strikes >= 3 || top / mu_hi > 10f64.powf(MAX_EXTRA_DECADES) {
            break (table, true);
        }
        top *= 4.0;
    };

    let tail = *table.xi.last().unwrap();
    let top_mu = *table.mu.last().unwrap();
    let mut out = Vec::with_capacity(eval_mu.len());
    for &mu in eval_mu {
        let target = table.xi_at(force, mu, cfg) - tau;
        if saturated && target < tail {
            // Launch point beyond the tabulated range. With initial data that
            // has died out there, the transported density is exactly zero;
            // anything else is a genuine inversion failure.
            if initial(top_mu).abs() <= 1e-300 {
                out.push(0.0);
                continue;
            }
            return Err(Error::Inversion(format!(
                "launch point for μ = {mu} lies beyond μ = {top_mu:e} where the                  initial density is still nonzero"
            )));
        }
        let mu_star = table.invert(force, target, cfg)?;
        out.push(initial(mu_star) * force(mu_star) / force(mu));
    }
    Ok(out)
}
