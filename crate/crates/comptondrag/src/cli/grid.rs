//! `start:stop:count` grid arguments for the CLI.

use crate::{Error, Result};

/// A sweep specification: either a single value or `start:stop:count`,
/// linear by default, log-spaced when the subcommand's `--log` flag is set.
#[derive(Debug, Clone)]
pub struct GridSpec {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl GridSpec {
    /// Parse `"value"` or `"start:stop:count"`.
    pub fn parse(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(':').collect();
        let bad = |what: &str| Error::Format(format!("bad grid '{text}': {what}"));
        match parts.len() {
            1 => {
                let v: f64 = parts[0].trim().parse().map_err(|_| bad("not a number"))?;
                if !v.is_finite() {
                    return Err(bad("not finite"));
                }
                Ok(GridSpec {
                    start: v,
                    stop: v,
                    count: 1,
                })
            }
            3 => {
                let start: f64 = parts[0].trim().parse().map_err(|_| bad("bad start"))?;
                let stop: f64 = parts[1].trim().parse().map_err(|_| bad("bad stop"))?;
                let count: usize = parts[2].trim().parse().map_err(|_| bad("bad count"))?;
                if !start.is_finite() || !stop.is_finite() {
                    return Err(bad("not finite"));
                }
                if count == 0 || count > 1_000_000 {
                    return Err(bad("count must lie in [1, 1e6]"));
                }
                if count > 1 && !(stop > start) {
                    return Err(bad("stop must exceed start"));
                                            }
                Ok(GridSpec { start, stop, count })
            }
            _ => Err(bad("expected 'value' or 'start:stop:count'")),
        }
    }

    /// Materialize the grid points.
    pub fn values(&self, log: bool) -> Result<Vec<f64>> {
        if self.count == 1 {
            return Ok(vec![self.start]);
        }
        if log && !(self.start > 0.0) {
            return Err(Error::Format(format!(
                "log grids need a positive start, got {}",
                self.start
            )));
        }
        let n = self.count;
        let mut out = Vec::with_capacity(n);
        if log {
            let l0 = self.start.ln();
            let step = (self.stop / self.start).ln() / (n - 1) as f64;
            for i in 0..n {
                out.push((l0 + step * i as f64).exp());
            }
        } else {
            let step = (self.stop - self.start) / (n - 1) as f64;
            for i in 0..n {
                out.push(self.start + step * i as f64);
            }
        }
        Ok(out)
    }
}
