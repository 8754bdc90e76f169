use crate::error::{Error, Result};
use crate::integrator::Method;
use crate::lab::config::ExperimentConfig;
use crate::lab::strong::strong_error;

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub method: Method,
    pub omega: f64,
    pub err_x: f64,
    pub ci_x: f64,
    pub err_v: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepTable {
    pub h: f64,
    pub rows: Vec<SweepRow>,
}

impl SweepTable {
    /// `(ω, err_x)` for one method, in sweep order.
    pub fn errors(&self, method: Method) -> Vec<(f64, f64)> {
        self.rows.iter().filter(|r| r.method == method).map(|r| (r.omega, r.err_x)).collect()
    }

    /// Largest over smallest position error across the sweep.
    pub fn spread(&self, method: Method) -> f64 {
        let errs = self.errors(method);
        let max = errs.iter().map(|e| e.1).fold(f64::NEG_INFINITY, f64::max);
        let min = errs.iter().map(|e| e.1).fold(f64::INFINITY, f64::min);
        max / min
    }
}

/// Position errors at a fixed step size over a list of frequencies, with the
/// template's seed reused for every frequency.
pub fn stiffness_sweep(
    template: &ExperimentConfig,
    omegas: &[f64],
    h: f64,
    methods: &[Method],
) -> Result<SweepTable> {
    if omegas.is_empty() || omegas.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::InvalidConfig("omegas must be non-empty and strictly ascending".into()));
    }
    let mut rows = Vec::with_capacity(omegas.len() * methods.len());
    for &omega in omegas {
        let config = ExperimentConfig {
            problem: template.problem.with_omega(omega)?,
            methods: methods.to_vec(),
            step_sizes: vec![h],
            ..template.clone()
        };
        let report = strong_error(&config)?;
        rows.extend(report.rows.into_iter().map(|r| SweepRow {
            method: r.method,
            omega,
            err_x: r.err_x,
            ci_x: r.ci_x,
            err_v: r.err_v,
        }));
    }
    Ok(SweepTable { h, rows })
}
