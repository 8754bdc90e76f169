use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::integrator::{Method, StepScheme};
use crate::lab::config::ExperimentConfig;
use crate::lab::reference::reference_scheme;
use crate::wiener::{coarsen, generate_path};

/// Two-sided 95% normal quantile.
const Z95: f64 = 1.959_963_984_540_054;

/// Root-mean-square errors at `t_end` for one `(method, ω, h)` cell.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorRow {
    pub method: Method,
    pub omega: f64,
    pub h: f64,
    pub err_x: f64,
    pub err_v: f64,
    /// 95% half-widths (delta method on the mean square).
    pub ci_x: f64,
    pub ci_v: f64,
    pub samples: usize,
    /// `h / ε`, infinite when `ε = 0`.
    pub h_over_epsilon: f64,
}

/// A sample excluded from aggregation because a trajectory went non-finite.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleFailure {
    pub sample_index: u64,
    /// `None` when the reference solution itself failed.
    pub method: Option<Method>,
    pub h: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StrongErrorReport {
    pub rows: Vec<ErrorRow>,
    pub seed: u64,
    pub reference_fallback: bool,
    pub failures: Vec<SampleFailure>,
}

impl StrongErrorReport {
    pub fn row(&self, method: Method, h: f64) -> Option<&ErrorRow> {
        self.rows.iter().find(|r| r.method == method && r.h == h)
    }

    /// CSV with columns `method,omega,h,err_x,err_v,ci_x,ci_v,samples,seed`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("method,omega,h,err_x,err_v,ci_x,ci_v,samples,seed\n");
        for r in &self.rows {
            writeln!(
                out,
                "{},{},{},{},{},{},{},{},{}",
                r.method, r.omega, r.h, r.err_x, r.err_v, r.ci_x, r.ci_v, r.samples, self.seed
            )
            .expect("writing to a String cannot fail");
        }
        out
    }
}

struct Cell {
    method: Method,
    h: f64,
    factor: usize,
    scheme: StepScheme,
}

enum Outcome {
    Squares(Vec<[f64; 2]>),
    Failed(SampleFailure),
}

/// Monte Carlo strong errors for every `(method, h)` in the configuration.
pub fn strong_error(config: &ExperimentConfig) -> Result<StrongErrorReport> {
    config.validate()?;
    let problem = &config.problem;
    let (reference, reference_fallback) = reference_scheme(problem, config.n_fine)?;

    let mut cells = Vec::with_capacity(config.methods.len() * config.step_sizes.len());
    for &method in &config.methods {
        for &h in &config.step_sizes {
            let factor = config.coarsening_factor(h)?;
            let scheme = StepScheme::new(problem.clone(), h, method.kernel_mode(config.nodes))?;
            cells.push(Cell { method, h, factor, scheme });
        }
    }

    let outcomes = (0..config.samples as u64)
        .into_par_iter()
        .map(|m| run_sample(config, &reference, &cells, m))
        .collect::<Result<Vec<_>>>()?;

    let mut sums = vec![[0.0f64; 4]; cells.len()];
    let mut failures = Vec::new();
    let mut count = 0usize;
    for outcome in outcomes {
        match outcome {
            Outcome::Squares(squares) => {
                count += 1;
                for (acc, [ex, ev]) in sums.iter_mut().zip(squares) {
                    acc[0] += ex;
                    acc[1] += ex * ex;
                    acc[2] += ev;
                    acc[3] += ev * ev;
                }
            }
            Outcome::Failed(f) => failures.push(f),
        }
    }

    let rows = cells
        .iter()
        .zip(&sums)
        .map(|(cell, acc)| {
            let (err_x, ci_x) = rms_with_ci(acc[0], acc[1], count);
            let (err_v, ci_v) = rms_with_ci(acc[2], acc[3], count);
            ErrorRow {
                method: cell.method,
                omega: problem.omega(),
                h: cell.h,
                err_x,
                err_v,
                ci_x,
                ci_v,
                samples: count,
                h_over_epsilon: cell.h / problem.epsilon(),
            }
        })
        .collect();

    Ok(StrongErrorReport { rows, seed: config.seed, reference_fallback, failures })
}

fn run_sample(
    config: &ExperimentConfig,
    reference: &StepScheme,
    cells: &[Cell],
    sample: u64,
) -> Result<Outcome> {
    let path = generate_path(config.seed, sample, config.n_fine, config.problem.t_end())?;
    let reference = match reference.integrate_final(path.increments()) {
        Ok(state) => state,
        Err(Error::NonFinite(_)) => {
            return Ok(Outcome::Failed(SampleFailure { sample_index: sample, method: None, h: None }))
        }
        Err(e) => return Err(e),
    };
    let mut coarse: Vec<(usize, Vec<f64>)> = Vec::new();
    let mut squares = Vec::with_capacity(cells.len());
    for cell in cells {
        let idx = match coarse.iter().position(|(f, _)| *f == cell.factor) {
            Some(i) => i,
            None => {
                coarse.push((cell.factor, coarsen(path.increments(), cell.factor)?));
                coarse.len() - 1
            }
        };
        match cell.scheme.integrate_final(&coarse[idx].1) {
            Ok(state) => {
                let dx = state.x - reference.x;
                let dv = state.v - reference.v;
                squares.push([dx * dx, dv * dv]);
            }
            Err(Error::NonFinite(_)) => {
                return Ok(Outcome::Failed(SampleFailure {
                    sample_index: sample,
                    method: Some(cell.method),
                    h: Some(cell.h),
                }))
            }
            Err(e) => return Err(e),
        }
    }
    Ok(Outcome::Squares(squares))
}

fn rms_with_ci(sum: f64, sum_sq: f64, n: usize) -> (f64, f64) {
    if n == 0 {
        return (f64::NAN, f64::NAN);
    }
    let nf = n as f64;
    let mean = sum / nf;
    let rms = mean.sqrt();
    if n < 2 {
        return (rms, f64::NAN);
    }
    if rms == 0.0 {
        return (0.0, 0.0);
    }
    let var = ((sum_sq - nf * mean * mean) / (nf - 1.0)).max(0.0);
    let se_mean = (var / nf).sqrt();
    (rms, Z95 * se_mean / (2.0 * rms))
}
