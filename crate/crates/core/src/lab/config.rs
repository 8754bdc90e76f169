use crate::error::{Error, Result};
use crate::integrator::Method;
use crate::model::OscillatorProblem;
use crate::quadrature::DEFAULT_NODES;

pub const DEFAULT_SAMPLES: usize = 500;
pub const DEFAULT_N_FINE: usize = 1 << 14;

const GRID_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub problem: OscillatorProblem,
    pub methods: Vec<Method>,
    pub step_sizes: Vec<f64>,
    pub n_fine: usize,
    pub samples: usize,
    pub seed: u64,
    /// Quadrature nodes per step for Filon and trapezoid.
    pub nodes: usize,
}

impl ExperimentConfig {
    pub fn new(problem: OscillatorProblem, methods: Vec<Method>, step_sizes: Vec<f64>) -> Self {
        Self {
            problem,
            methods,
            step_sizes,
            n_fine: DEFAULT_N_FINE,
            samples: DEFAULT_SAMPLES,
            seed: 0,
            nodes: DEFAULT_NODES,
        }
    }

    pub fn fine_step(&self) -> f64 {
        self.problem.t_end() / self.n_fine as f64
    }

    /// Number of fine increments per step of size `h`.
    pub fn coarsening_factor(&self, h: f64) -> Result<usize> {
        let ratio = h / self.fine_step();
        let factor = ratio.round();
        if factor < 1.0 || (ratio - factor).abs() > GRID_TOLERANCE * ratio {
            return Err(Error::InvalidConfig(format!(
                "step size {h} is not a multiple of the fine step {}",
                self.fine_step()
            )));
        }
        let factor = factor as usize;
        if !self.n_fine.is_multiple_of(factor) {
            return Err(Error::InvalidConfig(format!("step size {h} does not divide t_end")));
        }
        Ok(factor)
    }

    pub fn validate(&self) -> Result<()> {
        if self.methods.is_empty() {
            return Err(Error::InvalidConfig("no methods given".into()));
        }
        for (i, m) in self.methods.iter().enumerate() {
            if self.methods[..i].contains(m) {
                return Err(Error::InvalidConfig(format!("duplicate method `{m}`")));
            }
        }
        if self.step_sizes.is_empty() {
            return Err(Error::InvalidConfig("no step sizes given".into()));
        }
        if self.n_fine == 0 || !self.n_fine.is_power_of_two() {
            return Err(Error::InvalidConfig(format!(
                "n_fine must be a power of two, got {}",
                self.n_fine
            )));
        }
        if self.samples == 0 {
            return Err(Error::InvalidConfig("samples must be positive".into()));
        }
        for (i, &h) in self.step_sizes.iter().enumerate() {
            if !(h > 0.0 && h.is_finite()) {
                return Err(Error::InvalidConfig(format!("step size must be positive, got {h}")));
            }
            if self.step_sizes[..i].contains(&h) {
                return Err(Error::InvalidConfig(format!("duplicate step size {h}")));
            }
            self.coarsening_factor(h)?;
        }
        for m in &self.methods {
            if let crate::KernelMode::Quadrature(rule) = m.kernel_mode(self.nodes) {
                rule.validate().map_err(|e| Error::InvalidConfig(e.to_string()))?;
            }
        }
        if self.methods.contains(&Method::Exact) && self.problem.forcing().terms().is_none() {
            return Err(Error::InvalidConfig(
                "method `exact` requires a trigonometric-sum forcing".into(),
            ));
        }
        Ok(())
    }
}
