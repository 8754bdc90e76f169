use std::path::{Path, PathBuf};

use osctrig_core::lab::{ExperimentConfig, DEFAULT_N_FINE, DEFAULT_SAMPLES};
use osctrig_core::quadrature::DEFAULT_NODES;
use osctrig_core::{Forcing, Method, OscillatorProblem, TrigTerm};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// The JSON run file. Unknown keys are rejected at every level.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub problem: ProblemSection,
    pub experiment: ExperimentSection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<OutputSection>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSection {
    pub omega: f64,
    pub epsilon: f64,
    pub x0: f64,
    pub v0: f64,
    pub t_end: f64,
    #[serde(default)]
    pub forcing: Vec<TrigTerm>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentSection {
    pub methods: Vec<Method>,
    pub step_sizes: Vec<f64>,
    #[serde(default = "default_n_fine")]
    pub n_fine: usize,
    #[serde(default = "default_samples")]
    pub samples: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_nodes")]
    pub nodes: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSection {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<PathBuf>,
    #[serde(default)]
    pub format: OutputFormat,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
}

fn default_n_fine() -> usize {
    DEFAULT_N_FINE
}

fn default_samples() -> usize {
    DEFAULT_SAMPLES
}

fn default_nodes() -> usize {
    DEFAULT_NODES
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
    }

    /// Parses a run file; the error names the offending line and column or
    /// field.
    pub fn parse(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(|e| e.to_string())
    }

    pub fn problem(&self) -> Result<OscillatorProblem, CliError> {
        let p = &self.problem;
        let forcing = Forcing::TrigSum(p.forcing.clone());
        OscillatorProblem::new(p.omega, forcing, p.epsilon, p.x0, p.v0, p.t_end)
            .map_err(|e| CliError::Config(format!("problem: {e}")))
    }

    /// Builds and validates the experiment.
    pub fn experiment(&self) -> Result<ExperimentConfig, CliError> {
        let e = &self.experiment;
        let config = ExperimentConfig {
            problem: self.problem()?,
            methods: e.methods.clone(),
            step_sizes: e.step_sizes.clone(),
            n_fine: e.n_fine,
            samples: e.samples,
            seed: e.seed,
            nodes: e.nodes,
        };
        config.validate().map_err(|e| CliError::Config(format!("experiment: {e}")))?;
        Ok(config)
    }

    pub fn output_path(&self) -> Option<&Path> {
        self.output.as_ref().and_then(|o| o.path.as_deref())
    }
}
