use thiserror::Error;

/// Errors raised by the oscillator model, quadrature rules, integrator and
/// error lab.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("forcing frequency {frequency} resonates with omega = {omega}")]
    Resonance { frequency: f64, omega: f64 },

    #[error("invalid quadrature grid: {0}")]
    InvalidGrid(String),

    #[error("reversed or empty interval [{a}, {b}]")]
    ReversedInterval { a: f64, b: f64 },

    #[error("error bound requires theta < 1, got theta = {theta}")]
    RegimeViolation { theta: f64 },

    #[error("invalid Wiener grid: {0}")]
    InvalidWienerGrid(String),

    #[error("coarsening factor {factor} does not divide {len} increments")]
    InvalidCoarsening { factor: usize, len: usize },

    #[error("time {t} is not on the mesh with step {h}")]
    MeshMisalignment { t: f64, h: f64 },

    #[error("expected {expected} increments, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("exact trigonometric kernel requires a trigonometric-sum forcing")]
    ExactKernelUnavailable,

    #[error("invalid experiment configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn require_finite(value: f64, what: &'static str) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite(what))
    }
}
