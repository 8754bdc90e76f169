//! Monte Carlo strong-error measurement.
//!
//! Every sample draws one fine Brownian path. The reference solution runs
//! the exact-kernel scheme on the fine grid; each `(method, h)` cell runs on
//! the same path coarsened to `h`. Samples are computed in parallel and
//! reduced in sample order, so reports depend only on the configuration.

mod config;
mod convergence;
mod reference;
mod strong;
mod sweep;

pub use config::{ExperimentConfig, DEFAULT_N_FINE, DEFAULT_SAMPLES};
pub use convergence::{convergence_order, FitOutcome, OrderFit};
pub use reference::{reference_solution, Reference};
pub use strong::{strong_error, ErrorRow, SampleFailure, StrongErrorReport};
pub use sweep::{stiffness_sweep, SweepRow, SweepTable};
