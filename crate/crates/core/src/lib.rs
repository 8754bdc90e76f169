//! Stochastic trigonometric integration of forced linear oscillators
//!
//! ```text
//! x'' = -ω² x + g(t) + ε ξ(t)
//! ```
//!
//! with exact propagation of the linear part, Filon quadrature of the forcing
//! integrals, and a Monte Carlo lab measuring strong errors against a
//! common-path fine-grid reference.

pub mod error;
pub mod integrator;
pub mod lab;
pub mod model;
pub mod quadrature;
pub mod wiener;

pub use error::{Error, Result};
pub use integrator::{rotation, KernelMode, Method, RotationMatrix, StepScheme};
pub use model::{
    evaluate_forcing, exact_deterministic_solution, CallableForcing, Forcing, OscillatorProblem,
    Phase, State, TrigTerm,
};
pub use quadrature::QuadratureRule;
pub use wiener::{coarsen, generate_path, WienerPath};
