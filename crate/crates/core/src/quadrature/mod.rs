//! Quadrature rules for the forcing integrals: Filon's oscillatory rules and
//! the generic 5-point Gauss–Lobatto and composite trapezoid baselines.

mod filon;
mod lobatto;
mod trapezoid;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use filon::{
    error_factor, filon_coefficients, filon_cosine, filon_error_bound, filon_sine,
    filon_sine_shifted, piecewise_quadratic_bound, FilonCoefficients, FilonErrorEstimate,
    FilonRule, SERIES_THRESHOLD,
};
pub use lobatto::{lobatto5, LOBATTO5_NODES, LOBATTO5_WEIGHTS};
pub use trapezoid::trapezoid;

/// Nodes per integration step used by the experiments.
pub const DEFAULT_NODES: usize = 5;

/// A quadrature rule for one integration step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum QuadratureRule {
    /// Filon sine and cosine rules on `nodes = 2n + 1` points.
    Filon { nodes: usize },
    Lobatto5,
    Trapezoid { nodes: usize },
}

impl QuadratureRule {
    pub fn validate(&self) -> Result<()> {
        match *self {
            QuadratureRule::Filon { nodes } => filon::validate_nodes(nodes).map(|_| ()),
            QuadratureRule::Lobatto5 => Ok(()),
            QuadratureRule::Trapezoid { nodes } if nodes < 2 => Err(Error::InvalidGrid(format!(
                "trapezoid needs at least 2 nodes, got {nodes}"
            ))),
            QuadratureRule::Trapezoid { .. } => Ok(()),
        }
    }

    pub fn node_count(&self) -> usize {
        match *self {
            QuadratureRule::Filon { nodes } | QuadratureRule::Trapezoid { nodes } => nodes,
            QuadratureRule::Lobatto5 => 5,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            QuadratureRule::Filon { .. } => "filon",
            QuadratureRule::Lobatto5 => "lobatto",
            QuadratureRule::Trapezoid { .. } => "trapezoid",
        }
    }
}

pub(crate) fn check_interval(a: f64, b: f64) -> Result<()> {
    if a.is_finite() && b.is_finite() && b > a {
        Ok(())
    } else {
        Err(Error::ReversedInterval { a, b })
    }
}
