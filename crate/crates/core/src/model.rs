//! Problem data for the forced, noisy linear oscillator
//!
//! ```text
//! x'' = -omega^2 x + g(t) + epsilon * xi(t)
//! ```
//!
//! written as the first-order system `dX = V dt`,
//! `dV = (-omega^2 X + g(t)) dt + epsilon dW`.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{require_finite, Error, Result};

/// Relative tolerance used to reject resonant forcing frequencies in the
/// closed-form deterministic solution.
pub const RESONANCE_TOLERANCE: f64 = 1e-9;

/// Trigonometric shape of a forcing term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Phase {
    #[serde(rename = "cos", alias = "cosine")]
    Cosine,
    #[serde(rename = "sin", alias = "sine")]
    Sine,
}

/// One term `amplitude * cos(frequency * t)` or `amplitude * sin(frequency * t)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TrigTerm {
    pub amplitude: f64,
    pub frequency: f64,
    pub phase: Phase,
}

impl TrigTerm {
    pub fn cosine(amplitude: f64, frequency: f64) -> Self {
        Self { amplitude, frequency, phase: Phase::Cosine }
    }

    pub fn sine(amplitude: f64, frequency: f64) -> Self {
        Self { amplitude, frequency, phase: Phase::Sine }
    }

    #[inline]
    pub fn evaluate(&self, t: f64) -> f64 {
        match self.phase {
            Phase::Cosine => self.amplitude * (self.frequency * t).cos(),
            Phase::Sine => self.amplitude * (self.frequency * t).sin(),
        }
    }
}

type ScalarFn = dyn Fn(f64) -> f64 + Send + Sync;

/// An arbitrary forcing `g(t)`, optionally with a known bound on `|g'''|`.
#[derive(Clone)]
pub struct CallableForcing {
    f: Arc<ScalarFn>,
    third_derivative_bound: Option<f64>,
}

impl CallableForcing {
    pub fn new<F>(f: F) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        Self { f: Arc::new(f), third_derivative_bound: None }
    }

    /// Attaches a user-supplied bound `M >= sup |g'''|`.
    pub fn with_third_derivative_bound(mut self, bound: f64) -> Result<Self> {
        if !(bound >= 0.0 && bound.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "third_derivative_bound",
                reason: format!("must be finite and nonnegative, got {bound}"),
            });
        }
        self.third_derivative_bound = Some(bound);
        Ok(self)
    }

    #[inline]
    pub fn evaluate(&self, t: f64) -> f64 {
        (self.f)(t)
    }
}

impl fmt::Debug for CallableForcing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CallableForcing")
            .field("third_derivative_bound", &self.third_derivative_bound)
            .finish_non_exhaustive()
    }
}

/// The deterministic time-dependent force `g(t)`.
#[derive(Debug, Clone)]
pub enum Forcing {
    /// Finite sum of cosine/sine terms. The empty sum is `g = 0`.
    TrigSum(Vec<TrigTerm>),
    Callable(CallableForcing),
}

/// Where a third-derivative bound came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundSource {
    /// `sum |a_i| |nu_i|^3` for a trigonometric sum.
    Exact,
    /// Supplied with a callable forcing.
    Declared,
    /// Finite-difference probe; an estimate, not a guarantee.
    Estimated,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivativeBound {
    pub value: f64,
    pub source: BoundSource,
}

impl Forcing {
    pub fn zero() -> Self {
        Forcing::TrigSum(Vec::new())
    }

    pub fn callable<F>(f: F) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        Forcing::Callable(CallableForcing::new(f))
    }

    #[inline]
    pub fn evaluate(&self, t: f64) -> f64 {
        match self {
            Forcing::TrigSum(terms) => terms.iter().map(|term| term.evaluate(t)).sum(),
            Forcing::Callable(c) => c.evaluate(t),
        }
    }

    pub fn terms(&self) -> Option<&[TrigTerm]> {
        match self {
            Forcing::TrigSum(terms) => Some(terms),
            Forcing::Callable(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Forcing::TrigSum(terms) if terms.iter().all(|t| t.amplitude == 0.0))
    }

    /// Bound on `|g'''|` over `[t0, t1]`.
    pub fn third_derivative_bound(&self, t0: f64, t1: f64) -> DerivativeBound {
        match self {
            Forcing::TrigSum(terms) => DerivativeBound {
                value: terms.iter().map(|t| t.amplitude.abs() * t.frequency.abs().powi(3)).sum(),
                source: BoundSource::Exact,
            },
            Forcing::Callable(c) => match c.third_derivative_bound {
                Some(value) => DerivativeBound { value, source: BoundSource::Declared },
                None => DerivativeBound {
                    value: probe_third_derivative(|t| c.evaluate(t), t0, t1),
                    source: BoundSource::Estimated,
                },
            },
        }
    }
}

/// Maximum of a central fourth-order-stencil estimate of `|f'''|` over a
/// 257-point probe grid that stays inside `[t0, t1]`.
fn probe_third_derivative<F: Fn(f64) -> f64>(f: F, t0: f64, t1: f64) -> f64 {
    const PROBES: usize = 257;
    let width = t1 - t0;
    if !(width > 0.0) {
        return 0.0;
    }
    let d = 1e-3 * width;
    let lo = t0 + 2.0 * d;
    let span = width - 4.0 * d;
    (0..PROBES)
        .map(|i| {
            let x = lo + span * i as f64 / (PROBES - 1) as f64;
            let num = f(x + 2.0 * d) - 2.0 * f(x + d) + 2.0 * f(x - d) - f(x - 2.0 * d);
            (num / (2.0 * d * d * d)).abs()
        })
        .fold(0.0, f64::max)
}

/// Position, velocity and time stamp.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct State {
    pub x: f64,
    pub v: f64,
    pub t: f64,
}

impl State {
    pub fn new(x: f64, v: f64, t: f64) -> Result<Self> {
        require_finite(x, "state position")?;
        require_finite(v, "state velocity")?;
        require_finite(t, "state time")?;
        Ok(Self { x, v, t })
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.v.is_finite() && self.t.is_finite()
    }
}

/// A complete oscillator instance. Immutable once built.
#[derive(Debug, Clone)]
pub struct OscillatorProblem {
    omega: f64,
    forcing: Forcing,
    epsilon: f64,
    x0: f64,
    v0: f64,
    t_end: f64,
}

impl OscillatorProblem {
    pub fn new(
        omega: f64,
        forcing: Forcing,
        epsilon: f64,
        x0: f64,
        v0: f64,
        t_end: f64,
    ) -> Result<Self> {
        if !(omega > 0.0 && omega.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "omega",
                reason: format!("must be positive and finite, got {omega}"),
            });
        }
        if !(epsilon >= 0.0 && epsilon.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "epsilon",
                reason: format!("must be nonnegative and finite, got {epsilon}"),
            });
        }
        if !(t_end > 0.0 && t_end.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "t_end",
                reason: format!("must be positive and finite, got {t_end}"),
            });
        }
        require_finite(x0, "x0")?;
        require_finite(v0, "v0")?;
        if let Forcing::TrigSum(terms) = &forcing {
            for term in terms {
                require_finite(term.amplitude, "forcing amplitude")?;
                require_finite(term.frequency, "forcing frequency")?;
            }
        }
        Ok(Self { omega, forcing, epsilon, x0, v0, t_end })
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn forcing(&self) -> &Forcing {
        &self.forcing
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn x0(&self) -> f64 {
        self.x0
    }

    pub fn v0(&self) -> f64 {
        self.v0
    }

    pub fn t_end(&self) -> f64 {
        self.t_end
    }

    pub fn initial_state(&self) -> State {
        State { x: self.x0, v: self.v0, t: 0.0 }
    }

    pub fn with_omega(&self, omega: f64) -> Result<Self> {
        Self::new(omega, self.forcing.clone(), self.epsilon, self.x0, self.v0, self.t_end)
    }

    pub fn with_epsilon(&self, epsilon: f64) -> Result<Self> {
        Self::new(self.omega, self.forcing.clone(), epsilon, self.x0, self.v0, self.t_end)
    }
}

pub fn evaluate_forcing(forcing: &Forcing, t: f64) -> f64 {
    forcing.evaluate(t)
}

/// Closed-form solution of `x'' = -omega^2 x + g(t)` for a trigonometric-sum
/// forcing, ignoring the noise amplitude.
///
/// Each term `a cos(nu t)` contributes the particular solution
/// `a cos(nu t) / (omega^2 - nu^2)` (sine analogous); the homogeneous part
/// absorbs the initial-condition mismatch.
pub fn exact_deterministic_solution(problem: &OscillatorProblem, t: f64) -> Result<State> {
    require_finite(t, "time")?;
    let terms = problem.forcing.terms().ok_or(Error::ExactKernelUnavailable)?;
    let omega = problem.omega;
    let tol = RESONANCE_TOLERANCE * omega.max(1.0);
    if let Some(term) = terms.iter().find(|term| (term.frequency.abs() - omega).abs() < tol) {
        return Err(Error::Resonance { frequency: term.frequency, omega });
    }
    if t == 0.0 {
        return Ok(problem.initial_state());
    }

    let mut xp0 = 0.0;
    let mut vp0 = 0.0;
    let mut xp = 0.0;
    let mut vp = 0.0;
    for term in terms {
        let nu = term.frequency;
        let scale = term.amplitude / (omega * omega - nu * nu);
        let (s, c) = (nu * t).sin_cos();
        match term.phase {
            Phase::Cosine => {
                xp0 += scale;
                xp += scale * c;
                vp -= scale * nu * s;
            }
            Phase::Sine => {
                vp0 += scale * nu;
                xp += scale * s;
                vp += scale * nu * c;
            }
        }
    }
    let xh0 = problem.x0 - xp0;
    let vh0 = problem.v0 - vp0;
    let (s, c) = (omega * t).sin_cos();
    State::new(
        c * xh0 + s / omega * vh0 + xp,
        -omega * s * xh0 + c * vh0 + vp,
        t,
    )
}
