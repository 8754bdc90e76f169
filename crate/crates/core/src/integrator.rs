//! One-step stochastic trigonometric scheme.
//!
//! ```text
//! (X, V)_{n+1} = R(hω) (X, V)_n
//!              + ∫_{t_n}^{t_{n+1}} (ω⁻¹ sin((t_{n+1}−s)ω), cos((t_{n+1}−s)ω)) g(s) ds
//!              + ε (ω⁻¹ sin(hω), cos(hω)) ΔW_n
//! ```
//!
//! The linear flow is propagated exactly; only the forcing integral is
//! approximated, by the kernel mode chosen for the scheme.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{OscillatorProblem, Phase, State, TrigTerm};
use crate::quadrature::{
    filon_error_bound, lobatto5, trapezoid, FilonRule, QuadratureRule, DEFAULT_NODES,
};

const MESH_TOLERANCE: f64 = 1e-9;

/// The exact flow `R(tω)` of `x'' = -ω² x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationMatrix {
    pub c: f64,
    pub s: f64,
    pub omega: f64,
}

pub fn rotation(omega: f64, t: f64) -> Result<RotationMatrix> {
    if !(omega > 0.0 && omega.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "omega",
            reason: format!("must be positive and finite, got {omega}"),
        });
    }
    let (s, c) = (omega * t).sin_cos();
    Ok(RotationMatrix { c, s, omega })
}

impl RotationMatrix {
    /// `[[c, s/ω], [−ω s, c]]`
    pub fn entries(&self) -> [[f64; 2]; 2] {
        [[self.c, self.s / self.omega], [-self.omega * self.s, self.c]]
    }

    pub fn determinant(&self) -> f64 {
        let [[a, b], [c, d]] = self.entries();
        a * d - b * c
    }

    #[inline]
    pub fn apply(&self, x: f64, v: f64) -> (f64, f64) {
        let [[a, b], [c, d]] = self.entries();
        (a * x + b * v, c * x + d * v)
    }
}

/// How the forcing integral of each step is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelMode {
    Quadrature(QuadratureRule),
    /// Closed-form integrals; needs a trigonometric-sum forcing.
    ExactTrig,
}

/// Method tags used by experiment configurations and reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Filon,
    Lobatto,
    Trapezoid,
    Exact,
}

impl Method {
    pub fn kernel_mode(self, nodes: usize) -> KernelMode {
        match self {
            Method::Filon => KernelMode::Quadrature(QuadratureRule::Filon { nodes }),
            Method::Lobatto => KernelMode::Quadrature(QuadratureRule::Lobatto5),
            Method::Trapezoid => KernelMode::Quadrature(QuadratureRule::Trapezoid { nodes }),
            Method::Exact => KernelMode::ExactTrig,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Filon => "filon",
            Method::Lobatto => "lobatto",
            Method::Trapezoid => "trapezoid",
            Method::Exact => "exact",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "filon" => Ok(Method::Filon),
            "lobatto" => Ok(Method::Lobatto),
            "trapezoid" => Ok(Method::Trapezoid),
            "exact" => Ok(Method::Exact),
            other => Err(Error::InvalidParameter {
                name: "method",
                reason: format!("unknown method `{other}`"),
            }),
        }
    }
}

/// A uniform-mesh scheme for one problem, step size and kernel mode.
///
/// The rotation, the Filon weights and the forcing integrals of every step
/// are computed once at construction.
#[derive(Debug, Clone)]
pub struct StepScheme {
    problem: OscillatorProblem,
    h: f64,
    n_steps: usize,
    mode: KernelMode,
    rotation: RotationMatrix,
    filon: Option<FilonRule>,
    // (ω⁻¹ I_sin, I_cos) per step
    drive: Vec<[f64; 2]>,
}

impl StepScheme {
    pub fn new(problem: OscillatorProblem, h: f64, mode: KernelMode) -> Result<Self> {
        if !(h > 0.0 && h.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "h",
                reason: format!("must be positive and finite, got {h}"),
            });
        }
        let ratio = problem.t_end() / h;
        let n_steps = ratio.round();
        if n_steps < 1.0 || (ratio - n_steps).abs() > MESH_TOLERANCE * ratio {
            return Err(Error::InvalidParameter {
                name: "h",
                reason: format!("step {h} does not divide t_end = {}", problem.t_end()),
            });
        }
        let n_steps = n_steps as usize;
        let filon = match mode {
            KernelMode::Quadrature(rule) => {
                rule.validate()?;
                match rule {
                    QuadratureRule::Filon { nodes } => Some(FilonRule::new(problem.omega(), h, nodes)?),
                    _ => None,
                }
            }
            KernelMode::ExactTrig => {
                if problem.forcing().terms().is_none() {
                    return Err(Error::ExactKernelUnavailable);
                }
                None
            }
        };
        let rotation = rotation(problem.omega(), h)?;
        let mut scheme = Self { problem, h, n_steps, mode, rotation, filon, drive: Vec::new() };
        let omega = scheme.problem.omega();
        scheme.drive = (0..n_steps)
            .map(|n| {
                let (i_sin, i_cos) = scheme.step_integrals_at(n);
                [i_sin / omega, i_cos]
            })
            .collect();
        Ok(scheme)
    }

    /// Filon scheme with the default 5 nodes.
    pub fn filon(problem: OscillatorProblem, h: f64) -> Result<Self> {
        Self::new(problem, h, Method::Filon.kernel_mode(DEFAULT_NODES))
    }

    pub fn exact(problem: OscillatorProblem, h: f64) -> Result<Self> {
        Self::new(problem, h, KernelMode::ExactTrig)
    }

    pub fn problem(&self) -> &OscillatorProblem {
        &self.problem
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn n_steps(&self) -> usize {
        self.n_steps
    }

    pub fn mode(&self) -> KernelMode {
        self.mode
    }

    pub fn rotation(&self) -> RotationMatrix {
        self.rotation
    }

    fn mesh_index(&self, t: f64) -> Result<usize> {
        let ratio = t / self.h;
        let n = ratio.round();
        if !t.is_finite() || n < 0.0 || (ratio - n).abs() > MESH_TOLERANCE * ratio.abs().max(1.0) {
            return Err(Error::MeshMisalignment { t, h: self.h });
        }
        Ok(n as usize)
    }

    /// `(I_sin, I_cos)`: the integrals of `sin((t_{n+1}−s)ω) g(s)` and
    /// `cos((t_{n+1}−s)ω) g(s)` over `[t_n, t_n + h]`, evaluated by the
    /// scheme's kernel mode.
    pub fn deterministic_step_integrals(&self, t_n: f64) -> Result<(f64, f64)> {
        let n = self.mesh_index(t_n)?;
        if n >= self.n_steps {
            return Err(Error::MeshMisalignment { t: t_n, h: self.h });
        }
        Ok(self.step_integrals_at(n))
    }

    fn step_integrals_at(&self, n: usize) -> (f64, f64) {
        let a = n as f64 * self.h;
        let b = (n + 1) as f64 * self.h;
        let omega = self.problem.omega();
        let forcing = self.problem.forcing();
        if forcing.is_zero() {
            return (0.0, 0.0);
        }
        match self.mode {
            KernelMode::ExactTrig => {
                let terms = forcing.terms().expect("checked at construction");
                exact_trig_integrals(terms, omega, a, b)
            }
            KernelMode::Quadrature(QuadratureRule::Filon { .. }) => {
                let rule = self.filon.as_ref().expect("built at construction");
                let (s, c) = rule.sine_cosine(|t| forcing.evaluate(t), a);
                let (sb, cb) = (omega * b).sin_cos();
                (sb * c - cb * s, cb * c + sb * s)
            }
            KernelMode::Quadrature(rule) => {
                let ks = |s: f64| ((b - s) * omega).sin() * forcing.evaluate(s);
                let kc = |s: f64| ((b - s) * omega).cos() * forcing.evaluate(s);
                // interval and node count validated at construction
                match rule {
                    QuadratureRule::Lobatto5 => {
                        (lobatto5(ks, a, b).unwrap_or(f64::NAN), lobatto5(kc, a, b).unwrap_or(f64::NAN))
                    }
                    QuadratureRule::Trapezoid { nodes } => (
                        trapezoid(ks, a, b, nodes).unwrap_or(f64::NAN),
                        trapezoid(kc, a, b, nodes).unwrap_or(f64::NAN),
                    ),
                    QuadratureRule::Filon { .. } => unreachable!(),
                }
            }
        }
    }

    /// Advances `state` by one step driven by the Wiener increment `dw`.
    pub fn step(&self, state: &State, dw: f64) -> Result<State> {
        let n = self.mesh_index(state.t)?;
        if n >= self.n_steps {
            return Err(Error::MeshMisalignment { t: state.t, h: self.h });
        }
        let next = self.advance(n, state.x, state.v, dw);
        State::new(next.0, next.1, (n + 1) as f64 * self.h)
    }

    #[inline]
    fn advance(&self, n: usize, x: f64, v: f64, dw: f64) -> (f64, f64) {
        let (rx, rv) = self.rotation.apply(x, v);
        let [dx, dv] = self.drive[n];
        let eps = self.problem.epsilon();
        let RotationMatrix { c, s, omega } = self.rotation;
        (rx + dx + eps * (s / omega) * dw, rv + dv + eps * c * dw)
    }

    fn check_increments(&self, increments: &[f64]) -> Result<()> {
        if increments.len() != self.n_steps {
            return Err(Error::LengthMismatch { expected: self.n_steps, got: increments.len() });
        }
        Ok(())
    }

    /// States at `t_0, ..., t_N` starting from the problem's initial data.
    pub fn integrate(&self, increments: &[f64]) -> Result<Vec<State>> {
        self.check_increments(increments)?;
        let mut out = Vec::with_capacity(self.n_steps + 1);
        let (mut x, mut v) = (self.problem.x0(), self.problem.v0());
        out.push(self.problem.initial_state());
        for (n, &dw) in increments.iter().enumerate() {
            (x, v) = self.advance(n, x, v, dw);
            out.push(State::new(x, v, (n + 1) as f64 * self.h)?);
        }
        Ok(out)
    }

    /// Final state only, without storing the trajectory.
    pub fn integrate_final(&self, increments: &[f64]) -> Result<State> {
        self.check_increments(increments)?;
        let (mut x, mut v) = (self.problem.x0(), self.problem.v0());
        for (n, &dw) in increments.iter().enumerate() {
            (x, v) = self.advance(n, x, v, dw);
        }
        State::new(x, v, self.n_steps as f64 * self.h)
    }

    /// Worst-case position error at `t_end` caused by Filon quadrature,
    /// from the per-step Filon bound. `None` unless the scheme uses Filon
    /// with `θ < 1`.
    pub fn accumulated_filon_bound(&self) -> Option<f64> {
        let rule = self.filon.as_ref()?;
        let t_end = self.problem.t_end();
        let m = self.problem.forcing().third_derivative_bound(0.0, t_end).value;
        let h_quad = rule.h_quad();
        let est = filon_error_bound(rule.coefficients().theta, m, 0.0, self.h, h_quad).ok()?;
        // each step: |δI_sin|, |δI_cos| <= 2 * bound, both reach X through ω⁻¹
        Some(self.n_steps as f64 * 4.0 * est.bound / self.problem.omega())
    }
}

/// `∫_a^b e^{i(c + k s)} ds = (b − a) sinc(k(b − a)/2) e^{i(c + k m)}` with
/// `m` the midpoint; stable for every `k`.
#[inline]
fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-4 {
        let x2 = x * x;
        1.0 - x2 / 6.0 + x2 * x2 / 120.0
    } else {
        x.sin() / x
    }
}

/// Closed-form forcing integrals for a trigonometric sum, via product-to-sum
/// identities.
pub(crate) fn exact_trig_integrals(terms: &[TrigTerm], omega: f64, a: f64, b: f64) -> (f64, f64) {
    let len = b - a;
    let mid = 0.5 * (a + b);
    let half = 0.5 * omega * len;
    let (mut i_sin, mut i_cos) = (0.0, 0.0);
    for term in terms {
        let nu = term.frequency;
        let weight = 0.5 * term.amplitude * len;
        let lo = sinc(0.5 * (nu - omega) * len);
        let hi = sinc(0.5 * (nu + omega) * len);
        let (su, cu) = (half + nu * mid).sin_cos();
        let (sw, cw) = (half - nu * mid).sin_cos();
        match term.phase {
            Phase::Cosine => {
                i_sin += weight * (lo * su + hi * sw);
                i_cos += weight * (lo * cu + hi * cw);
            }
            Phase::Sine => {
                i_sin += weight * (hi * cw - lo * cu);
                i_cos += weight * (lo * su - hi * sw);
            }
        }
    }
    (i_sin, i_cos)
}
