//! Rule-versus-oracle table for a fixed family of amplitudes.

use std::fmt::Write as _;

use clap::ValueEnum;
use osctrig_core::quadrature::{
    filon_cosine, filon_error_bound, filon_sine, lobatto5, piecewise_quadratic_bound, trapezoid,
};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// ψ = 1
    Constant,
    /// ψ = x
    Linear,
    /// ψ = x²
    Quadratic,
    /// ψ = x³/6, so |ψ'''| = 1
    Cubic,
    /// ψ = cos(3x)
    Cos3,
}

#[derive(Debug, Clone, Copy)]
enum Kernel {
    Sin,
    Cos,
}

impl Family {
    fn eval(self, x: f64) -> f64 {
        match self {
            Family::Constant => 1.0,
            Family::Linear => x,
            Family::Quadratic => x * x,
            Family::Cubic => x * x * x / 6.0,
            Family::Cos3 => (3.0 * x).cos(),
        }
    }

    fn third_derivative_bound(self) -> f64 {
        match self {
            Family::Constant | Family::Linear | Family::Quadratic => 0.0,
            Family::Cubic => 1.0,
            Family::Cos3 => 27.0,
        }
    }

    /// Closed-form `∫_a^b ψ(x) kernel(kx) dx`.
    fn exact(self, k: f64, a: f64, b: f64, kernel: Kernel) -> f64 {
        if let Family::Cos3 = self {
            // cos 3x · sin kx = ½[sin((k+3)x) + sin((k−3)x)], likewise for cos
            let part = |nu: f64| -> f64 {
                if nu == 0.0 {
                    return match kernel {
                        Kernel::Sin => 0.0,
                        Kernel::Cos => b - a,
                    };
                }
                match kernel {
                    Kernel::Sin => ((nu * a).cos() - (nu * b).cos()) / nu,
                    Kernel::Cos => ((nu * b).sin() - (nu * a).sin()) / nu,
                }
            };
            return 0.5 * (part(k + 3.0) + part(k - 3.0));
        }
        let (p, scale) = match self {
            Family::Constant => (0, 1.0),
            Family::Linear => (1, 1.0),
            Family::Quadratic => (2, 1.0),
            _ => (3, 1.0 / 6.0),
        };
        if k == 0.0 {
            return match kernel {
                Kernel::Sin => 0.0,
                Kernel::Cos => scale * (b.powi(p + 1) - a.powi(p + 1)) / (p + 1) as f64,
            };
        }
        scale * (monomial_antiderivative(p, k, b, kernel) - monomial_antiderivative(p, k, a, kernel))
    }
}

fn monomial_antiderivative(p: i32, k: f64, x: f64, kernel: Kernel) -> f64 {
    let (s, c) = (k * x).sin_cos();
    let (k2, k3, k4) = (k * k, k * k * k, k * k * k * k);
    match (kernel, p) {
        (Kernel::Sin, 0) => -c / k,
        (Kernel::Sin, 1) => s / k2 - x * c / k,
        (Kernel::Sin, 2) => 2.0 * x * s / k2 + (2.0 / k3 - x * x / k) * c,
        (Kernel::Sin, _) => (3.0 * x * x / k2 - 6.0 / k4) * s + (6.0 * x / k3 - x * x * x / k) * c,
        (Kernel::Cos, 0) => s / k,
        (Kernel::Cos, 1) => c / k2 + x * s / k,
        (Kernel::Cos, 2) => 2.0 * x * c / k2 + (x * x / k - 2.0 / k3) * s,
        (Kernel::Cos, _) => (3.0 * x * x / k2 - 6.0 / k4) * c + (x * x * x / k - 6.0 * x / k3) * s,
    }
}

pub const HEADER: &str = "kernel,k,nodes,a,b,theta,exact,filon_err,lobatto_err,trapezoid_err,filon_bound,pq_bound";

/// One row per kernel. `filon_bound` is `NA` outside the small-θ regime.
pub fn quadrature_check(family: Family, k: f64, nodes: usize, a: f64, b: f64) -> Result<String, CliError> {
    if !k.is_finite() || k < 0.0 {
        return Err(CliError::Config(format!("--k must be finite and nonnegative, got {k}")));
    }
    let psi = |x: f64| family.eval(x);
    let bad = |e: osctrig_core::Error| CliError::Config(e.to_string());
    let h_quad = (b - a) / (nodes.max(2) - 1) as f64;
    let theta = k * h_quad;
    let m = family.third_derivative_bound();
    let bound = match filon_error_bound(theta, m, a, b, h_quad) {
        Ok(est) => format!("{:e}", est.bound),
        Err(_) => "NA".to_string(),
    };
    let pq = piecewise_quadratic_bound(m, a, b, h_quad);

    let mut out = String::from(HEADER);
    out.push('\n');
    for (name, kernel) in [("sin", Kernel::Sin), ("cos", Kernel::Cos)] {
        let exact = family.exact(k, a, b, kernel);
        let (filon, lobatto, trap) = match kernel {
            Kernel::Sin => (
                filon_sine(psi, a, b, k, nodes).map_err(bad)?,
                lobatto5(|x| psi(x) * (k * x).sin(), a, b).map_err(bad)?,
                trapezoid(|x| psi(x) * (k * x).sin(), a, b, nodes).map_err(bad)?,
            ),
            Kernel::Cos => (
                filon_cosine(psi, a, b, k, nodes).map_err(bad)?,
                lobatto5(|x| psi(x) * (k * x).cos(), a, b).map_err(bad)?,
                trapezoid(|x| psi(x) * (k * x).cos(), a, b, nodes).map_err(bad)?,
            ),
        };
        writeln!(
            out,
            "{name},{k},{nodes},{a},{b},{theta},{exact:e},{:e},{:e},{:e},{bound},{pq:e}",
            (filon - exact).abs(),
            (lobatto - exact).abs(),
            (trap - exact).abs()
        )
        .expect("writing to a String");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms_match_fine_trapezoid() {
        for family in [Family::Constant, Family::Linear, Family::Quadratic, Family::Cubic, Family::Cos3] {
            for k in [0.0, 3.0, 7.5] {
                for (kernel, f) in [(Kernel::Sin, f64::sin as fn(f64) -> f64), (Kernel::Cos, f64::cos)] {
                    let fine = trapezoid(|x| family.eval(x) * f(k * x), -0.5, 1.0, 200_001).unwrap();
                    let exact = family.exact(k, -0.5, 1.0, kernel);
                    assert!((fine - exact).abs() < 1e-9, "{family:?} k={k} {kernel:?}: {fine} vs {exact}");
                }
            }
        }
    }
}
