//! Filon's rules for `∫ sin(kx) ψ(x) dx` and `∫ cos(kx) ψ(x) dx`.
//!
//! The amplitude `ψ` is replaced by its piecewise-quadratic interpolant on
//! `2n` equal panels (`2n + 1` nodes) and the product with the kernel is
//! integrated exactly. With panel width `h` and `θ = kh` the sine rule is
//!
//! ```text
//! h [ α (ψ(a) cos ka − ψ(b) cos kb) + β S_even + γ S_odd ]
//! S_even = Σ_{r=0..n} ψ(x_{2r}) sin(k x_{2r}) − ½ [ψ(a) sin ka + ψ(b) sin kb]
//! S_odd  = Σ_{r=1..n} ψ(x_{2r−1}) sin(k x_{2r−1})
//! ```
//!
//! and at `θ = 0` it reduces to composite Simpson.

use crate::error::{Error, Result};

use super::check_interval;

/// Below this `θ` the weights are evaluated from their Maclaurin series.
pub const SERIES_THRESHOLD: f64 = 1.0;

// Maclaurin coefficients in powers of θ², through θ²³.
const ALPHA_SERIES: [f64; 11] = [
    2.0 / 45.0,
    -2.0 / 315.0,
    2.0 / 4725.0,
    -8.0 / 467775.0,
    4.0 / 8513505.0,
    -2.0 / 212837625.0,
    2.0 / 13956067125.0,
    -16.0 / 9280784638125.0,
    4.0 / 238206805711875.0,
    -4.0 / 29585285269414875.0,
    4.0 / 4370553505709015625.0,
];

const BETA_SERIES: [f64; 12] = [
    2.0 / 3.0,
    2.0 / 15.0,
    -4.0 / 105.0,
    2.0 / 567.0,
    -4.0 / 22275.0,
    4.0 / 675675.0,
    -8.0 / 58046625.0,
    2.0 / 834978375.0,
    -4.0 / 123743795175.0,
    4.0 / 11464498670625.0,
    -8.0 / 2595200462229375.0,
    4.0 / 176102888508421875.0,
];

const GAMMA_SERIES: [f64; 12] = [
    4.0 / 3.0,
    -2.0 / 15.0,
    1.0 / 210.0,
    -1.0 / 11340.0,
    1.0 / 997920.0,
    -1.0 / 129729600.0,
    1.0 / 23351328000.0,
    -1.0 / 5557616064000.0,
    1.0 / 1689515283456000.0,
    -1.0 / 638636777146368000.0,
    1.0 / 293772917487329280000.0,
    -1.0 / 161575104618031104000000.0,
];

// sinθ/(3θ²) + cosθ/θ³ − sinθ/θ⁴ = θ · Σ c_j θ^{2j}
const ERROR_FACTOR_SERIES: [f64; 12] = [
    -1.0 / 45.0,
    1.0 / 630.0,
    -1.0 / 22680.0,
    1.0 / 1496880.0,
    -1.0 / 155675520.0,
    1.0 / 23351328000.0,
    -1.0 / 4763670912000.0,
    1.0 / 1267136462592000.0,
    -1.0 / 425757851430912000.0,
    1.0 / 176263750492397568000.0,
    -1.0 / 88131875246198784000000.0,
    1.0 / 52350333896242077696000000.0,
];

#[inline]
fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

/// Filon weights for a given `θ = k h`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FilonCoefficients {
    pub theta: f64,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl FilonCoefficients {
    pub fn series(theta: f64) -> Self {
        let t2 = theta * theta;
        Self {
            theta,
            alpha: theta * t2 * horner(&ALPHA_SERIES, t2),
            beta: horner(&BETA_SERIES, t2),
            gamma: horner(&GAMMA_SERIES, t2),
        }
    }

    pub fn direct(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        let t2 = theta * theta;
        let t3 = t2 * theta;
        Self {
            theta,
            alpha: 1.0 / theta + s * c / t2 - 2.0 * s * s / t3,
            beta: 2.0 * ((1.0 + c * c) / t2 - 2.0 * s * c / t3),
            gamma: 4.0 * (s / t3 - c / t2),
        }
    }
}

pub fn filon_coefficients(theta: f64) -> Result<FilonCoefficients> {
    if !(theta >= 0.0 && theta.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "theta",
            reason: format!("must be finite and nonnegative, got {theta}"),
        });
    }
    Ok(if theta < SERIES_THRESHOLD {
        FilonCoefficients::series(theta)
    } else {
        FilonCoefficients::direct(theta)
    })
}

/// The factor `H(θ) = |sinθ/(3θ²) + cosθ/θ³ − sinθ/θ⁴|` of the Filon error
/// bound. Tends to zero like `θ/45`.
pub fn error_factor(theta: f64) -> f64 {
    let theta = theta.abs();
    if theta < SERIES_THRESHOLD {
        (theta * horner(&ERROR_FACTOR_SERIES, theta * theta)).abs()
    } else {
        let (s, c) = theta.sin_cos();
        let t2 = theta * theta;
        (s / (3.0 * t2) + c / (t2 * theta) - s / (t2 * t2)).abs()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FilonErrorEstimate {
    pub h_quad: f64,
    pub theta: f64,
    pub h_theta: f64,
    pub m: f64,
    pub bound: f64,
}

/// `H(θ) M (b − a) h³`, the leading-order Filon error bound for `θ < 1`,
/// where `M ≥ sup |ψ'''|`.
pub fn filon_error_bound(theta: f64, m: f64, a: f64, b: f64, h_quad: f64) -> Result<FilonErrorEstimate> {
    let theta = theta.abs();
    if !theta.is_finite() || theta >= 1.0 {
        return Err(Error::RegimeViolation { theta });
    }
    if !(m >= 0.0 && m.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "m",
            reason: format!("must be finite and nonnegative, got {m}"),
        });
    }
    check_interval(a, b)?;
    if !(h_quad > 0.0 && h_quad.is_finite()) {
        return Err(Error::InvalidGrid(format!("panel width must be positive, got {h_quad}")));
    }
    let h_theta = error_factor(theta);
    Ok(FilonErrorEstimate {
        h_quad,
        theta,
        h_theta,
        m,
        bound: h_theta * m * (b - a) * h_quad.powi(3),
    })
}

/// Uniform bound `(b − a) δ` with `δ = M h³ / (9√3)`, the worst-case distance
/// between a function with `|ψ'''| ≤ M` and its quadratic interpolant on a
/// panel pair of width `2h`. Valid for every `θ`.
pub fn piecewise_quadratic_bound(m: f64, a: f64, b: f64, h_quad: f64) -> f64 {
    (b - a) * m * h_quad.powi(3) / (9.0 * 3f64.sqrt())
}

pub(crate) fn validate_nodes(nodes: usize) -> Result<usize> {
    if nodes < 3 || nodes.is_multiple_of(2) {
        return Err(Error::InvalidGrid(format!(
            "Filon rules need an odd node count >= 3, got {nodes}"
        )));
    }
    Ok((nodes - 1) / 2)
}

/// Filon rule with the weights fixed for one `(k, b − a, nodes)` triple, so
/// that many equal-width intervals can reuse them.
#[derive(Debug, Clone, Copy)]
pub struct FilonRule {
    k: f64,
    width: f64,
    nodes: usize,
    h_quad: f64,
    coeffs: FilonCoefficients,
}

impl FilonRule {
    pub fn new(k: f64, width: f64, nodes: usize) -> Result<Self> {
        let pairs = validate_nodes(nodes)?;
        if !(width > 0.0 && width.is_finite()) {
            return Err(Error::InvalidGrid(format!("interval width must be positive, got {width}")));
        }
        if !k.is_finite() {
            return Err(Error::NonFinite("kernel frequency"));
        }
        let h_quad = width / (2 * pairs) as f64;
        let coeffs = filon_coefficients(k.abs() * h_quad)?;
        Ok(Self { k, width, nodes, h_quad, coeffs })
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn h_quad(&self) -> f64 {
        self.h_quad
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn coefficients(&self) -> FilonCoefficients {
        self.coeffs
    }

    /// `(∫ sin(kx) ψ dx, ∫ cos(kx) ψ dx)` over `[a, a + width]`, sharing the
    /// amplitude evaluations.
    pub fn sine_cosine<F: Fn(f64) -> f64>(&self, psi: F, a: f64) -> (f64, f64) {
        let FilonCoefficients { alpha, beta, gamma, .. } = self.coeffs;
        // weights are for |k|; sin(-kx) = -sin(kx)
        let k = self.k.abs();
        let sign = self.k.signum();
        let last = self.nodes - 1;
        let b = a + self.width;

        let (mut se, mut so, mut ce, mut co) = (0.0, 0.0, 0.0, 0.0);
        let (mut end_s, mut end_c) = (0.0, 0.0);
        for r in 0..self.nodes {
            let x = if r == last { b } else { a + r as f64 * self.h_quad };
            let p = psi(x);
            let (s, c) = (k * x).sin_cos();
            if r % 2 == 0 {
                se += p * s;
                ce += p * c;
            } else {
                so += p * s;
                co += p * c;
            }
            if r == 0 {
                se -= 0.5 * p * s;
                ce -= 0.5 * p * c;
                end_s += p * c;
                end_c -= p * s;
            } else if r == last {
                se -= 0.5 * p * s;
                ce -= 0.5 * p * c;
                end_s -= p * c;
                end_c += p * s;
            }
        }
        let sine = self.h_quad * (alpha * end_s + beta * se + gamma * so);
        let cosine = self.h_quad * (alpha * end_c + beta * ce + gamma * co);
        (sign * sine, cosine)
    }

    /// `∫ sin(kx + z) ψ(x) dx` over `[a, a + width]`.
    pub fn shifted_sine<F: Fn(f64) -> f64>(&self, psi: F, a: f64, z: f64) -> f64 {
        let FilonCoefficients { alpha, beta, gamma, .. } = self.coeffs;
        // sin(-kx + z) = -sin(kx - z)
        let (k, z, sign) = if self.k < 0.0 { (-self.k, -z, -1.0) } else { (self.k, z, 1.0) };
        let last = self.nodes - 1;
        let b = a + self.width;
        let (mut even, mut odd, mut ends) = (0.0, 0.0, 0.0);
        for r in 0..self.nodes {
            let x = if r == last { b } else { a + r as f64 * self.h_quad };
            let p = psi(x);
            let f = p * (k * x + z).sin();
            if r % 2 == 0 {
                even += f;
            } else {
                odd += f;
            }
            if r == 0 {
                even -= 0.5 * f;
                ends += p * (k * x + z).cos();
            } else if r == last {
                even -= 0.5 * f;
                ends -= p * (k * x + z).cos();
            }
        }
        sign * self.h_quad * (alpha * ends + beta * even + gamma * odd)
    }
}

/// Filon's sine rule for `∫_a^b sin(kx) ψ(x) dx` on `nodes = 2n + 1` points.
pub fn filon_sine<F: Fn(f64) -> f64>(psi: F, a: f64, b: f64, k: f64, nodes: usize) -> Result<f64> {
    check_interval(a, b)?;
    Ok(FilonRule::new(k, b - a, nodes)?.sine_cosine(psi, a).0)
}

/// Filon's cosine rule for `∫_a^b cos(kx) ψ(x) dx` on `nodes = 2n + 1` points.
pub fn filon_cosine<F: Fn(f64) -> f64>(psi: F, a: f64, b: f64, k: f64, nodes: usize) -> Result<f64> {
    check_interval(a, b)?;
    Ok(FilonRule::new(k, b - a, nodes)?.sine_cosine(psi, a).1)
}

/// Phase-shifted sine rule for `∫_a^b sin(kx + z) ψ(x) dx`; `z = π/2` gives
/// the cosine rule.
pub fn filon_sine_shifted<F: Fn(f64) -> f64>(
    psi: F,
    a: f64,
    b: f64,
    k: f64,
    z: f64,
    nodes: usize,
) -> Result<f64> {
    check_interval(a, b)?;
    Ok(FilonRule::new(k, b - a, nodes)?.shifted_sine(psi, a, z))
}
