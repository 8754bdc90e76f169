use crate::error::Result;

use super::check_interval;

/// Reference nodes on `[-1, 1]`: the endpoints, `±sqrt(3/7)` and 0.
pub const LOBATTO5_NODES: [f64; 5] = [
    -1.0,
    -0.654_653_670_707_977_1,
    0.0,
    0.654_653_670_707_977_1,
    1.0,
];

pub const LOBATTO5_WEIGHTS: [f64; 5] = [1.0 / 10.0, 49.0 / 90.0, 32.0 / 45.0, 49.0 / 90.0, 1.0 / 10.0];

/// Five-point Gauss–Lobatto rule on `[a, b]`, exact through degree 7.
pub fn lobatto5<F: Fn(f64) -> f64>(f: F, a: f64, b: f64) -> Result<f64> {
    check_interval(a, b)?;
    Ok(lobatto5_unchecked(f, a, b))
}

#[inline]
pub(crate) fn lobatto5_unchecked<F: Fn(f64) -> f64>(f: F, a: f64, b: f64) -> f64 {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let sum: f64 = LOBATTO5_NODES
        .iter()
        .zip(LOBATTO5_WEIGHTS.iter())
        .map(|(&x, &w)| {
            // hit the endpoints exactly
            let t = match x {
                -1.0 => a,
                1.0 => b,
                x => mid + half * x,
            };
            w * f(t)
        })
        .sum();
    half * sum
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nodes_are_sqrt_three_sevenths() {
        assert!((LOBATTO5_NODES[3] - (3.0f64 / 7.0).sqrt()).abs() < 1e-16);
        assert_eq!(LOBATTO5_WEIGHTS.iter().sum::<f64>(), 2.0);
    }

    #[test]
    fn constant_and_degree_seven() {
        assert_eq!(lobatto5(|_| 1.0, 0.0, 3.0).unwrap(), 3.0);
        let v = lobatto5(|x| x.powi(7), 0.0, 1.0).unwrap();
        assert!((v - 0.125).abs() < 1e-14, "{v}");
    }

    #[test]
    fn monomial_exactness_oracle() {
        // ∫_{-1}^{1} x^d dx = 2/(d+1) for even d, 0 for odd d
        for d in 0..=7 {
            let exact = if d % 2 == 0 { 2.0 / (d as f64 + 1.0) } else { 0.0 };
            let v = lobatto5(|x| x.powi(d), -1.0, 1.0).unwrap();
            assert!((v - exact).abs() < 1e-15, "degree {d}");
        }
        let v = lobatto5(|x| x.powi(8), -1.0, 1.0).unwrap();
        assert!((v - 2.0 / 9.0).abs() > 1e-3);
    }

    #[test]
    fn reversed_interval() {
        assert!(lobatto5(|x| x, 1.0, 1.0).is_err());
        assert!(lobatto5(|x| x, 2.0, 1.0).is_err());
    }
}
