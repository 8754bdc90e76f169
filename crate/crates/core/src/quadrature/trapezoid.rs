use crate::error::{Error, Result};

use super::check_interval;

/// Composite trapezoid rule on `nodes` equispaced points.
pub fn trapezoid<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, nodes: usize) -> Result<f64> {
    check_interval(a, b)?;
    if nodes < 2 {
        return Err(Error::InvalidGrid(format!("trapezoid needs at least 2 nodes, got {nodes}")));
    }
    Ok(trapezoid_unchecked(f, a, b, nodes))
}

#[inline]
pub(crate) fn trapezoid_unchecked<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, nodes: usize) -> f64 {
    let panels = nodes - 1;
    let h = (b - a) / panels as f64;
    let interior: f64 = (1..panels).map(|i| f(a + i as f64 * h)).sum();
    h * (0.5 * (f(a) + f(b)) + interior)
}
