//! Reproducible Brownian increments on a fine grid.
//!
//! Every path is keyed by `(seed, sample_index)`: the seed initialises a
//! ChaCha20 generator and the sample index selects its stream, so any sample
//! can be regenerated independently of the order in which samples are drawn.
//! Standard normals come from the ziggurat transform in `rand_distr`.

use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct WienerPath {
    t_end: f64,
    seed: u64,
    sample_index: u64,
    increments: Vec<f64>,
}

/// Draws `n_fine` increments `W(t_{i+1}) - W(t_i) ~ N(0, t_end / n_fine)`.
pub fn generate_path(seed: u64, sample_index: u64, n_fine: usize, t_end: f64) -> Result<WienerPath> {
    if n_fine == 0 || !n_fine.is_power_of_two() {
        return Err(Error::InvalidWienerGrid(format!("n_fine must be a power of two, got {n_fine}")));
    }
    if !(t_end > 0.0 && t_end.is_finite()) {
        return Err(Error::InvalidWienerGrid(format!("t_end must be positive, got {t_end}")));
    }
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    rng.set_stream(sample_index);
    let scale = (t_end / n_fine as f64).sqrt();
    let increments = (0..n_fine)
        .map(|_| {
            let z: f64 = StandardNormal.sample(&mut rng);
            scale * z
        })
        .collect();
    Ok(WienerPath { t_end, seed, sample_index, increments })
}

impl WienerPath {
    pub fn increments(&self) -> &[f64] {
        &self.increments
    }

    pub fn n_fine(&self) -> usize {
        self.increments.len()
    }

    pub fn t_end(&self) -> f64 {
        self.t_end
    }

    pub fn dt(&self) -> f64 {
        self.t_end / self.n_fine() as f64
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn sample_index(&self) -> u64 {
        self.sample_index
    }

    /// `W(t_end)`, summed in the same order as full coarsening.
    pub fn endpoint(&self) -> f64 {
        coarsen(&self.increments, self.n_fine()).map(|w| w[0]).unwrap_or(0.0)
    }

    pub fn coarsen(&self, factor: usize) -> Result<Vec<f64>> {
        coarsen(&self.increments, factor)
    }
}

/// Sums each run of `factor` consecutive increments.
///
/// Power-of-two factors are summed by repeated pairwise halving, so
/// coarsening in stages reproduces a single coarsening bit-for-bit.
pub fn coarsen(increments: &[f64], factor: usize) -> Result<Vec<f64>> {
    let len = increments.len();
    if factor == 0 || !len.is_multiple_of(factor) {
        return Err(Error::InvalidCoarsening { factor, len });
    }
    if factor.is_power_of_two() {
        let mut out = increments.to_vec();
        let mut f = factor;
        while f > 1 {
            out = out.chunks_exact(2).map(|p| p[0] + p[1]).collect();
            f /= 2;
        }
        Ok(out)
    } else {
        Ok(increments.chunks_exact(factor).map(|c| c.iter().sum()).collect())
    }
}
