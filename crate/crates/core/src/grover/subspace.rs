use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Real amplitude vector over the `2^(2n)` big-image positions, together
/// with the set of marked positions.
#[derive(Debug, Clone, PartialEq)]
pub struct SubspaceState {
    n: u32,
    amplitudes: Vec<f64>,
    marked: BTreeSet<usize>,
}

/// Elementary work done by [`SubspaceState::run_grover_counted`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GroverWork {
    pub iterations: u64,
    /// Amplitude reads and writes: one per marked entry for the phase flip,
    /// one per entry for the mean and one per entry for the reflection.
    pub amplitude_ops: u64,
}

impl SubspaceState {
    /// Uniform state, every amplitude `1 / 2^n`.
    pub fn init(n: u32, marked: impl IntoIterator<Item = usize>) -> Result<Self> {
        let size = 1usize << (2 * n);
        let amplitudes = vec![1.0 / (1u64 << n) as f64; size];
        Self::from_amplitudes(n, amplitudes, marked)
    }

    /// Wraps an arbitrary vector of length `2^(2n)`. The vector is not
    /// normalized.
    pub fn from_amplitudes(
        n: u32,
        amplitudes: Vec<f64>,
        marked: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        let size = 1usize << (2 * n);
        if amplitudes.len() != size {
            return Err(Error::DimensionMismatch(format!(
                "expected {size} amplitudes, got {}",
                amplitudes.len()
            )));
        }
        let marked: BTreeSet<usize> = marked.into_iter().collect();
        if let Some(&index) = marked.iter().find(|&&k| k >= size) {
            return Err(Error::IndexOutOfRange { index, size });
        }
        Ok(Self {
            n,
            amplitudes,
            marked,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Side length `a = 2^n`.
    pub fn side(&self) -> u64 {
        1u64 << self.n
    }

    pub fn amplitudes(&self) -> &[f64] {
        &self.amplitudes
    }

    pub fn marked(&self) -> &BTreeSet<usize> {
        &self.marked
    }

    pub fn len(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amplitudes.is_empty()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a * a).sum()
    }

    pub fn probabilities(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|a| a * a).collect()
    }

    /// Total probability of measuring a marked position.
    pub fn marked_probability(&self) -> f64 {
        self.marked
            .iter()
            .map(|&k| self.amplitudes[k] * self.amplitudes[k])
            .sum()
    }

    /// Index of the largest probability; ties go to the lowest index.
    pub fn top_index(&self) -> usize {
        let mut best = 0;
        for (k, a) in self.amplitudes.iter().enumerate() {
            if a * a > self.amplitudes[best] * self.amplitudes[best] {
                best = k;
            }
        }
        best
    }

    /// Mean amplitude, summed in index order.
    pub fn mean(&self) -> f64 {
        self.amplitudes.iter().sum::<f64>() / self.amplitudes.len() as f64
    }

    /// Negates the marked amplitudes (phase kickback through `|g>`).
    pub fn phase_flip(mut self) -> Self {
        self.flip_in_place();
        self
    }

    /// Inversion about the mean: `s_j <- 2 * mean - s_j`.
    pub fn diffuse(mut self) -> Self {
        self.diffuse_in_place();
        self
    }

    fn flip_in_place(&mut self) {
        for &k in &self.marked {
            self.amplitudes[k] = -self.amplitudes[k];
        }
    }

    fn diffuse_in_place(&mut self) {
        let twice_mean = 2.0 * self.mean();
        for s in &mut self.amplitudes {
            *s = twice_mean - *s;
        }
    }

    /// Applies `iterations` rounds of phase flip followed by diffusion.
    pub fn run_grover(self, iterations: u64) -> Self {
        self.run_grover_counted(iterations).0
    }

    pub fn run_grover_counted(mut self, iterations: u64) -> (Self, GroverWork) {
        let per_round = self.marked.len() as u64 + 2 * self.amplitudes.len() as u64;
        for _ in 0..iterations {
            self.flip_in_place();
            self.diffuse_in_place();
        }
        let work = GroverWork {
            iterations,
            amplitude_ops: per_round * iterations,
        };
        (self, work)
    }
}
