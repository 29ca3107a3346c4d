use std::collections::BTreeMap;

use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::subspace::SubspaceState;
use crate::error::{Error, Result};

/// Measurement outcome counts keyed by basis index.
pub type Histogram = BTreeMap<usize, u64>;

/// Draws `samples` projective measurements in the computational basis, each
/// outcome `j` with probability `amplitude_j^2` (renormalized by the total).
pub fn sample_measurement(state: &SubspaceState, seed: u64, samples: u64) -> Result<Histogram> {
    if samples == 0 {
        return Err(Error::NoSamples);
    }
    let weights = state.probabilities();
    let dist = WeightedIndex::new(&weights)
        .map_err(|e| Error::DimensionMismatch(format!("cannot sample state: {e}")))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts = Histogram::new();
    for _ in 0..samples {
        *counts.entry(dist.sample(&mut rng)).or_insert(0) += 1;
    }
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_state_always_hits() {
        let mut amps = vec![0.0; 16];
        amps[7] = 1.0;
        let s = SubspaceState::from_amplitudes(2, amps, []).unwrap();
        let h = sample_measurement(&s, 1, 500).unwrap();
        assert_eq!(h, Histogram::from([(7, 500)]));
    }

    #[test]
    fn deterministic_for_seed() {
        let s = SubspaceState::init(2, [5]).unwrap().run_grover(1);
        let a = sample_measurement(&s, 42, 1000).unwrap();
        let b = sample_measurement(&s, 42, 1000).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.values().sum::<u64>(), 1000);
    }

    #[test]
    fn uniform_counts_within_three_sigma() {
        let s = SubspaceState::init(1, []).unwrap();
        let n = 40_000u64;
        let h = sample_measurement(&s, 7, n).unwrap();
        // binomial(40000, 1/4): mean 10000, sigma sqrt(7500)
        let sigma = (n as f64 * 0.25 * 0.75).sqrt();
        for k in 0..4 {
            let c = h.get(&k).copied().unwrap_or(0) as f64;
            assert!((c - 10_000.0).abs() <= 3.0 * sigma, "index {k}: {c}");
        }
    }

    #[test]
    fn zero_samples_rejected() {
        let s = SubspaceState::init(1, []).unwrap();
        assert_eq!(sample_measurement(&s, 0, 0), Err(Error::NoSamples));
    }
}
