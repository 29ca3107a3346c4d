//! Independent checks for the structured simulation: a dense gate-level
//! simulator and the classical exhaustive matcher.

mod classical;
mod dense;

pub use classical::{classical_match, full_block_comparisons, MatchMode, MatchResult};
pub use dense::{
    dense_simulate_steps12, dense_simulate_steps12_with_cap, measure_dense_marked, DenseState,
    RegisterLayout, DEFAULT_QUBIT_CAP,
};
