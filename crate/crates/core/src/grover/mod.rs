//! Amplitude amplification over the big-image position register.

mod plan;
mod recurrence;
mod sample;
mod subspace;

pub use plan::{
    doubled_quartic, exact_iterations, fit_iterations, optimal_iterations, plan_iterations,
    radical_cross_check, IterationPlan, PlanMode, RadicalCheck, MAX_SIDE,
};
pub use recurrence::{
    closed_form_t, pair_at, probability_lower_bound, ratio_to_f64, recurrence, recurrence_step,
    AmplitudePair, ExactPair, Rational,
};
pub use sample::{sample_measurement, Histogram};
pub use subspace::{GroverWork, SubspaceState};
