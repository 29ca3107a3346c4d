//! Classical simulation of Grover-amplified quantum image matching.
//!
//! A big `2^n x 2^n` and a small `2^m x 2^m` grayscale image are encoded as
//! position/intensity registers. A bitwise XOR comparison and a
//! multi-controlled marking gate flag the big-image positions whose pixel
//! equals the small image's upper-left pixel. Amplitude amplification then
//! concentrates probability on those positions before a single measurement.
//!
//! * [`image`]: PGM loading, pair validation, register encoding.
//! * [`joint`]: structured simulation of comparison and marking.
//! * [`grover`]: phase flip, diffusion, the two-value recurrence, iteration
//!   planning, probability bounds and measurement sampling.
//! * [`oracle`]: dense gate-level simulation and classical exhaustive search,
//!   used to cross-check the structured path.
//! * [`report`]: the end-to-end pipeline and tabular reports.

pub mod error;
pub mod example;
pub mod fixtures;
pub mod grover;
pub mod image;
pub mod joint;
pub mod oracle;
pub mod report;

pub use error::{Error, Result};
pub use grover::{
    closed_form_t, plan_iterations, probability_lower_bound, recurrence_step, sample_measurement,
    AmplitudePair, IterationPlan, PlanMode, SubspaceState,
};
pub use image::{encode_gqir, load_pgm, validate_pair, GqirImage, Image, MatchDims};
pub use joint::{Branch, JointState, Stage};
pub use oracle::{classical_match, MatchMode, MatchResult};
pub use report::{run_match, MatchOptions, MatchReport};
