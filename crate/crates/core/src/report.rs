//! End-to-end matching and the tabular reports built on the engine.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grover::{
    exact_iterations, fit_iterations, optimal_iterations, pair_at, plan_iterations,
    probability_lower_bound, recurrence, sample_measurement, Histogram, IterationPlan, PlanMode,
    SubspaceState,
};
use crate::image::{encode_gqir, validate_pair, Image, MatchDims};
use crate::joint;
use crate::oracle::{classical_match, full_block_comparisons, MatchMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatchOptions {
    pub mode: PlanMode,
    /// Overrides the planned iteration count.
    pub iterations: Option<u64>,
    pub samples: u64,
    pub seed: u64,
    pub verify: bool,
    pub timings: bool,
}

impl Default for MatchOptions {
    fn default() -> Self {
        Self {
            mode: PlanMode::PaperExact,
            iterations: None,
            samples: 1,
            seed: 0,
            verify: false,
            timings: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlanSummary {
    pub mode: PlanMode,
    pub iterations: u64,
    /// Probability mass on the marked positions after the run.
    pub predicted_success: f64,
    pub lower_bound: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatchSummary {
    /// `None` when nothing was marked.
    pub top_index: Option<usize>,
    pub x: Option<usize>,
    pub y: Option<usize>,
    pub marked_count: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verification {
    pub full_block: Vec<(usize, usize)>,
    pub anchor: Vec<(usize, usize)>,
    /// Whether the top location is one of the full-block matches.
    pub top_in_full_block: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleSummary {
    pub seed: u64,
    pub counts: Histogram,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatchReport {
    pub dims: MatchDims,
    pub plan: PlanSummary,
    pub result: MatchSummary,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verify: Option<Verification>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<SampleSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, f64>>,
}

impl MatchReport {
    pub fn is_no_match(&self) -> bool {
        self.result.marked_count == 0
    }
}

/// A finished run: the report and, unless nothing was marked, the final
/// amplitude vector.
#[derive(Debug, Clone)]
pub struct MatchOutcome {
    pub report: MatchReport,
    pub final_state: Option<SubspaceState>,
}

struct Stopwatch {
    last: Instant,
    laps: BTreeMap<String, f64>,
}

impl Stopwatch {
    fn new() -> Self {
        Self {
            last: Instant::now(),
            laps: BTreeMap::new(),
        }
    }

    fn lap(&mut self, name: &str) {
        let now = Instant::now();
        self.laps
            .insert(name.to_string(), (now - self.last).as_secs_f64() * 1e3);
        self.last = now;
    }
}

/// Encodes, marks, amplifies and measures.
///
/// An empty marked set is detected before amplification: the state would
/// stay uniform, so no rounds are run and nothing is sampled.
pub fn run_match(big: &Image, small: &Image, opts: &MatchOptions) -> Result<MatchOutcome> {
    let mut clock = Stopwatch::new();
    let dims = validate_pair(big, small)?;
    let a_reg = encode_gqir(big, &dims)?;
    let b_reg = encode_gqir(small, &dims)?;
    clock.lap("encode");

    let marked = joint::mark(&a_reg, &b_reg)?;
    clock.lap("mark");

    let planned = plan_iterations(dims.a, opts.mode)?;
    let iterations = opts.iterations.unwrap_or(planned.iterations);

    let verify = if opts.verify {
        let full = classical_match(big, small, MatchMode::FullBlock)?;
        let anchor = classical_match(big, small, MatchMode::AnchorPixel)?;
        clock.lap("verify");
        Some((full.locations, anchor.locations))
    } else {
        None
    };

    if marked.is_empty() {
        let report = MatchReport {
            dims,
            plan: PlanSummary {
                mode: opts.mode,
                iterations,
                predicted_success: 0.0,
                lower_bound: planned.lower_bound,
            },
            result: MatchSummary {
                top_index: None,
                x: None,
                y: None,
                marked_count: 0,
            },
            verify: verify.map(|(full_block, anchor)| Verification {
                full_block,
                anchor,
                top_in_full_block: false,
            }),
            samples: None,
            timings_ms: opts.timings.then_some(clock.laps),
        };
        return Ok(MatchOutcome {
            report,
            final_state: None,
        });
    }

    let state = SubspaceState::init(dims.n, marked.iter().copied())?.run_grover(iterations);
    clock.lap("grover");

    let top = state.top_index();
    let (x, y) = dims.big_xy(top);
    let samples = if opts.samples > 0 {
        let counts = sample_measurement(&state, opts.seed, opts.samples)?;
        clock.lap("sample");
        Some(SampleSummary {
            seed: opts.seed,
            counts,
        })
    } else {
        None
    };

    let report = MatchReport {
        dims,
        plan: PlanSummary {
            mode: opts.mode,
            iterations,
            predicted_success: state.marked_probability(),
            lower_bound: planned.lower_bound,
        },
        result: MatchSummary {
            top_index: Some(top),
            x: Some(x),
            y: Some(y),
            marked_count: marked.len(),
        },
        verify: verify.map(|(full_block, anchor)| Verification {
            top_in_full_block: full_block.contains(&(x, y)),
            full_block,
            anchor,
        }),
        samples,
        timings_ms: opts.timings.then_some(clock.laps),
    };
    Ok(MatchOutcome {
        report,
        final_state: Some(state),
    })
}

/// One row of the iteration-count table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Table1Row {
    pub a: u64,
    pub exact: u64,
    pub fit: u64,
    pub optimal: u64,
    /// Success probability at the exact count.
    pub predicted_success: f64,
    pub lower_bound: f64,
}

/// Rows for `a = 4, 8, ..., max_a`.
pub fn table1(max_a: u64) -> Result<Vec<Table1Row>> {
    if max_a < 4 || !max_a.is_power_of_two() {
        return Err(Error::InvalidSide(max_a));
    }
    let mut rows = Vec::new();
    let mut a = 4u64;
    while a <= max_a {
        let exact = exact_iterations(a)?;
        rows.push(Table1Row {
            a,
            exact,
            fit: fit_iterations(a),
            optimal: optimal_iterations(a),
            predicted_success: pair_at(a, exact).success_probability(),
            lower_bound: probability_lower_bound(a as f64),
        });
        a *= 2;
    }
    Ok(rows)
}

/// Long-format planner rows (one per side and mode) for `a = 4, ..., max_a`.
pub fn planner_rows(max_a: u64, modes: &[PlanMode]) -> Result<Vec<IterationPlan>> {
    if max_a < 4 || !max_a.is_power_of_two() {
        return Err(Error::InvalidSide(max_a));
    }
    let mut rows = Vec::new();
    let mut a = 4u64;
    while a <= max_a {
        for &mode in modes {
            rows.push(plan_iterations(a, mode)?);
        }
        a *= 2;
    }
    Ok(rows)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurvePoint {
    pub i: u64,
    pub t: f64,
    pub t0: f64,
    pub probability: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Analysis {
    pub a: u64,
    pub points: Vec<CurvePoint>,
    pub first_local_max: u64,
    pub exact: u64,
}

/// Recurrence values for `i = 0..=max_i`, with the first local maximum of
/// the success probability and the exact-mode count.
pub fn analyze(a: u64, max_i: u64) -> Result<Analysis> {
    let exact = exact_iterations(a)?;
    let points = recurrence(a)
        .take(max_i as usize + 1)
        .map(|p| CurvePoint {
            i: u64::from(p.i),
            t: p.t,
            t0: p.t0,
            probability: p.success_probability(),
        })
        .collect();
    Ok(Analysis {
        a,
        points,
        first_local_max: optimal_iterations(a),
        exact,
    })
}

/// Work counters for one problem size.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexityRow {
    pub n: u32,
    pub m: u32,
    /// Pixel comparisons of the exhaustive full-block scan.
    pub classical_comparisons: u64,
    /// Amplification rounds at the exact count.
    pub grover_iterations: u64,
    /// Amplitude operations spent by the classical simulation of those rounds.
    pub simulated_amplitude_ops: u64,
}

impl ComplexityRow {
    pub fn comparison_ratio(&self) -> f64 {
        self.classical_comparisons as f64 / self.grover_iterations as f64
    }
}

pub fn complexity_row(n: u32, m: u32) -> Result<ComplexityRow> {
    let dims = MatchDims::new(n, m, 1)?;
    let iterations = exact_iterations(dims.a)?;
    let (_, work) = SubspaceState::init(n, [0])?.run_grover_counted(iterations);
    Ok(ComplexityRow {
        n,
        m,
        classical_comparisons: full_block_comparisons(n, m),
        grover_iterations: iterations,
        simulated_amplitude_ops: work.amplitude_ops,
    })
}

/// Positions whose value equals the small image's anchor pixel.
pub fn anchor_positions(big: &Image, small: &Image) -> BTreeSet<usize> {
    let anchor = small.pixel(0, 0);
    big.pixels()
        .iter()
        .enumerate()
        .filter(|(_, &v)| v == anchor)
        .map(|(k, _)| k)
        .collect()
}
