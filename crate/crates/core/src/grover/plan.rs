//! Choosing how many amplification rounds to run.
//!
//! Three planners are offered:
//!
//! * [`PlanMode::PaperExact`]: the smallest integer `i >= 1` at which the
//!   quartic
//!   `i^4 + 4i^3 + (2 - 3a^2) i^2 - (1 + 6a^2) i + 3/2 a^4 - 3/2 a^2`
//!   turns negative. Evaluated in exact integer arithmetic (doubled to clear
//!   the halves). A closed radical expression for the same root is evaluated
//!   separately by [`radical_cross_check`].
//! * [`PlanMode::PaperFit`]: `round(0.7962 a - 0.6057)`.
//! * [`PlanMode::OptimalScan`]: the first local maximum of `t0^2` along the
//!   recurrence.
//!
//! All three are clamped to at least one round.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::recurrence::{pair_at, probability_lower_bound, recurrence};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PlanMode {
    #[serde(rename = "exact")]
    PaperExact,
    #[serde(rename = "fit")]
    PaperFit,
    #[serde(rename = "optimal")]
    OptimalScan,
}

impl PlanMode {
    pub const ALL: [PlanMode; 3] = [PlanMode::PaperExact, PlanMode::PaperFit, PlanMode::OptimalScan];

    pub fn as_str(self) -> &'static str {
        match self {
            PlanMode::PaperExact => "exact",
            PlanMode::PaperFit => "fit",
            PlanMode::OptimalScan => "optimal",
        }
    }
}

impl fmt::Display for PlanMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PlanMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "exact" => Ok(PlanMode::PaperExact),
            "fit" => Ok(PlanMode::PaperFit),
            "optimal" => Ok(PlanMode::OptimalScan),
            other => Err(format!("unknown mode {other:?} (expected exact, fit or optimal)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IterationPlan {
    pub a: u64,
    pub mode: PlanMode,
    pub iterations: u64,
    /// `t0^2` after `iterations` rounds of the single-mark recurrence.
    pub predicted_success: f64,
    pub lower_bound: f64,
    /// The recurrence argmax, reported alongside whatever mode was chosen.
    pub optimal_iterations: u64,
}

impl IterationPlan {
    pub fn differs_from_optimal(&self) -> bool {
        self.iterations != self.optimal_iterations
    }
}

/// Largest supported side; keeps the doubled quartic inside `i128`.
pub const MAX_SIDE: u64 = 1 << 30;

fn check_side(a: u64) -> Result<()> {
    if a < 2 || !a.is_power_of_two() || a > MAX_SIDE {
        Err(Error::InvalidSide(a))
    } else {
        Ok(())
    }
}

pub fn plan_iterations(a: u64, mode: PlanMode) -> Result<IterationPlan> {
    check_side(a)?;
    let optimal = optimal_iterations(a);
    let iterations = match mode {
        PlanMode::PaperExact => exact_iterations(a)?,
        PlanMode::PaperFit => fit_iterations(a),
        PlanMode::OptimalScan => optimal,
    };
    Ok(IterationPlan {
        a,
        mode,
        iterations,
        predicted_success: pair_at(a, iterations).success_probability(),
        lower_bound: probability_lower_bound(a as f64),
        optimal_iterations: optimal,
    })
}

/// Twice the quartic, so every coefficient is an integer.
pub fn doubled_quartic(i: i128, a: i128) -> i128 {
    let a2 = a * a;
    let coeffs = [2, 8, 4 - 6 * a2, -2 - 12 * a2, 3 * a2 * a2 - 3 * a2];
    coeffs.iter().fold(0, |acc, &c| acc * i + c)
}

/// Smallest `i >= 1` where the quartic is negative.
pub fn exact_iterations(a: u64) -> Result<u64> {
    check_side(a)?;
    let side = i128::from(a);
    let negative = |i: u64| doubled_quartic(i128::from(i), side) < 0;
    if a < 8 {
        return Ok((1..=a).find(|&i| negative(i)).unwrap_or(a).max(1));
    }
    // For a >= 8 the quartic is strictly decreasing on [0, a], positive at 1
    // and negative at a.
    let (mut lo, mut hi) = (1u64, a);
    debug_assert!(!negative(lo) && negative(hi));
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if negative(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// `round(0.7962 a - 0.6057)`, halves rounded up, at least 1.
pub fn fit_iterations(a: u64) -> u64 {
    let x = 0.7962 * a as f64 - 0.6057;
    ((x + 0.5).floor() as i64).max(1) as u64
}

/// First `i` whose successor lowers `t0^2`, at least 1.
pub fn optimal_iterations(a: u64) -> u64 {
    let mut prev = None;
    for p in recurrence(a) {
        let prob = p.success_probability();
        if let Some((i, last)) = prev {
            if prob < last {
                return u64::max(i, 1);
            }
        }
        prev = Some((u64::from(p.i), prob));
    }
    unreachable!("recurrence is infinite")
}

/// Result of evaluating the closed radical expression for the quartic's
/// lower positive root.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadicalCheck {
    pub a: u64,
    pub root: Complex64,
    /// `ceil` of the root's real part.
    pub ceiling: i64,
    /// The integer scan result it is compared against.
    pub scan: u64,
}

impl RadicalCheck {
    pub fn imaginary_negligible(&self) -> bool {
        self.root.im.abs() < 1e-6
    }

    pub fn agrees(&self) -> bool {
        self.imaginary_negligible() && self.ceiling.max(1) as u64 == self.scan
    }
}

/// Evaluates the radical root formula in complex arithmetic with principal
/// square and cube roots, and compares its ceiling to [`exact_iterations`].
///
/// The formula leaves out the odd-order correction of the depressed quartic,
/// so the root it gives is slightly below the true one; the ceilings still
/// coincide on every power-of-two side we have checked.
pub fn radical_cross_check(a: u64) -> Result<RadicalCheck> {
    let scan = exact_iterations(a)?;
    let af = a as f64;
    let b = 4.0;
    let c = 2.0 - 3.0 * af * af;
    let d = -1.0 - 6.0 * af * af;
    let e = 1.5 * af.powi(4) - 1.5 * af * af;
    let alpha = c * c - 3.0 * b * d + 12.0 * e;
    let beta = 2.0 * c.powi(3) - 9.0 * b * c * d + 27.0 * d * d + 27.0 * b * b * e - 72.0 * c * e;

    let disc = Complex64::new(beta * beta - 4.0 * alpha.powi(3), 0.0).sqrt();
    let cube = (Complex64::new(beta, 0.0) + disc).cbrt();
    let cbrt2 = 2f64.cbrt();
    let big_a = cbrt2 * alpha / (3.0 * cube);
    let big_b = cube / (3.0 * cbrt2);
    let first = (4.0 - 2.0 * c / 3.0 + big_a + big_b).sqrt();
    let second = (8.0 - 4.0 * c / 3.0 - big_a - big_b).sqrt();
    let root = -1.0 + 0.5 * first - 0.5 * second;
    Ok(RadicalCheck {
        a,
        root,
        ceiling: root.re.ceil() as i64,
        scan,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    // Quartic evaluated in floating point, independent of the integer path.
    fn quartic_f64(i: f64, a: f64) -> f64 {
        i.powi(4) + 4.0 * i.powi(3) + (2.0 - 3.0 * a * a) * i * i + (-1.0 - 6.0 * a * a) * i
            + 1.5 * a.powi(4)
            - 1.5 * a * a
    }

    #[test]
    fn small_sides() {
        assert_eq!(exact_iterations(2).unwrap(), 1);
        assert_eq!(exact_iterations(4).unwrap(), 3);
        assert_eq!(exact_iterations(8).unwrap(), 6);
        assert_eq!(exact_iterations(1024).unwrap(), 815);
    }

    #[test]
    fn scan_is_first_sign_change() {
        let mut a = 4u64;
        while a <= 65536 {
            let i = exact_iterations(a).unwrap();
            let af = a as f64;
            assert!(quartic_f64(i as f64, af) < 0.0, "a={a}");
            assert!(quartic_f64((i - 1) as f64, af) > 0.0, "a={a}");
            a *= 2;
        }
    }

    #[test]
    fn large_sides_follow_exact_arithmetic() {
        // 13044 and 52180 in the published table; the quartic is still
        // positive there (by ~4.3e12 and ~3.2e14).
        assert_eq!(exact_iterations(16384).unwrap(), 13045);
        assert_eq!(exact_iterations(65536).unwrap(), 52181);
        assert_eq!(exact_iterations(32768).unwrap(), 26090);
    }

    #[test]
    fn fit_values() {
        assert_eq!(fit_iterations(4), 3);
        assert_eq!(fit_iterations(2), 1);
        // 0.7962 * 32768 - 0.6057 = 26089.2759
        assert_eq!(fit_iterations(32768), 26089);
        let plan = plan_iterations(32768, PlanMode::PaperFit).unwrap();
        assert!(plan.iterations.abs_diff(26090) <= 1);
    }

    #[test]
    fn optimal_scan_small() {
        assert_eq!(optimal_iterations(2), 1);
        assert_eq!(optimal_iterations(4), 3);
        assert_eq!(optimal_iterations(128), 100);
    }

    #[test]
    fn plan_fields() {
        let p = plan_iterations(4, PlanMode::PaperExact).unwrap();
        assert_eq!(p.iterations, 3);
        assert!((p.predicted_success - 0.9613).abs() < 1e-4);
        assert!((p.lower_bound - 0.8976).abs() < 5e-4);
        assert!(!p.differs_from_optimal());
        let p = plan_iterations(128, PlanMode::PaperExact).unwrap();
        assert_eq!(p.iterations, 101);
        assert!(p.differs_from_optimal());
        assert!((0.0..=1.0).contains(&p.predicted_success));
    }

    #[test]
    fn invalid_sides() {
        assert_eq!(plan_iterations(1, PlanMode::PaperExact), Err(Error::InvalidSide(1)));
        assert_eq!(plan_iterations(12, PlanMode::PaperFit), Err(Error::InvalidSide(12)));
        assert_eq!(plan_iterations(0, PlanMode::OptimalScan), Err(Error::InvalidSide(0)));
    }

    #[test]
    fn radical_agrees_with_scan() {
        let mut a = 4u64;
        while a <= 65536 {
            let check = radical_cross_check(a).unwrap();
            assert!(check.agrees(), "{check:?}");
            a *= 2;
        }
        let check = radical_cross_check(4).unwrap();
        assert!((check.root.re - 2.1032).abs() < 1e-3);
    }

    #[test]
    fn mode_parsing() {
        for m in PlanMode::ALL {
            assert_eq!(m.as_str().parse::<PlanMode>().unwrap(), m);
        }
        assert!("best".parse::<PlanMode>().is_err());
    }
}
