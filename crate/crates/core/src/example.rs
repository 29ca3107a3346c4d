//! Reproduces the 4x4 / 2x2 worked example and checks every reported value.

use std::fmt::Write as _;

use crate::fixtures;
use crate::grover::{exact_iterations, probability_lower_bound, ExactPair, Rational};
use crate::image::{encode_gqir, validate_pair};
use crate::joint;

#[derive(Debug, Clone, PartialEq)]
pub struct GoldenCheck {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExampleTranscript {
    pub lines: Vec<String>,
    pub checks: Vec<GoldenCheck>,
}

impl ExampleTranscript {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for line in &self.lines {
            let _ = writeln!(out, "{line}");
        }
        for c in &self.checks {
            let _ = writeln!(
                out,
                "[{}] {}: expected {}, got {}",
                if c.pass { "ok" } else { "MISMATCH" },
                c.name,
                c.expected,
                c.actual
            );
        }
        out
    }
}

fn check(checks: &mut Vec<GoldenCheck>, name: &str, expected: String, actual: String, pass: bool) {
    checks.push(GoldenCheck {
        name: name.to_string(),
        expected,
        actual,
        pass,
    });
}

fn exact_check(checks: &mut Vec<GoldenCheck>, name: &str, expected: Rational, actual: Rational) {
    check(
        checks,
        name,
        expected.to_string(),
        actual.to_string(),
        expected == actual,
    );
}

fn approx_check(checks: &mut Vec<GoldenCheck>, name: &str, expected: f64, actual: f64, tol: f64) {
    check(
        checks,
        name,
        format!("{expected} (+/- {tol:e})"),
        format!("{actual:.6}"),
        (expected - actual).abs() <= tol,
    );
}

pub fn run_example() -> ExampleTranscript {
    let mut lines = Vec::new();
    let mut checks = Vec::new();

    let big = fixtures::worked_big();
    let small = fixtures::worked_small();
    let dims = validate_pair(&big, &small).expect("fixture pair is valid");
    let marked = joint::mark(
        &encode_gqir(&big, &dims).expect("fixture encodes"),
        &encode_gqir(&small, &dims).expect("fixture encodes"),
    )
    .expect("fixture marks");
    lines.push(format!(
        "big {0}x{0}, small {1}x{1}, q = {2}",
        dims.a,
        1u64 << dims.m,
        dims.q
    ));
    lines.push(format!("marked positions: {marked:?}"));
    check(
        &mut checks,
        "marked set",
        "{5}".into(),
        format!("{marked:?}"),
        marked.len() == 1 && marked.contains(&5),
    );

    let planned = exact_iterations(dims.a).expect("a = 4 is valid");
    lines.push(format!("planned iterations: {planned}"));
    check(
        &mut checks,
        "iterations",
        "3".into(),
        planned.to_string(),
        planned == 3,
    );

    let mut pairs = vec![ExactPair::initial(dims.a)];
    for _ in 0..4 {
        let next = pairs.last().copied().expect("non-empty").step();
        pairs.push(next);
    }
    for p in &pairs[..=3] {
        lines.push(format!("i = {}: t0 = {}, t = {}", p.i, p.t0, p.t));
    }
    lines.push(format!("i = 4: t0 = {} (past the peak)", pairs[4].t0));

    let expected = [(11, 16, 3, 16), (61, 64, 5, 64), (251, 256, -13, 256)];
    for (i, &(n0, d0, n, d)) in expected.iter().enumerate() {
        let p = pairs[i + 1];
        exact_check(&mut checks, &format!("t{}0", i + 1), Rational::new(n0, d0), p.t0);
        exact_check(&mut checks, &format!("t{}", i + 1), Rational::new(n, d), p.t);
    }
    exact_check(&mut checks, "t40", Rational::new(781, 1024), pairs[4].t0);
    check(
        &mut checks,
        "t40 < t30",
        "true".into(),
        (pairs[4].t0 < pairs[3].t0).to_string(),
        pairs[4].t0 < pairs[3].t0,
    );

    let final_pair = pairs[3].to_f64();
    let success = final_pair.t0 * final_pair.t0;
    let other = final_pair.t * final_pair.t;
    let bound = probability_lower_bound(dims.a as f64);
    lines.push(format!("P(marked) = {success:.4}, P(other) = {other:.6}"));
    lines.push(format!("lower bound = {bound:.4}"));
    approx_check(&mut checks, "P(marked)", 0.9613, success, 1e-4);
    approx_check(&mut checks, "P(other)", 0.002579, other, 1e-6);
    approx_check(&mut checks, "lower bound", 0.8976, bound, 5e-4);
    check(
        &mut checks,
        "P(marked) > bound",
        "true".into(),
        (success > bound).to_string(),
        success > bound,
    );

    ExampleTranscript { lines, checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_check_passes() {
        let t = run_example();
        for c in &t.checks {
            assert!(c.pass, "{c:?}");
        }
        assert_eq!(t.checks.len(), 14);
        assert!(t.render().contains("t0 = 251/256, t = -13/256"));
    }
}
