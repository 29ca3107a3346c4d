//! Structured simulation of the comparison and marking steps.
//!
//! The joint register `|f>|I_A>|k_A>|I_B>|k_B>` starts as a uniform
//! superposition with exactly one basis state per `(k_A, k_B)` pair, and the
//! XOR comparison and marking gates map basis states to basis states. So the
//! state is held as one [`Branch`] per pair instead of a dense vector. The
//! `|g>` ancilla is a constant tensor factor here and is not stored.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::image::{GqirImage, MatchDims};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Stage {
    Prepared,
    AfterU1,
    AfterU2,
}

/// One basis state of the joint register.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Branch {
    pub f: bool,
    /// Holds `I_A(k_A)`, and `I_A(k_A) xor I_B(k_B)` after the comparison.
    pub i_a: u32,
    pub k_a: usize,
    pub i_b: u32,
    pub k_b: usize,
    pub amplitude: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct JointState {
    dims: MatchDims,
    branches: Vec<Branch>,
    stage: Stage,
}

impl JointState {
    /// Builds the initial state: `f = 0`, amplitude `1 / 2^(n+m)` on every
    /// `(k_A, k_B)` pair, branches ordered lexicographically by `(k_A, k_B)`.
    pub fn prepare_initial(big: &GqirImage, small: &GqirImage) -> Result<Self> {
        if big.bit_depth() != small.bit_depth() {
            return Err(Error::DimensionMismatch(format!(
                "bit depths differ: {} vs {}",
                big.bit_depth(),
                small.bit_depth()
            )));
        }
        let dims = MatchDims::new(big.side_log(), small.side_log(), big.bit_depth())?;
        let amplitude = 1.0 / (1u64 << (dims.n + dims.m)) as f64;
        let branches = big
            .entries()
            .flat_map(|a| {
                small.entries().map(move |b| Branch {
                    f: false,
                    i_a: a.value,
                    k_a: a.k,
                    i_b: b.value,
                    k_b: b.k,
                    amplitude,
                })
            })
            .collect();
        Ok(Self {
            dims,
            branches,
            stage: Stage::Prepared,
        })
    }

    pub fn dims(&self) -> &MatchDims {
        &self.dims
    }

    pub fn stage(&self) -> Stage {
        self.stage
    }

    pub fn branches(&self) -> &[Branch] {
        &self.branches
    }

    pub fn branch(&self, k_a: usize, k_b: usize) -> &Branch {
        &self.branches[k_a * self.dims.small_positions() + k_b]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.branches.iter().map(|b| b.amplitude * b.amplitude).sum()
    }

    fn require(&self, expected: Stage) -> Result<()> {
        if self.stage == expected {
            Ok(())
        } else {
            Err(Error::WrongStage {
                expected,
                found: self.stage,
            })
        }
    }

    /// Bitwise CNOTs from `I_B` onto `I_A`: `i_a <- i_a xor i_b`.
    pub fn apply_u1(mut self) -> Result<Self> {
        self.require(Stage::Prepared)?;
        for b in &mut self.branches {
            b.i_a ^= b.i_b;
        }
        self.stage = Stage::AfterU1;
        Ok(self)
    }

    /// Multi-controlled NOT onto `f`, firing when `I_A` is all zeros and
    /// `k_B` is all zeros.
    pub fn apply_u2(mut self) -> Result<Self> {
        self.require(Stage::AfterU1)?;
        for b in &mut self.branches {
            if b.i_a == 0 && b.k_b == 0 {
                b.f = !b.f;
            }
        }
        self.stage = Stage::AfterU2;
        Ok(self)
    }

    /// Positions `k_A` carrying `f = 1` on some branch.
    pub fn marked_set(&self) -> Result<BTreeSet<usize>> {
        self.require(Stage::AfterU2)?;
        Ok(self
            .branches
            .iter()
            .filter(|b| b.f)
            .map(|b| b.k_a)
            .collect())
    }

    /// One line per branch, `f i_a k_a i_b k_b amplitude`, registers printed
    /// as zero-padded binary (`-` for an empty register).
    pub fn dump(&self) -> String {
        let q = self.dims.q as usize;
        let ka_bits = 2 * self.dims.n as usize;
        let kb_bits = 2 * self.dims.m as usize;
        let mut out = String::new();
        for b in &self.branches {
            let _ = writeln!(
                out,
                "{} {} {} {} {} {}",
                u8::from(b.f),
                binary(b.i_a as usize, q),
                binary(b.k_a, ka_bits),
                binary(b.i_b as usize, q),
                binary(b.k_b, kb_bits),
                b.amplitude
            );
        }
        out
    }
}

fn binary(value: usize, width: usize) -> String {
    if width == 0 {
        "-".to_string()
    } else {
        format!("{value:0width$b}")
    }
}

/// Runs preparation, comparison and marking, returning the marked positions.
pub fn mark(big: &GqirImage, small: &GqirImage) -> Result<BTreeSet<usize>> {
    JointState::prepare_initial(big, small)?
        .apply_u1()?
        .apply_u2()?
        .marked_set()
}
