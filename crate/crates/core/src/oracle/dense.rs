//! Gate-level statevector simulation of preparation, comparison and marking.
//!
//! Qubits are numbered from the least significant bit of the basis index:
//! `k_B` occupies the lowest `2m` bits, then `I_B` (`q`), `k_A` (`2n`),
//! `I_A` (`q`), `f` and finally `g`. Reading a basis index from the most
//! significant bit therefore gives `|g f I_A k_A I_B k_B>`.

use std::collections::BTreeSet;
use std::f64::consts::FRAC_1_SQRT_2;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::image::{GqirImage, MatchDims};

pub const DEFAULT_QUBIT_CAP: u32 = 22;

/// Bit ranges of each register inside a basis index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegisterLayout {
    pub q: u32,
    pub n: u32,
    pub m: u32,
}

impl RegisterLayout {
    pub fn total_qubits(&self) -> u32 {
        2 + 2 * self.q + 2 * self.n + 2 * self.m
    }

    pub fn k_b(&self) -> Range<u32> {
        0..2 * self.m
    }

    pub fn i_b(&self) -> Range<u32> {
        let s = self.k_b().end;
        s..s + self.q
    }

    pub fn k_a(&self) -> Range<u32> {
        let s = self.i_b().end;
        s..s + 2 * self.n
    }

    pub fn i_a(&self) -> Range<u32> {
        let s = self.k_a().end;
        s..s + self.q
    }

    pub fn f(&self) -> u32 {
        self.i_a().end
    }

    pub fn g(&self) -> u32 {
        self.f() + 1
    }

    /// Basis index of `|g f i_a k_a i_b k_b>`.
    pub fn index(&self, g: bool, f: bool, i_a: u32, k_a: usize, i_b: u32, k_b: usize) -> usize {
        (usize::from(g) << self.g())
            | (usize::from(f) << self.f())
            | ((i_a as usize) << self.i_a().start)
            | (k_a << self.k_a().start)
            | ((i_b as usize) << self.i_b().start)
            | (k_b << self.k_b().start)
    }

    fn field(&self, index: usize, bits: Range<u32>) -> usize {
        (index >> bits.start) & ((1usize << (bits.end - bits.start)) - 1)
    }
}

/// A full real statevector over the joint register.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseState {
    layout: RegisterLayout,
    amplitudes: Vec<f64>,
    gates_applied: u64,
    max_norm_drift: f64,
}

impl DenseState {
    /// `|0...0>` on the given layout.
    pub fn zero(layout: RegisterLayout, qubit_cap: u32) -> Result<Self> {
        let required = layout.total_qubits();
        if required > qubit_cap {
            return Err(Error::QubitCapExceeded {
                required,
                cap: qubit_cap,
            });
        }
        let mut amplitudes = vec![0.0; 1usize << required];
        amplitudes[0] = 1.0;
        Ok(Self {
            layout,
            amplitudes,
            gates_applied: 0,
            max_norm_drift: 0.0,
        })
    }

    pub fn layout(&self) -> &RegisterLayout {
        &self.layout
    }

    pub fn amplitudes(&self) -> &[f64] {
        &self.amplitudes
    }

    pub fn gates_applied(&self) -> u64 {
        self.gates_applied
    }

    /// Largest `|norm^2 - 1|` seen after any gate so far.
    pub fn max_norm_drift(&self) -> f64 {
        self.max_norm_drift
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a * a).sum()
    }

    pub fn amplitude_at(&self, g: bool, f: bool, i_a: u32, k_a: usize, i_b: u32, k_b: usize) -> f64 {
        self.amplitudes[self.layout.index(g, f, i_a, k_a, i_b, k_b)]
    }

    fn finish_gate(&mut self) {
        self.gates_applied += 1;
        let drift = (self.norm_sqr() - 1.0).abs();
        self.max_norm_drift = self.max_norm_drift.max(drift);
    }

    pub fn x(&mut self, qubit: u32) {
        let bit = 1usize << qubit;
        for i in 0..self.amplitudes.len() {
            if i & bit == 0 {
                self.amplitudes.swap(i, i | bit);
            }
        }
        self.finish_gate();
    }

    pub fn h(&mut self, qubit: u32) {
        let bit = 1usize << qubit;
        for i in 0..self.amplitudes.len() {
            if i & bit == 0 {
                let (a, b) = (self.amplitudes[i], self.amplitudes[i | bit]);
                self.amplitudes[i] = (a + b) * FRAC_1_SQRT_2;
                self.amplitudes[i | bit] = (a - b) * FRAC_1_SQRT_2;
            }
        }
        self.finish_gate();
    }

    pub fn cnot(&mut self, control: u32, target: u32) {
        self.mcx(&[(control, true)], target);
    }

    /// NOT on `target` for basis states where every `(qubit, value)` control
    /// holds. Applied as a basis-state predicate rather than decomposed.
    pub fn mcx(&mut self, controls: &[(u32, bool)], target: u32) {
        let mut mask = 0usize;
        let mut want = 0usize;
        for &(qubit, value) in controls {
            debug_assert_ne!(qubit, target);
            mask |= 1 << qubit;
            if value {
                want |= 1 << qubit;
            }
        }
        let bit = 1usize << target;
        for i in 0..self.amplitudes.len() {
            if i & bit == 0 && i & mask == want {
                self.amplitudes.swap(i, i | bit);
            }
        }
        self.finish_gate();
    }

    /// Controls selecting `register == value` on the given bit range.
    fn equals(bits: Range<u32>, value: usize) -> Vec<(u32, bool)> {
        bits.clone()
            .map(|qubit| (qubit, (value >> (qubit - bits.start)) & 1 == 1))
            .collect()
    }
}

/// Prepares `|g>|0>|A>|B>` with Hadamards and position-controlled pixel
/// loads, then applies the bitwise CNOT comparison and the marking gate.
pub fn dense_simulate_steps12(big: &GqirImage, small: &GqirImage) -> Result<DenseState> {
    dense_simulate_steps12_with_cap(big, small, DEFAULT_QUBIT_CAP)
}

pub fn dense_simulate_steps12_with_cap(
    big: &GqirImage,
    small: &GqirImage,
    qubit_cap: u32,
) -> Result<DenseState> {
    if big.bit_depth() != small.bit_depth() {
        return Err(Error::DimensionMismatch(format!(
            "bit depths differ: {} vs {}",
            big.bit_depth(),
            small.bit_depth()
        )));
    }
    let dims = MatchDims::new(big.side_log(), small.side_log(), big.bit_depth())?;
    let layout = RegisterLayout {
        q: dims.q,
        n: dims.n,
        m: dims.m,
    };
    let mut s = DenseState::zero(layout, qubit_cap)?;

    // |g> = (|0> - |1>)/sqrt(2)
    s.x(layout.g());
    s.h(layout.g());
    for qubit in layout.k_a().chain(layout.k_b()) {
        s.h(qubit);
    }
    load_pixels(&mut s, big, layout.k_a(), layout.i_a());
    load_pixels(&mut s, small, layout.k_b(), layout.i_b());

    // comparison: I_A^j <- I_A^j xor I_B^j
    for (a_bit, b_bit) in layout.i_a().zip(layout.i_b()) {
        s.cnot(b_bit, a_bit);
    }

    // marking: f flips when I_A == 0 and k_B == 0
    let mut controls = DenseState::equals(layout.i_a(), 0);
    controls.extend(DenseState::equals(layout.k_b(), 0));
    s.mcx(&controls, layout.f());
    Ok(s)
}

fn load_pixels(s: &mut DenseState, img: &GqirImage, position: Range<u32>, value: Range<u32>) {
    for entry in img.entries() {
        let controls = DenseState::equals(position.clone(), entry.k);
        for target in value.clone() {
            if (entry.value >> (target - value.start)) & 1 == 1 {
                s.mcx(&controls, target);
            }
        }
    }
}

/// `k_A` of every basis state with `f = 1` and non-negligible amplitude.
pub fn measure_dense_marked(state: &DenseState) -> BTreeSet<usize> {
    let layout = state.layout;
    let f_bit = 1usize << layout.f();
    state
        .amplitudes
        .iter()
        .enumerate()
        .filter(|(i, a)| i & f_bit != 0 && a.abs() > 1e-12)
        .map(|(i, _)| layout.field(i, layout.k_a()))
        .collect()
}
