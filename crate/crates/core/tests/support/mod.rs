#![allow(dead_code)]

use proptest::prelude::*;
use qimatch_core::{encode_gqir, validate_pair, GqirImage, Image, MatchDims};

/// A random legal big/small pair.
#[derive(Debug, Clone)]
pub struct Instance {
    pub big: Image,
    pub small: Image,
}

impl Instance {
    pub fn dims(&self) -> MatchDims {
        validate_pair(&self.big, &self.small).unwrap()
    }

    pub fn encode(&self) -> (GqirImage, GqirImage) {
        let dims = self.dims();
        (
            encode_gqir(&self.big, &dims).unwrap(),
            encode_gqir(&self.small, &dims).unwrap(),
        )
    }

    /// Positions of the big image equal to the small image's anchor pixel,
    /// by a plain linear scan.
    pub fn anchor_scan(&self) -> Vec<usize> {
        let anchor = self.small.pixels()[0];
        (0..self.big.pixels().len())
            .filter(|&k| self.big.pixels()[k] == anchor)
            .collect()
    }
}

/// `n <= max_n`, `m < n`, `q <= max_q`. Pixel values are drawn from a small
/// alphabet so anchor matches actually occur.
pub fn instance(max_n: u32, max_q: u32) -> impl Strategy<Value = Instance> {
    (1..=max_n, 1..=max_q)
        .prop_flat_map(|(n, q)| (Just(n), 0..n, Just(q)))
        .prop_flat_map(|(n, m, q)| {
            let big_side = 1usize << n;
            let small_side = 1usize << m;
            let max = (1u32 << q) - 1;
            (
                prop::collection::vec(0..=max, big_side * big_side),
                prop::collection::vec(0..=max, small_side * small_side),
            )
                .prop_map(move |(a, b)| Instance {
                    big: Image::new(big_side, big_side, q, a).unwrap(),
                    small: Image::new(small_side, small_side, q, b).unwrap(),
                })
        })
}

/// Walsh-Hadamard matrix on `2^(2n)` states: `W_ij = (-1)^(i.j) / 2^n`.
pub fn walsh(n: u32) -> Vec<Vec<f64>> {
    let size = 1usize << (2 * n);
    let scale = 1.0 / (1u64 << n) as f64;
    (0..size)
        .map(|i| {
            (0..size)
                .map(|j| {
                    if (i & j).count_ones() % 2 == 0 {
                        scale
                    } else {
                        -scale
                    }
                })
                .collect()
        })
        .collect()
}

/// `R = diag(1, -1, ..., -1)`.
pub fn rotation(n: u32) -> Vec<Vec<f64>> {
    let size = 1usize << (2 * n);
    (0..size)
        .map(|i| {
            (0..size)
                .map(|j| match (i == j, i == 0) {
                    (false, _) => 0.0,
                    (true, true) => 1.0,
                    (true, false) => -1.0,
                })
                .collect()
        })
        .collect()
}

pub fn matmul(x: &[Vec<f64>], y: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let size = x.len();
    (0..size)
        .map(|i| {
            (0..size)
                .map(|j| (0..size).map(|k| x[i][k] * y[k][j]).sum())
                .collect()
        })
        .collect()
}

pub fn matvec(x: &[Vec<f64>], v: &[f64]) -> Vec<f64> {
    x.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// `D = W R W`.
pub fn diffusion_wrw(n: u32) -> Vec<Vec<f64>> {
    let w = walsh(n);
    matmul(&matmul(&w, &rotation(n)), &w)
}

/// `2P - I` with `P_ij = 1 / 2^(2n)`.
pub fn diffusion_projector(n: u32) -> Vec<Vec<f64>> {
    let size = 1usize << (2 * n);
    let p = 1.0 / size as f64;
    (0..size)
        .map(|i| {
            (0..size)
                .map(|j| if i == j { 2.0 * p - 1.0 } else { 2.0 * p })
                .collect()
        })
        .collect()
}

pub fn max_abs_diff(x: &[f64], y: &[f64]) -> f64 {
    x.iter()
        .zip(y)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max)
}

/// Distinct values of `v` up to `tol`.
pub fn distinct(v: &[f64], tol: f64) -> Vec<f64> {
    let mut out: Vec<f64> = Vec::new();
    for &x in v {
        if !out.iter().any(|y| (x - y).abs() <= tol) {
            out.push(x);
        }
    }
    out
}
