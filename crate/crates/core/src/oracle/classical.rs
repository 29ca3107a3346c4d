//! Exhaustive classical template matching.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::image::{validate_pair, Image};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MatchMode {
    /// Every pixel of the small image agrees with the block at `(x, y)`.
    FullBlock,
    /// Only the small image's pixel `(0, 0)` is compared, at every big-image
    /// position. This is the predicate the marking gate evaluates.
    AnchorPixel,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchResult {
    /// Upper-left `(x, y)` of each match, in row-major order.
    pub locations: Vec<(usize, usize)>,
    pub mode: MatchMode,
    /// Pixel comparisons executed.
    pub comparisons: u64,
}

/// Scans the big image. `FullBlock` compares every pixel of every window
/// without early exit, so it always does `2^(2m) (2^n - 2^m + 1)^2`
/// comparisons; `AnchorPixel` always does `2^(2n)`.
pub fn classical_match(big: &Image, small: &Image, mode: MatchMode) -> Result<MatchResult> {
    validate_pair(big, small)?;
    let side = big.width();
    let block = small.width();
    let mut locations = Vec::new();
    let mut comparisons = 0u64;
    match mode {
        MatchMode::FullBlock => {
            let offsets = side - block + 1;
            for y in 0..offsets {
                for x in 0..offsets {
                    let mut all_equal = true;
                    for dy in 0..block {
                        for dx in 0..block {
                            comparisons += 1;
                            all_equal &= big.pixel(x + dx, y + dy) == small.pixel(dx, dy);
                        }
                    }
                    if all_equal {
                        locations.push((x, y));
                    }
                }
            }
        }
        MatchMode::AnchorPixel => {
            let anchor = small.pixel(0, 0);
            for (k, &v) in big.pixels().iter().enumerate() {
                comparisons += 1;
                if v == anchor {
                    locations.push((k % side, k / side));
                }
            }
        }
    }
    Ok(MatchResult {
        locations,
        mode,
        comparisons,
    })
}

/// Comparison count of a `FullBlock` scan: `2^(2m) (2^n - 2^m + 1)^2`.
pub fn full_block_comparisons(n: u32, m: u32) -> u64 {
    let offsets = (1u64 << n) - (1u64 << m) + 1;
    (1u64 << (2 * m)) * offsets * offsets
}
