//! The 4x4 / 2x2 grayscale pair used as the worked example throughout the
//! crate. The small image sits at `(1, 1)` inside the big one.

use crate::image::Image;

/// Row-major pixels of the 4x4 big image.
pub const WORKED_BIG: [u32; 16] = [
    162, 156, 161, 165, //
    161, 160, 164, 166, //
    161, 164, 165, 167, //
    168, 165, 166, 166,
];

/// Row-major pixels of the 2x2 small image.
pub const WORKED_SMALL: [u32; 4] = [160, 164, 164, 165];

pub fn worked_big() -> Image {
    Image::new(4, 4, 8, WORKED_BIG.to_vec()).expect("fixture is valid")
}

pub fn worked_small() -> Image {
    Image::new(2, 2, 8, WORKED_SMALL.to_vec()).expect("fixture is valid")
}
