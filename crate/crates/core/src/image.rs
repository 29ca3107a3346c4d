//! Grayscale image ingestion and GQIR-style position/intensity encoding.
//!
//! Positions are flattened row-major: `k = y * side + x`, with `y` counted
//! from the top row. With a `2^n x 2^n` image the high `n` bits of `k` hold
//! the row and the low `n` bits the column.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A grayscale raster of `bit_depth`-bit intensities, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Image {
    width: usize,
    height: usize,
    bit_depth: u32,
    pixels: Vec<u32>,
}

impl Image {
    /// Builds an image, checking the pixel count and that every value fits
    /// in `bit_depth` bits. Shape rules (square, power of two) are checked by
    /// [`validate_pair`], not here.
    pub fn new(width: usize, height: usize, bit_depth: u32, pixels: Vec<u32>) -> Result<Self> {
        if !(1..=32).contains(&bit_depth) {
            return Err(Error::MalformedHeader(format!(
                "bit depth {bit_depth} outside [1, 32]"
            )));
        }
        let expected = width * height;
        if pixels.len() != expected {
            return Err(Error::PixelCountMismatch {
                expected,
                found: pixels.len(),
            });
        }
        let max = max_value(bit_depth);
        if let Some((index, &value)) = pixels.iter().enumerate().find(|(_, &v)| v > max) {
            return Err(Error::PixelOutOfRange { index, value, max });
        }
        Ok(Self {
            width,
            height,
            bit_depth,
            pixels,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// Bits per pixel (`q`).
    pub fn bit_depth(&self) -> u32 {
        self.bit_depth
    }

    pub fn pixels(&self) -> &[u32] {
        &self.pixels
    }

    pub fn pixel(&self, x: usize, y: usize) -> u32 {
        self.pixels[y * self.width + x]
    }

    /// `log2` of the side length, or a validation error if the image is not
    /// a square with power-of-two side.
    pub fn side_log2(&self) -> Result<u32> {
        if self.width != self.height {
            return Err(Error::NotSquare {
                width: self.width,
                height: self.height,
            });
        }
        if !self.width.is_power_of_two() {
            return Err(Error::NotPowerOfTwo(self.width));
        }
        Ok(self.width.trailing_zeros())
    }
}

fn max_value(bit_depth: u32) -> u32 {
    if bit_depth >= 32 {
        u32::MAX
    } else {
        (1u32 << bit_depth) - 1
    }
}

/// Sizes shared by a big/small image pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchDims {
    /// `log2` of the big image side.
    pub n: u32,
    /// `log2` of the small image side.
    pub m: u32,
    /// Common bit depth.
    pub q: u32,
    /// Big image side length, `2^n`.
    pub a: u64,
}

impl MatchDims {
    pub fn new(n: u32, m: u32, q: u32) -> Result<Self> {
        if n <= m {
            return Err(Error::SideOrder { n, m });
        }
        if n > 31 {
            return Err(Error::DimensionMismatch(format!("n = {n} is too large")));
        }
        Ok(Self { n, m, q, a: 1u64 << n })
    }

    /// Number of positions in the big image, `2^(2n)`.
    pub fn big_positions(&self) -> usize {
        1usize << (2 * self.n)
    }

    /// Number of positions in the small image, `2^(2m)`.
    pub fn small_positions(&self) -> usize {
        1usize << (2 * self.m)
    }

    /// Splits a big-image position index into `(x, y)`.
    pub fn big_xy(&self, k: usize) -> (usize, usize) {
        let side = 1usize << self.n;
        (k % side, k / side)
    }
}

/// Checks that the pair is legal for matching and returns the shared sizes.
///
/// The common bit depth is the larger of the two; narrower pixels are
/// zero-extended, which leaves their integer values unchanged.
pub fn validate_pair(big: &Image, small: &Image) -> Result<MatchDims> {
    let n = big.side_log2()?;
    let m = small.side_log2()?;
    MatchDims::new(n, m, big.bit_depth().max(small.bit_depth()))
}

/// One `|value>|k>` term of a GQIR state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GqirEntry {
    pub k: usize,
    pub value: u32,
}

/// Uniform superposition of `|I(k)> (x) |k>` over all `2^(2s)` positions of a
/// `2^s x 2^s` image. Every term carries amplitude `1 / 2^s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GqirImage {
    side_log: u32,
    q: u32,
    values: Vec<u32>,
}

impl GqirImage {
    /// `log2` of the side length (`n` for the big image, `m` for the small).
    pub fn side_log(&self) -> u32 {
        self.side_log
    }

    pub fn bit_depth(&self) -> u32 {
        self.q
    }

    /// Number of position basis states, `2^(2s)`.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Amplitude shared by every term.
    pub fn amplitude(&self) -> f64 {
        1.0 / (1u64 << self.side_log) as f64
    }

    pub fn value(&self, k: usize) -> u32 {
        self.values[k]
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn entries(&self) -> impl Iterator<Item = GqirEntry> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(|(k, &value)| GqirEntry { k, value })
    }
}

/// Encodes a validated image as a GQIR register pair. The image must be
/// either the big (`2^n`) or the small (`2^m`) side of `dims`.
pub fn encode_gqir(img: &Image, dims: &MatchDims) -> Result<GqirImage> {
    let side_log = img.side_log2()?;
    if side_log != dims.n && side_log != dims.m {
        return Err(Error::DimensionMismatch(format!(
            "image side 2^{side_log} matches neither 2^{} nor 2^{}",
            dims.n, dims.m
        )));
    }
    if img.bit_depth() > dims.q {
        return Err(Error::DimensionMismatch(format!(
            "image bit depth {} exceeds common depth {}",
            img.bit_depth(),
            dims.q
        )));
    }
    Ok(GqirImage {
        side_log,
        q: dims.q,
        values: img.pixels().to_vec(),
    })
}

/// Parses a binary (`P5`) or ASCII (`P2`) PGM stream.
///
/// The bit depth is the bit length of `maxval`. Any width and height are
/// accepted here; see [`validate_pair`].
pub fn load_pgm(bytes: &[u8]) -> Result<Image> {
    let mut cursor = Cursor { bytes, pos: 0 };
    let magic = cursor.token()?;
    let binary = match magic {
        b"P2" => false,
        b"P5" => true,
        other => {
            return Err(Error::MalformedHeader(format!(
                "unsupported magic {:?}",
                String::from_utf8_lossy(other)
            )))
        }
    };
    let width = cursor.header_number("width")?;
    let height = cursor.header_number("height")?;
    if width == 0 || height == 0 {
        return Err(Error::MalformedHeader(format!(
            "empty image {width}x{height}"
        )));
    }
    let maxval = cursor.header_number("maxval")?;
    if !(1..=65535).contains(&maxval) {
        return Err(Error::MaxvalOutOfRange(
            maxval.min(u32::MAX as u64) as u32,
        ));
    }
    let maxval = maxval as u32;
    let width = width as usize;
    let height = height as usize;
    let expected = width
        .checked_mul(height)
        .ok_or_else(|| Error::MalformedHeader("image too large".into()))?;

    let pixels = if binary {
        // exactly one whitespace byte separates maxval from the raster
        match cursor.bytes.get(cursor.pos) {
            Some(b) if b.is_ascii_whitespace() => cursor.pos += 1,
            _ => return Err(Error::MalformedHeader("missing raster separator".into())),
        }
        let raster = &cursor.bytes[cursor.pos..];
        let width_bytes = if maxval > 255 { 2 } else { 1 };
        if raster.len() != expected * width_bytes {
            return Err(Error::PixelCountMismatch {
                expected,
                found: raster.len() / width_bytes,
            });
        }
        if width_bytes == 2 {
            raster
                .chunks_exact(2)
                .map(|c| u32::from(u16::from_be_bytes([c[0], c[1]])))
                .collect()
        } else {
            raster.iter().map(|&b| u32::from(b)).collect()
        }
    } else {
        let mut pixels = Vec::with_capacity(expected);
        while let Some(tok) = cursor.next_token() {
            let v = parse_number(tok).ok_or_else(|| {
                Error::MalformedHeader(format!(
                    "bad pixel value {:?}",
                    String::from_utf8_lossy(tok)
                ))
            })?;
            pixels.push(v.min(u64::from(u32::MAX)) as u32);
        }
        if pixels.len() != expected {
            return Err(Error::PixelCountMismatch {
                expected,
                found: pixels.len(),
            });
        }
        pixels
    };

    if let Some((index, &value)) = pixels.iter().enumerate().find(|(_, &v)| v > maxval) {
        return Err(Error::PixelOutOfRange {
            index,
            value,
            max: maxval,
        });
    }
    let bit_depth = u32::BITS - maxval.leading_zeros();
    Image::new(width, height, bit_depth, pixels)
}

/// Serializes an image as PGM with `maxval = 2^q - 1`.
pub fn write_pgm(img: &Image, binary: bool) -> Vec<u8> {
    let maxval = max_value(img.bit_depth()).min(65535);
    let mut out = format!(
        "{}\n{} {}\n{}\n",
        if binary { "P5" } else { "P2" },
        img.width(),
        img.height(),
        maxval
    )
    .into_bytes();
    if binary {
        for &p in img.pixels() {
            if maxval > 255 {
                out.extend_from_slice(&(p as u16).to_be_bytes());
            } else {
                out.push(p as u8);
            }
        }
    } else {
        for row in img.pixels().chunks(img.width()) {
            let line: Vec<String> = row.iter().map(u32::to_string).collect();
            out.extend_from_slice(line.join(" ").as_bytes());
            out.push(b'\n');
        }
    }
    out
}

fn parse_number(tok: &[u8]) -> Option<u64> {
    if tok.is_empty() || !tok.iter().all(u8::is_ascii_digit) {
        return None;
    }
    std::str::from_utf8(tok).ok()?.parse().ok()
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_space_and_comments(&mut self) {
        while let Some(&b) = self.bytes.get(self.pos) {
            if b == b'#' {
                while let Some(&c) = self.bytes.get(self.pos) {
                    self.pos += 1;
                    if c == b'\n' || c == b'\r' {
                        break;
                    }
                }
            } else if b.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn next_token(&mut self) -> Option<&'a [u8]> {
        self.skip_space_and_comments();
        let start = self.pos;
        while let Some(&b) = self.bytes.get(self.pos) {
            if b.is_ascii_whitespace() || b == b'#' {
                break;
            }
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.bytes[start..self.pos])
    }

    fn token(&mut self) -> Result<&'a [u8]> {
        self.next_token()
            .ok_or_else(|| Error::MalformedHeader("unexpected end of header".into()))
    }

    fn header_number(&mut self, field: &str) -> Result<u64> {
        let tok = self.token()?;
        parse_number(tok).ok_or_else(|| {
            Error::MalformedHeader(format!(
                "bad {field} {:?}",
                String::from_utf8_lossy(tok)
            ))
        })
    }
}
