use thiserror::Error;

use crate::joint::Stage;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed PGM header: {0}")]
    MalformedHeader(String),

    #[error("PGM maxval {0} outside [1, 65535]")]
    MaxvalOutOfRange(u32),

    #[error("pixel count mismatch: expected {expected}, found {found}")]
    PixelCountMismatch { expected: usize, found: usize },

    #[error("pixel value {value} at index {index} exceeds {max}")]
    PixelOutOfRange { index: usize, value: u32, max: u32 },

    #[error("image is not square ({width}x{height})")]
    NotSquare { width: usize, height: usize },

    #[error("image side {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("big image side 2^{n} must exceed small image side 2^{m}")]
    SideOrder { n: u32, m: u32 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("operation requires stage {expected:?}, state is at {found:?}")]
    WrongStage { expected: Stage, found: Stage },

    #[error("index {index} out of range for register of size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("side length {0} must be a power of two >= 2")]
    InvalidSide(u64),

    #[error("closed form is only available for 1 <= i <= 4, got {0}")]
    IterationOutOfRange(u32),

    #[error("sample count must be at least 1")]
    NoSamples,

    #[error("{required} qubits exceed the simulator cap of {cap}")]
    QubitCapExceeded { required: u32, cap: u32 },
}

impl Error {
    /// True for errors caused by image shape/size rules rather than parsing.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::NotSquare { .. }
                | Error::NotPowerOfTwo(_)
                | Error::SideOrder { .. }
                | Error::DimensionMismatch(_)
        )
    }
}
