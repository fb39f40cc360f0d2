use std::path::PathBuf;

use thiserror::Error;

use crate::lip::GreyValue;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("grey scale must be a positive finite number, got {0}")]
    InvalidScale(f64),

    #[error("grey value {0} lies above the grey scale bound {1}")]
    AboveScale(GreyValue, f64),

    #[error("grey value is NaN")]
    NotANumber,

    #[error("undefined LIP sum at lattice extremes (-inf with M)")]
    UndefinedSum,

    #[error("no LIP opposite for black (value equal to M)")]
    NoOpposite,

    #[error("LIP difference undefined: subtrahend {0} is not below M")]
    UndefinedDifference(GreyValue),

    #[error("LIP scalar multiplication has no real result for lambda={lambda}, value={value}")]
    NonReal { lambda: f64, value: GreyValue },

    #[error("images must have positive dimensions, got {width}x{height}")]
    EmptyImage { width: usize, height: usize },

    #[error("pixel buffer holds {got} values, expected {expected}")]
    PixelCount { expected: usize, got: usize },

    #[error("grey scales differ ({0} vs {1})")]
    ScaleMismatch(f64, f64),

    #[error("image dimensions differ ({0}x{1} vs {2}x{3})")]
    ShapeMismatch(usize, usize, usize, usize),

    #[error("empty structuring function")]
    EmptyStructuringFunction,

    #[error("duplicate structuring function offset ({0}, {1})")]
    DuplicateOffset(isize, isize),

    #[error("structuring function value {value} at ({dx}, {dy}) is outside the range allowed for {kind} functions")]
    StructuringValue {
        dx: isize,
        dy: isize,
        value: f64,
        kind: &'static str,
    },

    #[error("operator needs a {expected} structuring function")]
    WrongKind { expected: &'static str },

    #[error("{0}")]
    Parse(String),

    #[error("invalid structuring function parameter: {0}")]
    InvalidShape(String),

    #[error("complement undefined outside display range: pixel {0}")]
    ComplementRange(GreyValue),

    #[error("cannot rescale unbounded image")]
    Unbounded,

    #[error("image is not displayable: pixel {0} is not an integer in 0..=255")]
    NotDisplayable(GreyValue),

    #[error("signal length must be at least {min}, got {got}")]
    SignalTooShort { min: usize, got: usize },

    #[error("malformed image file: {0}")]
    Format(String),

    #[error("unsupported bit depth: {0}")]
    UnsupportedBitDepth(String),

    #[error("unsupported file extension for {0}")]
    UnsupportedExtension(PathBuf),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Image(#[from] image::ImageError),
}
