use std::io;

use thiserror::Error;

use crate::tensor::Axis;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the toolkit can report.
///
/// The `Display` form always starts with the variant name so that callers
/// (and the CLI) can grep for a stable reason code.
#[derive(Debug, Error)]
pub enum Error {
    #[error("UnknownFamily: unsupported wavelet family `{0}`")]
    UnknownFamily(String),
    #[error("NotOrthogonal: wavelet `{0}` is biorthogonal")]
    NotOrthogonal(&'static str),

    #[error("OddLength: signal length {0} is odd")]
    OddLength(usize),
    #[error("TooShort: signal length {0} is below 2")]
    TooShort(usize),
    #[error("LengthMismatch: approximation has {approx} coefficients, detail has {detail}")]
    LengthMismatch { approx: usize, detail: usize },
    #[error("NotDivisible: length {len} is not divisible by 2^{levels}")]
    NotDivisible { len: usize, levels: u32 },
    #[error("OddAxisLength: axis {axis} has odd length {len}")]
    OddAxisLength { axis: Axis, len: usize },
    #[error("ShapeMismatch: {0}")]
    ShapeMismatch(String),
    #[error("NotPositiveShape: dims {0:?} contain a zero")]
    NotPositiveShape([usize; 3]),

    #[error("MissingLayer: group `{group}` has no tensor for layer {layer}")]
    MissingLayer { group: String, layer: usize },
    #[error("ShapeInconsistent: {0}")]
    ShapeInconsistent(String),
    #[error("UnmatchedTensor: `{0}` matches no rule and passthrough is `error`")]
    UnmatchedTensor(String),
    #[error("InvalidPolicy: {0}")]
    InvalidPolicy(String),

    #[error("NotPowerOfTwoRatio: axis {axis} cannot map {src} to {tgt}")]
    NotPowerOfTwoRatio { axis: Axis, src: usize, tgt: usize },
    #[error("MixedDirection: {0}")]
    MixedDirection(String),
    #[error(
        "ResidualShapeMismatch: `{name}` has dims {dims:?} that depend on a resized dimension"
    )]
    ResidualShapeMismatch { name: String, dims: Vec<usize> },
    #[error("InvalidOption: {0}")]
    InvalidOption(String),

    #[error("DuplicateName: `{0}` appears more than once")]
    DuplicateName(String),
    #[error("BadMagic: expected WGT1, found {0:?}")]
    BadMagic([u8; 4]),
    #[error("UnsupportedVersion: {0}")]
    UnsupportedVersion(u32),
    #[error("TruncatedFile: {0}")]
    TruncatedFile(String),
    #[error("OverlappingSegments: {0}")]
    OverlappingSegments(String),
    #[error("NameOrderViolation: `{0}` is out of order")]
    NameOrderViolation(String),
    #[error("MalformedHeader: {0}")]
    MalformedHeader(String),

    #[error("InvalidCurve: {0}")]
    InvalidCurve(String),
    #[error("TargetNotReached: curve never reaches {0}")]
    TargetNotReached(f64),

    #[error("IoFailure: {0}")]
    Io(#[from] io::Error),
}

impl Error {
    /// Stable reason code (the variant name).
    pub fn code(&self) -> &'static str {
        match self {
            Error::UnknownFamily(_) => "UnknownFamily",
            Error::NotOrthogonal(_) => "NotOrthogonal",
            Error::OddLength(_) => "OddLength",
            Error::TooShort(_) => "TooShort",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::NotDivisible { .. } => "NotDivisible",
            Error::OddAxisLength { .. } => "OddAxisLength",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::NotPositiveShape(_) => "NotPositiveShape",
            Error::MissingLayer { .. } => "MissingLayer",
            Error::ShapeInconsistent(_) => "ShapeInconsistent",
            Error::UnmatchedTensor(_) => "UnmatchedTensor",
            Error::InvalidPolicy(_) => "InvalidPolicy",
            Error::NotPowerOfTwoRatio { .. } => "NotPowerOfTwoRatio",
            Error::MixedDirection(_) => "MixedDirection",
            Error::ResidualShapeMismatch { .. } => "ResidualShapeMismatch",
            Error::InvalidOption(_) => "InvalidOption",
            Error::DuplicateName(_) => "DuplicateName",
            Error::BadMagic(_) => "BadMagic",
            Error::UnsupportedVersion(_) => "UnsupportedVersion",
            Error::TruncatedFile(_) => "TruncatedFile",
            Error::OverlappingSegments(_) => "OverlappingSegments",
            Error::NameOrderViolation(_) => "NameOrderViolation",
            Error::MalformedHeader(_) => "MalformedHeader",
            Error::InvalidCurve(_) => "InvalidCurve",
            Error::TargetNotReached(_) => "TargetNotReached",
            Error::Io(_) => "IoFailure",
        }
    }
}
