use thiserror::Error;

/// Errors produced by the projectron pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("empty input image")]
    EmptyImage,

    #[error("target side must be at least 2, got {0}")]
    BadTargetSide(usize),

    #[error("image is not square: {width}x{height}")]
    NotSquare { width: usize, height: usize },

    #[error("pixel buffer length {len} does not match side {side}")]
    BadPixelCount { side: usize, len: usize },

    #[error("pixel values must be finite and in [0, 1]")]
    PixelOutOfRange,

    #[error("projection angle {0} out of range [0, 180)")]
    AngleOutOfRange(f64),

    #[error("angle step must be in (0, 180], got {0}")]
    BadAngleStep(f64),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("paired layer needs an even input width, got {0}")]
    OddPairInput(usize),

    #[error("encode width must be even and >= 2, got {0}")]
    OddEncodeWidth(usize),

    #[error("invalid architecture: {0}")]
    BadArchitecture(String),

    #[error("label {label} out of range for {classes} classes")]
    LabelOutOfRange { label: usize, classes: usize },

    #[error("gradient/parameter shape mismatch at tensor {0}")]
    ShapeMismatch(usize),

    #[error("bad magic number in {path}: expected {expected}, got {got}")]
    BadMagic {
        path: String,
        expected: u32,
        got: u32,
    },

    #[error("truncated file {path}: expected {expected} bytes after header, got {got}")]
    Truncated {
        path: String,
        expected: usize,
        got: usize,
    },

    #[error("image/label count mismatch: {images} images vs {labels} labels")]
    CountMismatch { images: usize, labels: usize },

    #[error("manifest is empty")]
    EmptyManifest,

    #[error("malformed manifest row {line}: {reason}")]
    BadManifestRow { line: usize, reason: String },

    #[error("duplicate path in manifest: {0}")]
    DuplicatePath(String),

    #[error("missing file listed in manifest: {0}")]
    MissingFile(String),

    #[error("unreadable image {path}: {reason}")]
    UnreadableImage { path: String, reason: String },

    #[error("dataset is empty")]
    EmptyDataset,

    #[error("dataset too small: need at least {need} items, got {got}")]
    DatasetTooSmall { need: usize, got: usize },

    #[error("feature width {features} does not match model input width {model}")]
    WidthMismatch { features: usize, model: usize },

    #[error("invalid checkpoint: {0}")]
    BadCheckpoint(String),

    #[error("malformed code '{code}': {reason}")]
    BadCode { code: String, reason: String },

    #[error("invalid schema: {0}")]
    BadSchema(String),

    #[error("prediction/label lists differ in length: {predictions} vs {labels}")]
    LengthMismatch { predictions: usize, labels: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
