//! Crate-wide error type.

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    // ---- file formats ----
    #[error("required header key missing: {0}")]
    MissingKey(String),
    #[error("unsupported format: {0}")]
    UnsupportedFormat(String),
    #[error("malformed marker line {line}: {content:?}")]
    MalformedLine { line: usize, content: String },
    #[error("payload length mismatch: {got} bytes, expected a multiple of {unit} ({context})")]
    LengthMismatch {
        got: usize,
        unit: usize,
        context: String,
    },
    #[error("session bundle schema error: {0}")]
    SchemaError(String),
    #[error("marker at sample {sample} outside recording of {len} samples")]
    MarkerOutOfRange { sample: usize, len: usize },

    // ---- preprocessing ----
    #[error("invalid filter band: {0}")]
    InvalidBand(String),
    #[error("unknown channel {0:?}")]
    UnknownChannel(String),
    #[error("invalid downsample factor {0}")]
    InvalidFactor(usize),
    #[error("epoch window [{start_s}, {end_s}) s around cue at sample {cue} falls outside the recording")]
    WindowOutOfRange { cue: usize, start_s: f64, end_s: f64 },

    // ---- EMG gating ----
    #[error("RMS window ({win} samples) does not fit in signal ({len} samples)")]
    WindowTooLarge { win: usize, len: usize },
    #[error("baseline envelope is empty")]
    EmptyBaseline,
    #[error("segment length {length_s} s does not fit trial span [{span_lo}, {span_hi}] s")]
    BadLength {
        length_s: f64,
        span_lo: f64,
        span_hi: f64,
    },

    // ---- features / classifiers ----
    #[error("degenerate epoch: zero variance in every channel")]
    DegenerateEpoch,
    #[error("composite covariance is numerically singular (min eigenvalue {min_eig:e})")]
    SingularComposite { min_eig: f64 },
    #[error("pooled covariance is singular; increase shrinkage")]
    SingularCovariance,
    #[error("class {0} missing from training data")]
    MissingClass(u8),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    // ---- evaluation ----
    #[error("class {class} has {n} trials, fewer than {k} folds")]
    TooFewTrials { class: u8, n: usize, k: usize },
    #[error("cross-validation failed at repetition {rep}, fold {fold}: {source}")]
    CvCell {
        rep: usize,
        fold: usize,
        #[source]
        source: Box<Error>,
    },

    // ---- synthesis / config ----
    #[error("invalid synthesis spec: {0}")]
    InvalidSpec(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("model/report serialization failed: {0}")]
    Serde(#[from] serde_json::Error),
}

impl Error {
    /// Attach the (repetition, fold) coordinates of a failed CV cell.
    pub fn at_cell(self, rep: usize, fold: usize) -> Self {
        Error::CvCell {
            rep,
            fold,
            source: Box::new(self),
        }
    }
}
