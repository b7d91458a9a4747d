//! Multi-class grasp-intention decoding from multimodal EEG+EMG trials.
//!
//! The library implements an offline decoding pipeline — BrainVision /
//! session-bundle input, zero-phase filtering, epoching, CSP feature
//! extraction and one-vs-rest LDA — together with an EMG-gated
//! subject-specific time-segment selection stage and a 10x10
//! cross-validation harness that compares it against the conventional
//! fixed-window pipeline.

pub mod error;
pub mod filter;
pub mod linalg;
pub mod recording;
pub mod scalar;

pub use error::{Error, Result};
pub use recording::{Marker, MarkerKind, Modality, Recording};
pub use scalar::Scalar;

/// Single-precision recording (native scalar of the session-bundle payload).
pub type Recording32 = Recording<f32>;
/// Double-precision recording (default for analysis).
pub type Recording64 = Recording<f64>;
