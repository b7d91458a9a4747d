//! Scalar abstraction for the numeric core.
//!
//! Everything downstream of I/O (filters, covariances, eigensolver, LDA,
//! cross-validation) is generic over [`Scalar`], so the same pipeline runs
//! in `f32` or `f64`. Concrete aliases for the common types live at the
//! crate root.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use ndarray::{LinalgScalar, ScalarOperand};
use num_traits::{Float, FromPrimitive, NumAssign};

/// Floating-point scalar usable throughout the pipeline: `f32` or `f64`.
pub trait Scalar:
    Float
    + FromPrimitive
    + NumAssign
    + Sum<Self>
    + ScalarOperand
    + LinalgScalar
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Lossless-enough conversion from an `f64` constant (filter
    /// coefficients, config values). Panics only for non-finite inputs
    /// that the target type cannot represent, which config validation
    /// rules out.
    fn from_f64c(v: f64) -> Self {
        Self::from_f64(v).expect("constant not representable in scalar type")
    }

    /// Widening conversion used by oracles and aggregation.
    fn to_f64c(self) -> f64 {
        self.to_f64().expect("scalar not representable as f64")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
