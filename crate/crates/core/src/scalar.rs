//! Element type abstraction: f32 for training, f64 for gradient checking.

use std::fmt::{Debug, Display};
use std::iter::Sum;

/// Floating-point element of a [`crate::tensor::Tensor`].
///
/// Training runs in `f32`; gradient verification re-runs the same code
/// paths in `f64` where central differences are trustworthy.
pub trait Scalar:
    num_traits::Float + num_traits::NumAssign + Sum + Send + Sync + Debug + Display + 'static
{
    fn from_f64(x: f64) -> Self;
    fn to_f64(self) -> f64;
}

impl Scalar for f32 {
    #[inline]
    fn from_f64(x: f64) -> Self {
        x as f32
    }
    #[inline]
    fn to_f64(self) -> f64 {
        self as f64
    }
}

impl Scalar for f64 {
    #[inline]
    fn from_f64(x: f64) -> Self {
        x
    }
    #[inline]
    fn to_f64(self) -> f64 {
        self
    }
}
