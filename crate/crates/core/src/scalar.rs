//! Scalar abstraction for the floating-point side of the crate.
//!
//! Spectral routines are written once against [`Real`] and instantiated for
//! `f64` (the default used by the theorem checks and the CLI) and `f32`.
//! Exact quantities (spanning-tree counts, hypothesis arithmetic) never go
//! through this trait; they use integers.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Real floating-point scalar usable by the eigensolver and energy formulas.
pub trait Real: Float + FromPrimitive + ToPrimitive + Debug + Display + Sum + Send + Sync + 'static {
    /// Converts an `f64` constant, panicking only for types that cannot
    /// represent ordinary finite constants (never for `f32`/`f64`).
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("finite constant representable in scalar type")
    }

    fn of_usize(x: usize) -> Self {
        Self::from_usize(x).expect("integer representable in scalar type")
    }

    fn of_i64(x: i64) -> Self {
        Self::from_i64(x).expect("integer representable in scalar type")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn two() -> Self {
        Self::one() + Self::one()
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Returns true when `x` lies within `eps` of an integer.
pub fn near_integer<T: Real>(x: T, eps: T) -> bool {
    (x - x.round()).abs() <= eps
}
