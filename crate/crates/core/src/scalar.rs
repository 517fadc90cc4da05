//! Floating-point scalar abstraction.
//!
//! All numeric code in this crate is generic over [`Scalar`], so the same
//! routines run in `f32` or `f64`. The documented tolerances (and every
//! test) assume `f64`; the `f32` instantiation exists for callers that
//! trade precision for footprint.

use std::fmt;
use std::iter::Sum;
use std::ops::{AddAssign, MulAssign, SubAssign};

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Floating-point scalar: `f32` or `f64`.
pub trait Scalar:
    Float
    + FromPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + Sum<Self>
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
{
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Converts literals and counts into the scalar type.
///
/// Panics on values not representable at all (never the case for the
/// horizons and constants used in this crate).
#[inline]
pub fn cast<F: Scalar, T: ToPrimitive>(v: T) -> F {
    F::from(v).expect("numeric cast")
}
