//! Scalar traits the numeric code is generic over.

use std::fmt::{Debug, Display};

use nalgebra::RealField;
use num_traits::{CheckedAdd, CheckedMul, CheckedNeg, CheckedSub, PrimInt, Signed};

/// Real field used for chains, Laplacians and filtrations (`f32` or `f64`).
pub trait Real: RealField + Copy + Display + num_traits::FromPrimitive + num_traits::ToPrimitive {
    /// Lift an `f64` literal into the field.
    fn lit(x: f64) -> Self {
        nalgebra::convert(x)
    }

    /// Relative threshold below which singular values and eigenvalues count as zero.
    ///
    /// 1e-9 in double precision; widened to a small multiple of machine epsilon when the
    /// type cannot resolve 1e-9.
    fn zero_tolerance() -> Self {
        let floor = Self::default_epsilon() * Self::lit(64.0);
        let target = Self::lit(1e-9);
        if floor > target {
            floor
        } else {
            target
        }
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Exact integer type for Smith normal form and exactness checks.
///
/// All arithmetic goes through the checked operations; overflow is an error.
pub trait Int:
    PrimInt + Signed + CheckedAdd + CheckedSub + CheckedMul + CheckedNeg + Debug + Display + 'static
{
}

impl<I> Int for I where
    I: PrimInt + Signed + CheckedAdd + CheckedSub + CheckedMul + CheckedNeg + Debug + Display + 'static
{
}
