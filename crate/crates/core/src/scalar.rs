use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::{Integer, Roots};
use num_traits::{NumAssign, PrimInt, Signed};

/// Signed machine integer usable by the exact arithmetic layer.
///
/// Everything the search touches is either an integer or an integer
/// multiple of a square root, so the scalar is always a signed integer;
/// rationals are built on top of it with `num_rational::Ratio<T>`.
pub trait Scalar:
    PrimInt + Signed + Integer + Roots + NumAssign + Hash + Debug + Display + Send + Sync + 'static
{
    /// Lossless conversion from a small non-negative count.
    fn from_usize(v: usize) -> Self {
        <Self as num_traits::NumCast>::from(v).expect("count does not fit in scalar")
    }

    fn to_usize(self) -> usize {
        num_traits::ToPrimitive::to_usize(&self).expect("scalar is not a valid index")
    }
}

impl<T> Scalar for T where
    T: PrimInt + Signed + Integer + Roots + NumAssign + Hash + Debug + Display + Send + Sync + 'static
{
}
