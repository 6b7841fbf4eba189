//! Numeric abstractions shared by the exact and floating-point code paths.
//!
//! Field-valued routines (pseudo-weights, Gaussian elimination) are generic
//! over [`Scalar`]; fraction-free routines (Bareiss elimination, ray
//! enumeration) are generic over [`ExactInt`].

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Num, Signed, ToPrimitive};

/// A field element: exact rationals or IEEE floats.
pub trait Scalar: Num + Clone + PartialOrd + Signed + FromPrimitive + ToPrimitive + Debug {
    /// `true` when arithmetic is exact and comparisons with zero are reliable.
    const EXACT: bool;

    /// Pivot threshold for elimination. Exact types treat only zero as negligible.
    fn is_negligible(&self) -> bool;

    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer is representable in every scalar type")
    }
}

macro_rules! float_scalar {
    ($t:ty, $eps:expr) => {
        impl Scalar for $t {
            const EXACT: bool = false;
            fn is_negligible(&self) -> bool {
                self.abs() <= $eps
            }
        }
    };
}

float_scalar!(f32, 1e-5);
float_scalar!(f64, 1e-10);

impl<T> Scalar for Ratio<T>
where
    T: Integer + Signed + Clone + FromPrimitive + ToPrimitive + Debug + num_bigint::ToBigInt,
    Ratio<T>: FromPrimitive,
{
    const EXACT: bool = true;
    fn is_negligible(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
}

/// An integral domain with overflow-aware multiplication, for
/// fraction-free algorithms. Machine integers report overflow as `None`;
/// `BigInt` never overflows.
pub trait ExactInt:
    Integer
    + Signed
    + Clone
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + Hash
    + Debug
    + Send
    + Sync
{
    fn to_bigint(&self) -> BigInt;
}

impl ExactInt for i64 {
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl ExactInt for i128 {
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl ExactInt for BigInt {
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

/// Anything that can be compared against zero and summed: integers,
/// rationals and floats. Cone membership is generic over this.
pub trait Coordinate: Signed + Clone + PartialOrd {}

impl<T: Signed + Clone + PartialOrd> Coordinate for T {}

/// Greatest common divisor of all entries (zero for the zero vector).
pub fn content<T: ExactInt>(v: &[T]) -> T {
    v.iter().fold(T::zero(), |g, x| g.gcd(x))
}

/// Divides out the content, returning `false` for the zero vector.
pub fn make_primitive<T: ExactInt>(v: &mut [T]) -> bool {
    let g = content(v);
    if g.is_zero() {
        return false;
    }
    if !g.is_one() {
        for x in v.iter_mut() {
            *x = x.clone() / g.clone();
        }
    }
    true
}
