//! Coefficient rings for the series types.
//!
//! Every series in this crate is generic over a [`Coefficient`]. The crate
//! root fixes the verification type to [`num_bigint::BigInt`]; the machine
//! integer and rational instances exist for cheap experiments and for checks
//! that want division.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{FromPrimitive, NumAssignRef, NumRef, One, Zero};

/// A commutative ring with identity, usable as a series coefficient.
pub trait Coefficient:
    NumRef + NumAssignRef + Neg<Output = Self> + FromPrimitive + Clone + Debug + Display + Send + Sync + 'static
{
    /// Multiplicative inverse when `self` is a unit of the ring.
    fn unit_inverse(&self) -> Option<Self>;

    fn from_count(n: u64) -> Self {
        Self::from_u64(n).expect("count fits the coefficient type")
    }
}

macro_rules! integer_coefficient {
    ($($t:ty)*) => ($(
        impl Coefficient for $t {
            fn unit_inverse(&self) -> Option<Self> {
                if self.is_one() || (-self.clone()).is_one() {
                    Some(self.clone())
                } else {
                    None
                }
            }
        }
    )*)
}

integer_coefficient!(i64 i128 BigInt);

macro_rules! field_coefficient {
    ($($t:ty)*) => ($(
        impl Coefficient for $t {
            fn unit_inverse(&self) -> Option<Self> {
                if self.is_zero() {
                    None
                } else {
                    Some(self.recip())
                }
            }
        }
    )*)
}

field_coefficient!(Rational64 BigRational);

/// Sign of `(-1)^e` as a coefficient.
pub(crate) fn sign<T: Coefficient>(e: usize) -> T {
    if e.is_multiple_of(2) {
        T::one()
    } else {
        -T::one()
    }
}
