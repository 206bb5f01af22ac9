//! Exact scalar fields.
//!
//! The kernel is generic over [`Field`], which is implemented only for exact
//! rational types. Floating point types deliberately do not implement it.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num};

/// An exact field of characteristic zero.
pub trait Field:
    Clone + PartialEq + Debug + Display + Num + Neg<Output = Self> + FromPrimitive + Send + Sync + 'static
{
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer is representable")
    }

    fn frac(n: i64, d: i64) -> Self {
        Self::from_int(n) / Self::from_int(d)
    }
}

impl Field for Ratio<BigInt> {}
impl Field for Ratio<i64> {}
impl Field for Ratio<i128> {}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    fn sum_two_ways<F: Field>(a: i64, b: i64, c: i64, d: i64) -> (F, F) {
        let direct = F::frac(a, b) + F::frac(c, d);
        let cross = F::frac(a * d + c * b, b * d);
        (direct, cross)
    }

    #[test]
    fn addition_agrees_both_ways() {
        for (a, b, c, d) in [(1, 2, 1, 3), (-7, 12, 5, 18), (3, 9, -1, 3), (0, 5, 4, 4)] {
            let (x, y) = sum_two_ways::<Ratio<BigInt>>(a, b, c, d);
            assert_eq!(x, y);
            let (x, y) = sum_two_ways::<Ratio<i64>>(a, b, c, d);
            assert_eq!(x, y);
        }
    }

    #[test]
    fn reduced_form() {
        let r = Ratio::<BigInt>::frac(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert!(Ratio::<BigInt>::frac(0, 7).is_zero());
        assert!(Ratio::<BigInt>::frac(7, 7).is_one());
    }
}
