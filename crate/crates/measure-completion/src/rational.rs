//! Exact rational arithmetic over arbitrary-precision integers.
//!
//! Every measure, distance, and tolerance in this crate is a [`Rational`].
//! Values are kept in lowest terms with a positive denominator, so equal
//! rationals are structurally equal and every comparison is exact.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::Error;

/// An exact rational number in canonical form (lowest terms, positive
/// denominator).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(BigRational);

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // Canonical form has positive denominators, so equal denominators
        // compare by numerator without cross-multiplying.
        if self.0.denom() == other.0.denom() {
            self.0.numer().cmp(other.0.numer())
        } else {
            self.0.cmp(&other.0)
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Rational {
    /// Builds `numer / denom`, reducing to canonical form.
    ///
    /// Panics if `denom` is zero.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        Rational(BigRational::new(numer.into(), denom.into()))
    }

    /// Convenience constructor from machine integers.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        Self::new(numer, denom)
    }

    pub fn from_int(value: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(value)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// Exact power of two, `2^exp`, for positive or negative exponents.
    pub fn pow2(exp: i32) -> Self {
        Rational::from_int(2).pow(exp)
    }

    /// Exact integer power with negative exponents allowed (base nonzero).
    pub fn pow(&self, exp: i32) -> Self {
        Rational(Pow::pow(&self.0, exp))
    }

    /// Fast path for dyadic rationals `num / 2^log2_den`; reduces by
    /// shifting out common factors of two.
    pub(crate) fn from_dyadic(num: u128, log2_den: u32) -> Self {
        if num == 0 {
            return Rational::zero();
        }
        let shift = num.trailing_zeros().min(log2_den);
        let numer = BigInt::from(num >> shift);
        let pow = log2_den - shift;
        let denom = if pow <= 127 {
            BigInt::from(1u128 << pow)
        } else {
            BigInt::one() << pow
        };
        Rational(BigRational::new_raw(numer, denom))
    }

    /// Fast path for triadic rationals `num / 3^pow3`.
    pub(crate) fn from_ternary(mut num: u128, mut pow3: u32) -> Self {
        if num == 0 {
            return Rational::zero();
        }
        while pow3 > 0 && num.is_multiple_of(3) {
            num /= 3;
            pow3 -= 1;
        }
        let denom = if pow3 <= 80 {
            BigInt::from(3u128.pow(pow3))
        } else {
            BigInt::from(3u8).pow(pow3)
        };
        Rational(BigRational::new_raw(BigInt::from(num), denom))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    /// Smallest integer `>= self`, as `u64`. Panics when the value is
    /// negative or does not fit; callers only apply this to small positive
    /// tolerances turned into indices.
    pub fn ceil_u64(&self) -> u64 {
        let c = self.0.ceil();
        let int = c.to_integer();
        u64::try_from(int).expect("ceiling out of u64 range")
    }

    /// Halves the value exactly.
    pub fn half(&self) -> Self {
        Rational(&self.0 / BigInt::from(2))
    }
}

macro_rules! delegate_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

delegate_binop!(Add, add);
delegate_binop!(Sub, sub);
delegate_binop!(Mul, mul);
delegate_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Parses `integer` or `integer "/" positive-integer`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let err = |msg: &str| Error::Parse {
            pos: 0,
            msg: format!("{msg}: {s:?}"),
        };
        match s.split_once('/') {
            None => {
                let n: BigInt = s.parse().map_err(|_| err("expected integer"))?;
                Ok(Rational(BigRational::from_integer(n)))
            }
            Some((p, q)) => {
                let p: BigInt = p.trim().parse().map_err(|_| err("expected integer"))?;
                let q: BigInt = q.trim().parse().map_err(|_| err("expected integer"))?;
                if !q.is_positive() {
                    return Err(err("denominator must be positive"));
                }
                Ok(Rational(BigRational::new(p, q)))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_is_unique() {
        assert_eq!(Rational::ratio(2, 4), Rational::ratio(1, 2));
        assert_eq!(Rational::ratio(-3, -6), Rational::ratio(1, 2));
        assert_eq!(Rational::ratio(3, -6), Rational::ratio(-1, 2));
        assert_eq!(Rational::ratio(0, 7), Rational::zero());
    }

    #[test]
    fn arithmetic_is_exact() {
        let third = Rational::ratio(1, 3);
        let sum = &third + &third + &third;
        assert_eq!(sum, Rational::one());
        assert_eq!(Rational::ratio(1, 6) + Rational::ratio(1, 10), Rational::ratio(4, 15));
        assert_eq!(Rational::ratio(1, 2) * Rational::ratio(2, 3), Rational::ratio(1, 3));
        assert_eq!(Rational::ratio(1, 2) - Rational::ratio(3, 4), Rational::ratio(-1, 4));
    }

    #[test]
    fn powers_of_two() {
        assert_eq!(Rational::pow2(-3), Rational::ratio(1, 8));
        assert_eq!(Rational::pow2(4), Rational::from_int(16));
        assert_eq!(Rational::ratio(2, 3).pow(3), Rational::ratio(8, 27));
        assert_eq!(Rational::ratio(2, 3).pow(-2), Rational::ratio(9, 4));
    }

    #[test]
    fn dyadic_and_ternary_fast_paths_are_canonical() {
        assert_eq!(Rational::from_dyadic(6, 4), Rational::ratio(3, 8));
        assert_eq!(Rational::from_dyadic(0, 10), Rational::zero());
        assert_eq!(Rational::from_dyadic(8, 3), Rational::from_int(1));
        assert_eq!(Rational::from_ternary(6, 2), Rational::ratio(2, 3));
        assert_eq!(Rational::from_ternary(9, 2), Rational::one());
    }

    #[test]
    fn display_round_trips_through_parse() {
        for r in [
            Rational::ratio(1, 2),
            Rational::from_int(-3),
            Rational::zero(),
            Rational::ratio(-7, 12),
        ] {
            let shown = r.to_string();
            let back: Rational = shown.parse().unwrap();
            assert_eq!(back, r, "round trip failed for {shown}");
        }
    }

    #[test]
    fn parse_rejects_bad_denominators() {
        assert!("1/0".parse::<Rational>().is_err());
        assert!("1/-2".parse::<Rational>().is_err());
        assert!("x/2".parse::<Rational>().is_err());
    }

    #[test]
    fn ceil_to_index() {
        assert_eq!(Rational::ratio(7, 2).ceil_u64(), 4);
        assert_eq!(Rational::from_int(4).ceil_u64(), 4);
        assert_eq!(Rational::ratio(1, 1000).ceil_u64(), 1);
    }
}
