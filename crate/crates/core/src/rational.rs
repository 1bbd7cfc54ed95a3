//! Exact rational scalars and the 2-adic valuation.
//!
//! [`Rational`] wraps an arbitrary-precision `num_rational::BigRational`,
//! which is always kept in lowest terms with a positive denominator. The
//! wrapper fixes the serialization format (`"p/q"` strings, never floats)
//! and carries the 2-adic valuation used by the determinant checks.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Exact rational number in lowest terms, denominator > 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

/// Value of the 2-adic valuation: finite, or the `+inf` sentinel at 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ord2 {
    Finite(i64),
    PlusInfinity,
}

impl fmt::Display for Ord2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ord2::Finite(v) => write!(f, "{v}"),
            Ord2::PlusInfinity => write!(f, "+inf"),
        }
    }
}

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_big(numer: BigInt, denom: BigInt) -> Self {
        assert!(!denom.is_zero(), "zero denominator");
        Rational(BigRational::new(numer, denom))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        Rational(self.0.recip())
    }

    /// Integer power with negative exponents allowed (base must be nonzero
    /// for negative exponents).
    pub fn pow(&self, exp: i64) -> Self {
        Rational(self.0.pow(
            i32::try_from(exp).expect("exponent out of i32 range"),
        ))
    }

    /// 2^exp as an exact rational, any sign of `exp`.
    pub fn pow2(exp: i64) -> Self {
        Rational::new(2, 1).pow(exp)
    }

    /// 2-adic valuation; `ord2(p/q) = v2(p) - v2(q)`, with an explicit
    /// `+inf` sentinel at 0.
    pub fn ord2(&self) -> Ord2 {
        if self.is_zero() {
            return Ord2::PlusInfinity;
        }
        Ord2::Finite(v2(self.numer()) - v2(self.denom()))
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.0.to_f64().unwrap_or_else(|| {
            // Fall back to a quotient of leading digits for huge operands.
            let n = self.numer().to_f64().unwrap_or(f64::NAN);
            let d = self.denom().to_f64().unwrap_or(f64::NAN);
            n / d
        })
    }
}

/// 2-adic valuation of a nonzero integer.
fn v2(n: &BigInt) -> i64 {
    debug_assert!(!n.is_zero());
    n.trailing_zeros().map(|z| z as i64).unwrap_or(0)
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<&BigInt> for Rational {
    fn from(n: &BigInt) -> Self {
        Rational(BigRational::from_integer(n.clone()))
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(&self.0 $op &rhs.0)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0 $op &rhs.0)
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(&self.0 $op rhs.0)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(self.0 / rhs.0)
    }
}

impl Div<&Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(&self.0 / &rhs.0)
    }
}

impl Div<&Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(self.0 / &rhs.0)
    }
}

impl Div<Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(&self.0 / rhs.0)
    }
}

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

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let numer = BigInt::from_str(n.trim()).map_err(|e| e.to_string())?;
        let denom = BigInt::from_str(d.trim()).map_err(|e| e.to_string())?;
        if denom.is_zero() {
            return Err("zero denominator".to_string());
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Rational::from_str(&s).map_err(D::Error::custom)
    }
}

/// Exact binomial coefficient, 0 when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Exact factorial.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn ord2_values() {
        assert_eq!(r(-180, 1).ord2(), Ord2::Finite(2));
        assert_eq!(r(1, 6).ord2(), Ord2::Finite(-1));
        assert_eq!(Rational::zero().ord2(), Ord2::PlusInfinity);
    }

    #[test]
    fn ord2_multiplicative() {
        let cases = [r(3, 8), r(-20, 7), r(5, 12), r(96, 5)];
        for x in &cases {
            for y in &cases {
                let (Ord2::Finite(a), Ord2::Finite(b), Ord2::Finite(c)) =
                    (x.ord2(), y.ord2(), (x * y).ord2())
                else {
                    panic!("unexpected infinite valuation");
                };
                assert_eq!(c, a + b);
            }
        }
    }

    #[test]
    fn display_and_parse_round_trip() {
        for s in ["-180", "1/6", "0", "-691/2730"] {
            let x: Rational = s.parse().unwrap();
            assert_eq!(x.to_string(), s);
        }
        assert_eq!("4/6".parse::<Rational>().unwrap(), r(2, 3));
    }

    #[test]
    fn lowest_terms_invariant() {
        let x = r(4, -6);
        assert_eq!(x, r(-2, 3));
        assert!(x.denom() > &BigInt::zero());
    }

    #[test]
    fn pow2_negative_exponent() {
        assert_eq!(Rational::pow2(-3), r(1, 8));
        assert_eq!(Rational::pow2(0), r(1, 1));
        assert_eq!(Rational::pow2(5), r(32, 1));
    }

    #[test]
    fn binomial_and_factorial() {
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(binomial(3, 4), BigInt::zero());
        assert_eq!(factorial(6), BigInt::from(720));
    }
}
