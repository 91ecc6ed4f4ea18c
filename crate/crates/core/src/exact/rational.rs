//! Arbitrary-precision rational numbers with a fixed wire format.
//!
//! Thin newtype over `num_rational::BigRational`; the wrapper pins the
//! invariants the rest of the crate relies on (always reduced, denominator
//! positive) and the `p/q` string format used on every JSON surface.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Exact rational; reduced, denominator > 0 at all times.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Result<Self, Error> {
        if den == 0 {
            return Err(Error::domain("rational with zero denominator"));
        }
        Ok(Rational(BigRational::new(num.into(), den.into())))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "rational with zero denominator");
        Rational(BigRational::new(num, den))
    }

    pub fn from_i64(v: i64) -> Self {
        Rational(BigRational::from_integer(v.into()))
    }

    pub fn from_u64(v: u64) -> Self {
        Rational(BigRational::from_integer(v.into()))
    }

    pub fn from_int(v: BigInt) -> Self {
        Rational(BigRational::from_integer(v))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
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

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn floor_int(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn ceil_int(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    pub fn recip(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::domain("reciprocal of zero"));
        }
        Ok(Rational(self.0.recip()))
    }

    /// Square of self; keeps sign analysis in integer land.
    pub fn square(&self) -> Self {
        Rational(&self.0 * &self.0)
    }

    pub fn signum(&self) -> Ordering {
        if self.0.is_zero() {
            Ordering::Equal
        } else if self.0.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    /// Lossy conversion for display-only contexts (never verdicts).
    pub fn to_f64_lossy(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
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

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rational({})", self)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Parses `p` or `p/q` with optional leading `-` on `p`; `q` must be a
    /// positive integer. No whitespace, no `+` prefix, no empty parts.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::domain(format!("malformed rational {s:?}; expected p or p/q"));
        let (num_s, den_s) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let digits = |t: &str| -> bool { !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit()) };
        let num_digits = num_s.strip_prefix('-').unwrap_or(num_s);
        if !digits(num_digits) {
            return Err(bad());
        }
        // Reject absurdly long inputs up front; parsing is exact but the
        // arithmetic downstream is desk-scale.
        if num_digits.len() > 10_000 || den_s.map_or(false, |d| d.len() > 10_000) {
            return Err(Error::resource("rational literal longer than 10000 digits"));
        }
        let num: BigInt = num_s.parse().map_err(|_| bad())?;
        let den: BigInt = match den_s {
            None => BigInt::one(),
            Some(d) => {
                if !digits(d) {
                    return Err(bad());
                }
                let den: BigInt = d.parse().map_err(|_| bad())?;
                if den.is_zero() {
                    return Err(Error::domain(format!("zero denominator in {s:?}")));
                }
                den
            }
        };
        Ok(Rational(BigRational::new(num, den)))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }

        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero rational");
        Rational(self.0 / rhs.0)
    }
}

impl<'a> Div<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn div(self, rhs: &'a Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero rational");
        Rational(&self.0 / &rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl From<u64> for Rational {
    fn from(v: u64) -> Self {
        Rational::from_u64(v)
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::from_i64(v)
    }
}

impl From<BigUint> for Rational {
    fn from(v: BigUint) -> Self {
        Rational::from_int(v.into())
    }
}
