//! Exact rational arithmetic and small number-theoretic helpers.
//!
//! [`Rational`] wraps an arbitrary-precision reduced fraction with the
//! invariants this crate relies on everywhere: denominator strictly positive,
//! numerator and denominator coprime, and a stable `"num/den"` text form used
//! by both the CLI and the JSON interface (integers render as `"n/1"`).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact rational number: reduced, with positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds a reduced fraction, rejecting zero denominators.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num.into(), den)))
    }

    /// The integer `n` as `n/1`.
    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    /// `0/1`.
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    /// `1/1`.
    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// The reduced numerator (sign lives here).
    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// The reduced denominator, always >= 1.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// True when the denominator is 1.
    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// True for `0/1`.
    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Largest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// Sign as -1, 0, or 1.
    pub fn signum(&self) -> i8 {
        match self.0.numer().sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    /// Absolute value.
    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Exact division, rejecting a zero divisor.
    pub fn checked_div(&self, rhs: &Rational) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    /// Decimal rendering to `digits` fractional places (round-to-nearest,
    /// ties away from zero), for the opt-in approximate output mode.
    pub fn to_decimal(&self, digits: u32) -> String {
        let scale = BigInt::from(10u32).pow(digits);
        let scaled = &self.0 * BigRational::from_integer(scale.clone());
        let twice = &scaled.numer().clone() * BigInt::from(2) + scaled.denom();
        let rounded = twice.div_floor(&(scaled.denom() * BigInt::from(2)));
        let negative = rounded.is_negative();
        let mag = rounded.magnitude().clone();
        let digits_str = mag.to_string();
        let digits = digits as usize;
        let (int_part, frac_part) = if digits == 0 {
            (digits_str.clone(), String::new())
        } else if digits_str.len() > digits {
            let split = digits_str.len() - digits;
            (
                digits_str[..split].to_string(),
                digits_str[split..].to_string(),
            )
        } else {
            (
                "0".to_string(),
                format!("{:0>width$}", digits_str, width = digits),
            )
        };
        let sign = if negative && (int_part != "0" || frac_part.bytes().any(|b| b != b'0')) {
            "-"
        } else {
            ""
        };
        if frac_part.is_empty() {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac_part}")
        }
    }
}

/// Builds a reduced fraction, rejecting zero denominators.
///
/// Free-function spelling of [`Rational::new`].
pub fn make_rational(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Rational> {
    Rational::new(num, den)
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num
            .parse()
            .map_err(|_| Error::Parse(format!("invalid rational {s:?}")))?;
        let den: BigInt = den
            .parse()
            .map_err(|_| Error::Parse(format!("invalid rational {s:?}")))?;
        Rational::new(num, den)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_int(n)
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
        impl<'a> $trait<&'a Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
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
        assert!(!rhs.is_zero(), "division by zero rational");
        Rational(self.0 / rhs.0)
    }
}

impl Div<&Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
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

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct RationalVisitor;

        impl de::Visitor<'_> for RationalVisitor {
            type Value = Rational;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a \"num/den\" string or an integer")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Rational, E> {
                v.parse().map_err(E::custom)
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Rational, E> {
                Ok(Rational::from_int(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Rational, E> {
                Ok(Rational::from_int(BigInt::from(v)))
            }

            fn visit_i128<E: de::Error>(self, v: i128) -> std::result::Result<Rational, E> {
                Ok(Rational::from_int(BigInt::from(v)))
            }
        }

        deserializer.deserialize_any(RationalVisitor)
    }
}

/// `p = d^2 * p_prime` with `p_prime` square-free.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareFreeDecomposition {
    /// The extracted square root of the square part.
    pub d: i64,
    /// The square-free part.
    pub p_prime: i64,
}

/// Splits a positive integer as `d^2 * p_prime` with `p_prime` square-free.
///
/// Trial division; intended for desk-scale inputs.
pub fn squarefree_decompose(p: i64) -> Result<SquareFreeDecomposition> {
    if p <= 0 {
        return Err(Error::NonPositive {
            what: "squarefree_decompose input",
            got: p,
        });
    }
    let mut rest = p;
    let mut d: i64 = 1;
    let mut p_prime: i64 = 1;
    let mut f: i64 = 2;
    while f.checked_mul(f).is_some_and(|ff| ff <= rest) {
        if rest % f == 0 {
            let mut e = 0u32;
            while rest % f == 0 {
                rest /= f;
                e += 1;
            }
            for _ in 0..e / 2 {
                d *= f;
            }
            if e % 2 == 1 {
                p_prime *= f;
            }
        }
        f += if f == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        p_prime *= rest;
    }
    Ok(SquareFreeDecomposition { d, p_prime })
}

/// Non-negative gcd; `gcd_pair(0, 0) = 0`.
pub fn gcd_pair(a: i64, b: i64) -> u64 {
    a.unsigned_abs().gcd(&b.unsigned_abs())
}
