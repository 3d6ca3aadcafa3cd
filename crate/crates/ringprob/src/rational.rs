//! Exact rational arithmetic for probabilities and thresholds.
//!
//! Every probability, threshold and bound in this crate is an exact
//! fraction; floating point appears only in display-layer decimal
//! approximations. The inner representation is `num::BigRational`,
//! which keeps fractions reduced with a positive denominator.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Sub};
use std::str::FromStr;

/// An exact rational number. Always stored reduced, denominator > 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: BigInt, den: BigInt) -> Option<Rational> {
        if den.is_zero() {
            None
        } else {
            Some(Rational(BigRational::new(num, den)))
        }
    }

    /// Fraction of two counts, e.g. zero pairs over |R|².
    pub fn from_counts(num: u64, den: u64) -> Option<Rational> {
        Self::new(BigInt::from(num), BigInt::from(den))
    }

    pub fn from_integer(n: i64) -> Rational {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Rational {
        Rational(BigRational::zero())
    }

    pub fn one() -> Rational {
        Rational(BigRational::one())
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn recip(&self) -> Option<Rational> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    /// Exact comparison against an integer count.
    pub fn cmp_u64(&self, n: u64) -> Ordering {
        self.0.cmp(&BigRational::from_integer(BigInt::from(n)))
    }

    /// ⌊self⌋ as u64; `None` when negative or out of range.
    pub fn floor_u64(&self) -> Option<u64> {
        self.0.floor().to_integer().to_u64()
    }

    /// Exact integer power (exponent may be large; the result can be a
    /// very long fraction — callers only compare against it).
    pub fn pow(&self, exp: u64) -> Rational {
        let mut acc = BigRational::one();
        let mut base = self.0.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc *= &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Rational(acc)
    }

    /// Decimal approximation to 6 places, display only.
    pub fn decimal6(&self) -> String {
        let scaled = &self.0 * BigRational::from_integer(BigInt::from(1_000_000));
        let rounded = scaled.round().to_integer();
        let neg = rounded.is_negative();
        let abs = rounded.abs();
        let int_part = &abs / BigInt::from(1_000_000);
        let frac_part = &abs % BigInt::from(1_000_000);
        format!(
            "{}{}.{:06}",
            if neg { "-" } else { "" },
            int_part,
            frac_part
        )
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for Rational {
    type Err = String;

    /// Parses "a/b" or a bare integer.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let num = BigInt::from_str(num).map_err(|e| e.to_string())?;
        let den = BigInt::from_str(den).map_err(|e| e.to_string())?;
        Rational::new(num, den).ok_or_else(|| "zero denominator".to_string())
    }
}

impl Add for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        Rational(&self.0 + &rhs.0)
    }
}

impl Sub for &Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        Rational(&self.0 - &rhs.0)
    }
}

impl Mul for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        Rational(&self.0 * &rhs.0)
    }
}

impl Div for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        Rational(&self.0 / &rhs.0)
    }
}

// Serialized as exact numerator/denominator strings plus a display-only
// decimal; deserialization reads the exact fields and ignores the decimal.
impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Rational", 3)?;
        st.serialize_field("num", &self.numerator().to_string())?;
        st.serialize_field("den", &self.denominator().to_string())?;
        st.serialize_field("approx", &self.decimal6())?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            num: String,
            den: String,
        }
        let r = Repr::deserialize(deserializer)?;
        let num = BigInt::from_str(&r.num).map_err(serde::de::Error::custom)?;
        let den = BigInt::from_str(&r.den).map_err(serde::de::Error::custom)?;
        Rational::new(num, den).ok_or_else(|| serde::de::Error::custom("zero denominator"))
    }
}
