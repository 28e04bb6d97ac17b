//! Exact rationals, their text form, and exponents of `q` modulo `ℓ`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Exact rational number used throughout the crate.
///
/// Entries stay small at the scales this library targets; the workspace
/// enables overflow checks in release builds so an overflow aborts instead
/// of producing a wrong verdict.
pub type Rational = Ratio<i128>;

pub fn int(n: i128) -> Rational {
    Rational::from_integer(n)
}

pub fn frac(p: i128, q: i128) -> Rational {
    Rational::new(p, q)
}

/// Parses `"n"`, `"-n"`, or `"p/q"`.
pub fn parse_rational(text: &str) -> Result<Rational, Error> {
    let s = text.trim();
    let bad = || Error::Parse(format!("not a rational: {text:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i128 = p.trim().parse().map_err(|_| bad())?;
            let q: i128 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(Error::Parse(format!("zero denominator in {text:?}")));
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(int(s.parse().map_err(|_| bad())?)),
    }
}

/// Reduced text form: `"n"` for integers, `"p/q"` otherwise.
pub fn format_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// True iff `x / step` is an integer. `step` must be non-zero.
pub fn is_multiple_of(x: &Rational, step: &Rational) -> bool {
    debug_assert!(!step.is_zero());
    (x / step).is_integer()
}

/// Representative of `x` in `[0, modulus)`.
pub fn reduce_mod(x: &Rational, modulus: &Rational) -> Rational {
    let m = modulus.abs();
    let q = (x / m).floor();
    x - q * m
}

pub fn lcm_of_denominators<'a, I: IntoIterator<Item = &'a Rational>>(items: I) -> i128 {
    items
        .into_iter()
        .fold(1i128, |acc, x| acc.lcm(x.denom()))
}

/// Serde adapter writing a rational as its `"p/q"` string.
pub mod serde_rational {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for `Vec<Vec<Rational>>` matrices.
pub mod serde_rational_matrix {
    use super::*;

    pub fn serialize<S: Serializer>(m: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = m
            .iter()
            .map(|row| row.iter().map(format_rational).collect())
            .collect();
        rows.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Rational>>, D::Error> {
        let rows: Vec<Vec<String>> = Vec::deserialize(d)?;
        rows.iter()
            .map(|row| {
                row.iter()
                    .map(|t| parse_rational(t).map_err(serde::de::Error::custom))
                    .collect()
            })
            .collect()
    }
}

/// The scalar `q^value` for `q = e^{2πi/ℓ}`, stored as its exponent.
///
/// Exponents are rational, so `q^{ℓ/2} = -1` for every `ℓ`. Equality is
/// congruence modulo `ℓ`; the stored value is always reduced into `[0, ℓ)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentModL {
    value: Rational,
    modulus: i64,
}

impl ExponentModL {
    pub fn new(value: Rational, modulus: i64) -> Self {
        assert!(modulus > 0, "modulus must be positive");
        let value = reduce_mod(&value, &int(modulus as i128));
        Self { value, modulus }
    }

    pub fn zero(modulus: i64) -> Self {
        Self::new(Rational::zero(), modulus)
    }

    /// The exponent of `-1`, namely `ℓ/2`.
    pub fn minus_one(modulus: i64) -> Self {
        Self::new(frac(modulus as i128, 2), modulus)
    }

    pub fn value(&self) -> &Rational {
        &self.value
    }

    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// `q^{p/q}` rendering of the scalar.
    pub fn scalar(&self) -> String {
        if self.value.is_zero() {
            "1".to_string()
        } else if self.value.is_one() {
            "q".to_string()
        } else {
            format!("q^{{{}}}", format_rational(&self.value))
        }
    }

    fn check(&self, other: &Self) {
        assert_eq!(
            self.modulus, other.modulus,
            "exponents with different moduli combined"
        );
    }
}

impl Add for ExponentModL {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.check(&rhs);
        Self::new(self.value + rhs.value, self.modulus)
    }
}

impl<'a> Add<&'a ExponentModL> for &'a ExponentModL {
    type Output = ExponentModL;
    fn add(self, rhs: &ExponentModL) -> ExponentModL {
        self.check(rhs);
        ExponentModL::new(self.value + rhs.value, self.modulus)
    }
}

impl Sub for ExponentModL {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.check(&rhs);
        Self::new(self.value - rhs.value, self.modulus)
    }
}

impl<'a> Sub<&'a ExponentModL> for &'a ExponentModL {
    type Output = ExponentModL;
    fn sub(self, rhs: &ExponentModL) -> ExponentModL {
        self.check(rhs);
        ExponentModL::new(self.value - rhs.value, self.modulus)
    }
}

impl Neg for ExponentModL {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.value, self.modulus)
    }
}

impl fmt::Debug for ExponentModL {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", format_rational(&self.value), self.modulus)
    }
}

impl fmt::Display for ExponentModL {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(&self.value))
    }
}

impl Serialize for ExponentModL {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ExponentModL", 3)?;
        st.serialize_field("exponent", &format_rational(&self.value))?;
        st.serialize_field("modulus", &self.modulus)?;
        st.serialize_field("scalar", &self.scalar())?;
        st.end()
    }
}
