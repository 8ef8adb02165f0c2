//! Exact rational arithmetic.
//!
//! Toughness-type invariants are ratios of vertex counts, so numerators and denominators
//! fit comfortably in i64 and every comparison is decided exactly by cross-multiplying in
//! i128. No floats take part in any invariant comparison. A +infinity sentinel covers the
//! toughness of complete graphs, ordered above every finite value (compare
//! `Distance::Inf`-style encodings in graph libraries).

use crate::error::{Error, Result};
use crate::scalar::Real;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Sub};
use std::str::FromStr;

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn reduce128(num: i128, den: i128) -> (i64, i64) {
    debug_assert!(den != 0);
    let sign = if den < 0 { -1 } else { 1 };
    let (mut num, mut den) = (num * sign as i128, den * sign as i128);
    let g = {
        let (mut a, mut b) = (num.abs(), den);
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a.max(1)
    };
    num /= g;
    den /= g;
    (
        i64::try_from(num).expect("rational numerator overflow"),
        i64::try_from(den).expect("rational denominator overflow"),
    )
}

/// A rational number with a +infinity sentinel.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rational {
    /// Reduced fraction with positive denominator.
    Finite(i64, i64),
    /// Larger than every finite value.
    Infinity,
}

impl Rational {
    pub const ZERO: Rational = Rational::Finite(0, 1);
    pub const ONE: Rational = Rational::Finite(1, 1);

    /// Reduced fraction. Panics on a zero denominator.
    pub fn new(num: i64, den: i64) -> Rational {
        assert!(den != 0, "zero denominator");
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den).max(1);
        Rational::Finite(sign * num / g, sign * den / g)
    }

    pub fn from_int(k: i64) -> Rational {
        Rational::Finite(k, 1)
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Rational::Finite(_, _))
    }

    /// Numerator and denominator of a finite value.
    pub fn parts(self) -> Option<(i64, i64)> {
        match self {
            Rational::Finite(p, q) => Some((p, q)),
            Rational::Infinity => None,
        }
    }

    pub fn as_f64(self) -> f64 {
        match self {
            Rational::Finite(p, q) => p as f64 / q as f64,
            Rational::Infinity => f64::INFINITY,
        }
    }

    fn map2(self, rhs: Rational, f: impl Fn(i128, i128, i128, i128) -> (i128, i128)) -> Rational {
        match (self, rhs) {
            (Rational::Finite(a, b), Rational::Finite(c, d)) => {
                let (num, den) = f(a as i128, b as i128, c as i128, d as i128);
                let (num, den) = reduce128(num, den);
                Rational::Finite(num, den)
            }
            _ => panic!("arithmetic on infinite rational"),
        }
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        self.map2(rhs, |a, b, c, d| (a * d + c * b, b * d))
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        self.map2(rhs, |a, b, c, d| (a * d - c * b, b * d))
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        self.map2(rhs, |a, b, c, d| (a * c, b * d))
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        self.map2(rhs, |a, b, c, d| {
            assert!(c != 0, "division by zero rational");
            (a * d, b * c)
        })
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Rational::Infinity, Rational::Infinity) => Ordering::Equal,
            (Rational::Infinity, _) => Ordering::Greater,
            (_, Rational::Infinity) => Ordering::Less,
            (Rational::Finite(a, b), Rational::Finite(c, d)) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Finite(p, 1) => write!(f, "{p}"),
            Rational::Finite(p, q) => write!(f, "{p}/{q}"),
            Rational::Infinity => write!(f, "inf"),
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Rational> {
        let s = s.trim();
        if s == "inf" {
            return Ok(Rational::Infinity);
        }
        if let Some((p, q)) = s.split_once('/') {
            let p: i64 = p
                .trim()
                .parse()
                .map_err(|_| Error::Malformed(format!("bad rational {s:?}")))?;
            let q: i64 = q
                .trim()
                .parse()
                .map_err(|_| Error::Malformed(format!("bad rational {s:?}")))?;
            if q == 0 {
                return Err(Error::Malformed(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(p, q))
        } else {
            let p: i64 = s
                .parse()
                .map_err(|_| Error::Malformed(format!("bad rational {s:?}")))?;
            Ok(Rational::from_int(p))
        }
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
        s.parse().map_err(de::Error::custom)
    }
}

/// The alpha parameter of an A_alpha matrix, kept as an exact reduced fraction in [0, 1].
///
/// Closed-form matrix entries are affine in alpha with integer coefficients, so holding
/// alpha exactly lets every entry be assembled in integer arithmetic with a single float
/// rounding at the end ([`Alpha::affine`]).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Alpha {
    num: i64,
    den: i64,
}

impl Alpha {
    pub const ZERO: Alpha = Alpha { num: 0, den: 1 };
    pub const HALF: Alpha = Alpha { num: 1, den: 2 };
    pub const ONE: Alpha = Alpha { num: 1, den: 1 };

    pub fn new(num: i64, den: i64) -> Result<Alpha> {
        if den == 0 {
            return Err(Error::Malformed("zero denominator in alpha".into()));
        }
        let sign = if den < 0 { -1 } else { 1 };
        let (num, den) = (sign * num, sign * den);
        if num < 0 || num > den {
            return Err(Error::AlphaRange(format!("{num}/{den}"), "[0, 1]"));
        }
        let g = gcd(num, den).max(1);
        Ok(Alpha {
            num: num / g,
            den: den / g,
        })
    }

    pub fn rational(self) -> Rational {
        Rational::Finite(self.num, self.den)
    }

    /// 1 - alpha, exact.
    pub fn one_minus(self) -> Alpha {
        Alpha {
            num: self.den - self.num,
            den: self.den,
        }
    }

    /// k*alpha + c assembled exactly in integers, then converted with one rounding.
    pub fn affine<T: Real>(self, k: i64, c: i64) -> T {
        let num = k as i128 * self.num as i128 + c as i128 * self.den as i128;
        T::from_i128(num).expect("affine numerator in range") / T::from_int(self.den)
    }

    pub fn to_real<T: Real>(self) -> T {
        self.affine(1, 0)
    }

    pub fn as_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl PartialOrd for Alpha {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Alpha {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rational().cmp(&other.rational())
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Alpha {
    type Err = Error;

    /// Accepts "p/q", plain integers, and decimal literals; "1/2" parses exactly.
    fn from_str(s: &str) -> Result<Alpha> {
        let s = s.trim();
        if let Some((p, q)) = s.split_once('/') {
            let p: i64 = p
                .trim()
                .parse()
                .map_err(|_| Error::Malformed(format!("bad alpha {s:?}")))?;
            let q: i64 = q
                .trim()
                .parse()
                .map_err(|_| Error::Malformed(format!("bad alpha {s:?}")))?;
            if q == 0 {
                return Err(Error::Malformed(format!("zero denominator in {s:?}")));
            }
            return Alpha::new(p, q);
        }
        if let Some((int, frac)) = s.split_once('.') {
            if frac.len() > 18 || frac.chars().any(|c| !c.is_ascii_digit()) {
                return Err(Error::Malformed(format!("bad alpha {s:?}")));
            }
            let int: i64 = if int.is_empty() {
                0
            } else {
                int.parse()
                    .map_err(|_| Error::Malformed(format!("bad alpha {s:?}")))?
            };
            let den = 10i64.pow(frac.len() as u32);
            let mut frac: i64 = if frac.is_empty() {
                0
            } else {
                frac.parse()
                    .map_err(|_| Error::Malformed(format!("bad alpha {s:?}")))?
            };
            // "-0.1" parses its integer part as 0; keep the sign on the fraction too.
            if s.starts_with('-') {
                frac = -frac;
            }
            return Alpha::new(int * den + frac, den);
        }
        let p: i64 = s
            .parse()
            .map_err(|_| Error::Malformed(format!("bad alpha {s:?}")))?;
        Alpha::new(p, 1)
    }
}

impl Serialize for Alpha {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Alpha {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}
