use std::cmp::Ordering;
use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use super::{parse_rational, rational_sqrt, Rational, RationalExt};
use crate::error::{Error, Result};

/// A real number of the form `sign * sqrt(radicand)` with a nonnegative
/// rational radicand. Every 3jm, 6j and Clebsch-Gordan value is of this form.
///
/// The representation is canonical (`sign == 0` iff `radicand == 0`), so
/// derived equality is value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SqrtRational {
    sign: i8,
    radicand: Rational,
}

impl SqrtRational {
    pub fn zero() -> Self {
        SqrtRational { sign: 0, radicand: Rational::zero() }
    }

    pub fn one() -> Self {
        SqrtRational { sign: 1, radicand: Rational::one() }
    }

    /// `+sqrt(r)`; a negative `r` is a domain error.
    pub fn sqrt_of(r: Rational) -> Result<Self> {
        if r.is_negative() {
            return Err(Error::Domain(format!("square root of negative rational {r}")));
        }
        Ok(Self::with_sign(1, r))
    }

    /// `sign * sqrt(radicand)`; only the sign of `sign` matters.
    pub fn with_sign(sign: i32, radicand: Rational) -> Self {
        assert!(!radicand.is_negative(), "negative radicand");
        if sign == 0 || radicand.is_zero() {
            return Self::zero();
        }
        SqrtRational { sign: sign.signum() as i8, radicand }
    }

    /// The number whose signed square `x * |x|` is `s`.
    pub fn from_signed_square(s: Rational) -> Self {
        let sign = if s.is_positive() { 1 } else if s.is_negative() { -1 } else { 0 };
        Self::with_sign(sign, s.abs())
    }

    /// Embeds a rational value exactly.
    pub fn from_rational(r: &Rational) -> Self {
        let sign = if r.is_positive() { 1 } else if r.is_negative() { -1 } else { 0 };
        Self::with_sign(sign, r * r)
    }

    pub fn sign(&self) -> i32 {
        self.sign as i32
    }

    pub fn radicand(&self) -> &Rational {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    /// The exact square, always a nonnegative rational.
    pub fn square(&self) -> Rational {
        self.radicand.clone()
    }

    /// `sign * radicand`, which orders the same way as the value.
    pub fn signed_square(&self) -> Rational {
        match self.sign {
            0 => Rational::zero(),
            1 => self.radicand.clone(),
            _ => -self.radicand.clone(),
        }
    }

    /// The value as a rational, when the radicand is a perfect square.
    pub fn to_rational(&self) -> Option<Rational> {
        rational_sqrt(&self.radicand).map(|r| if self.sign < 0 { -r } else { r })
    }

    pub fn to_f64(&self) -> f64 {
        self.sign as f64 * self.radicand.to_f64_lossy().sqrt()
    }

    /// Multiplies by an exact rational factor.
    pub fn scale(&self, factor: &Rational) -> Self {
        self.clone() * SqrtRational::from_rational(factor)
    }
}

impl Default for SqrtRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl Mul for SqrtRational {
    type Output = SqrtRational;
    fn mul(self, rhs: SqrtRational) -> SqrtRational {
        &self * &rhs
    }
}

impl Mul for &SqrtRational {
    type Output = SqrtRational;
    fn mul(self, rhs: &SqrtRational) -> SqrtRational {
        SqrtRational::with_sign((self.sign * rhs.sign) as i32, &self.radicand * &rhs.radicand)
    }
}

impl Neg for SqrtRational {
    type Output = SqrtRational;
    fn neg(self) -> SqrtRational {
        SqrtRational { sign: -self.sign, radicand: self.radicand }
    }
}

impl PartialOrd for SqrtRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SqrtRational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.signed_square().cmp(&other.signed_square())
    }
}

/// Perfect squares render as plain rationals (`1/6`, `-1`); everything else
/// as `+sqrt(p/q)` or `-sqrt(p/q)`.
impl fmt::Display for SqrtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rational() {
            return write!(f, "{r}");
        }
        let s = if self.sign < 0 { '-' } else { '+' };
        write!(f, "{s}sqrt({})", self.radicand)
    }
}

/// Inverse of `Display`; also accepts `s*sqrt(p/q)` with `s` in {+1, -1, 1, -1}.
impl FromStr for SqrtRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::Parse(format!("invalid signed square root {s:?}"));
        let (sign, rest) = if let Some(r) = t.strip_prefix('-') {
            (-1, r)
        } else {
            (1, t.strip_prefix('+').unwrap_or(t))
        };
        let rest = rest.strip_prefix("1*").unwrap_or(rest);
        if let Some(inner) = rest.strip_prefix("sqrt(").and_then(|r| r.strip_suffix(')')) {
            let radicand = parse_rational(inner).map_err(|_| bad())?;
            if radicand.is_negative() {
                return Err(bad());
            }
            return Ok(SqrtRational::with_sign(sign, radicand));
        }
        if rest.starts_with(['+', '-']) {
            return Err(bad());
        }
        let value = parse_rational(rest).map_err(|_| bad())?;
        Ok(SqrtRational::from_rational(&if sign < 0 { -value } else { value }))
    }
}
