use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision integer.
pub type Integer = BigInt;

/// Canonical arbitrary-precision fraction. `num_rational` reduces after
/// every operation and keeps the denominator positive.
pub type Rational = BigRational;

/// Convenience constructors and queries used throughout the crate.
pub trait RationalExt: Sized {
    fn int(n: i64) -> Self;
    fn frac(num: i64, den: i64) -> Self;
    fn powi(&self, exp: i32) -> Self;
    fn to_f64_lossy(&self) -> f64;
}

impl RationalExt for Rational {
    fn int(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }

    fn frac(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational::new(BigInt::from(num), BigInt::from(den))
    }

    /// Integer power; negative exponents invert (panics on zero base).
    fn powi(&self, exp: i32) -> Self {
        num_traits::Pow::pow(self, exp)
    }

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or_else(|| {
            // Fall back on a scaled division when numerator or denominator overflow f64.
            let shift = self.numer().bits().max(self.denom().bits()) as i64 - 1000;
            if shift <= 0 {
                return f64::NAN;
            }
            let n = (self.numer() >> shift as usize).to_f64().unwrap_or(f64::NAN);
            let d = (self.denom() >> shift as usize).to_f64().unwrap_or(f64::NAN);
            n / d
        })
    }
}

/// Division that reports a zero divisor instead of panicking.
pub fn checked_div(a: &Rational, b: &Rational) -> Result<Rational> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(a / b)
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Parses `p` or `p/q` (optional leading sign, no whitespace inside).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.strip_prefix('+').unwrap_or(num).parse().map_err(|_| bad())?;
    if den.starts_with(['+', '-']) {
        return Err(bad());
    }
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}
