use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;

use super::Rational;
use crate::error::{Error, Result};

/// An exact half-integer, stored as twice its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };

    /// The half-integer `twice / 2`.
    pub const fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub const fn int(n: i64) -> Self {
        HalfInt { twice: 2 * n }
    }

    pub const fn twice(self) -> i64 {
        self.twice
    }

    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    /// The value as an integer, when it is one.
    pub fn to_integer(self) -> Option<i64> {
        self.is_integer().then_some(self.twice / 2)
    }

    pub fn abs(self) -> Self {
        HalfInt { twice: self.twice.abs() }
    }

    pub fn to_rational(self) -> Rational {
        Rational::new(BigInt::from(self.twice), BigInt::from(2))
    }

    /// `j(j+1)` as an exact rational.
    pub fn casimir(self) -> Rational {
        Rational::new(BigInt::from(self.twice * (self.twice + 2)), BigInt::from(4))
    }

    pub fn to_f64(self) -> f64 {
        self.twice as f64 / 2.0
    }

    /// Checks that `self` can be an angular momentum (nonnegative).
    pub fn check_momentum(self) -> Result<()> {
        if self.twice < 0 {
            return Err(Error::Domain(format!("angular momentum {self} is negative")));
        }
        Ok(())
    }

    /// Checks that `m` is a projection of the momentum `self`:
    /// `|m| <= j` and `j - m` integral.
    pub fn check_projection(self, m: HalfInt) -> Result<()> {
        self.check_momentum()?;
        if m.twice.abs() > self.twice {
            return Err(Error::Domain(format!("projection {m} exceeds momentum {self}")));
        }
        if (self.twice - m.twice) % 2 != 0 {
            return Err(Error::Domain(format!("{self} - {m} is not an integer")));
        }
        Ok(())
    }

    /// Projections `-j, -j+1, ..., j` of the momentum `self`.
    pub fn projections(self) -> impl Iterator<Item = HalfInt> {
        let j = self.twice;
        (-j..=j).step_by(2).map(HalfInt::from_twice)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt { twice: self.twice + rhs.twice }
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt { twice: self.twice - rhs.twice }
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt { twice: -self.twice }
    }
}

impl From<i64> for HalfInt {
    fn from(n: i64) -> Self {
        HalfInt::int(n)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

/// Accepts `k` or `k/2` with an optional sign; nothing else.
impl FromStr for HalfInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected an integer or k/2, got {s:?}"));
        let digits_ok = |t: &str| {
            let t = t.strip_prefix(['-', '+']).unwrap_or(t);
            !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit())
        };
        match s.split_once('/') {
            None if digits_ok(s) => {
                let n: i64 = s.parse().map_err(|_| bad())?;
                n.checked_mul(2).map(HalfInt::from_twice).ok_or_else(bad)
            }
            Some((num, "2")) if digits_ok(num) => num.parse().map(HalfInt::from_twice).map_err(|_| bad()),
            _ => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        assert_eq!("3".parse::<HalfInt>().unwrap(), HalfInt::int(3));
        assert_eq!("-1/2".parse::<HalfInt>().unwrap(), HalfInt::from_twice(-1));
        assert_eq!("4/2".parse::<HalfInt>().unwrap(), HalfInt::int(2));
        assert_eq!(HalfInt::from_twice(4).to_string(), "2");
        assert_eq!(HalfInt::from_twice(-3).to_string(), "-3/2");
        for bad in ["", "1/3", "0.5", "a", "1/", "/2", "1/2/2", "--1"] {
            assert!(bad.parse::<HalfInt>().is_err(), "{bad}");
        }
    }

    #[test]
    fn projection_checks() {
        let j = HalfInt::from_twice(3);
        assert!(j.check_projection(HalfInt::from_twice(-3)).is_ok());
        assert!(j.check_projection(HalfInt::int(1)).is_err());
        assert!(j.check_projection(HalfInt::from_twice(5)).is_err());
        assert!(HalfInt::int(-1).check_momentum().is_err());
        assert_eq!(j.projections().count(), 4);
    }

    #[test]
    fn casimir_values() {
        assert_eq!(HalfInt::from_twice(1).casimir(), Rational::new(3.into(), 4.into()));
        assert_eq!(HalfInt::int(2).casimir(), Rational::from_integer(6.into()));
    }
}
