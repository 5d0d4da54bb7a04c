use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Environment variable overriding how many factorials are tabulated on
/// first use.
pub const FACTORIAL_CACHE_ENV: &str = "WIGNER_SUMRULES_FACTORIAL_CACHE";

const DEFAULT_FACTORIAL_CACHE: usize = 512;

fn factorial_table() -> &'static [BigInt] {
    static TABLE: OnceLock<Vec<BigInt>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let bound = std::env::var(FACTORIAL_CACHE_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .unwrap_or(DEFAULT_FACTORIAL_CACHE);
        let mut table = Vec::with_capacity(bound + 1);
        let mut acc = BigInt::one();
        table.push(acc.clone());
        for i in 1..=bound {
            acc *= i;
            table.push(acc.clone());
        }
        table
    })
}

/// `n!` for a nonnegative `n`.
pub fn factorial_u(n: u64) -> BigInt {
    let table = factorial_table();
    match table.get(n as usize) {
        Some(f) => f.clone(),
        None => {
            let start = table.len() as u64 - 1;
            (start + 1..=n).fold(table[start as usize].clone(), |acc, i| acc * i)
        }
    }
}

/// `n!`; negative `n` is a domain error.
pub fn factorial(n: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::Domain(format!("factorial of negative integer {n}")));
    }
    Ok(factorial_u(n as u64))
}

/// Ordinary binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Binomial coefficient continued to negative upper argument:
///
/// * `g >= p >= 0`: `g! / ((g-p)! p!)`
/// * `g < 0 <= p`: `(-1)^p (p-g-1)! / (p! (-g-1)!)`
/// * `p < 0`: 0
///
/// The remaining case `0 <= g < p` is taken to be 0.
pub fn extended_binomial(g: i64, p: i64) -> BigInt {
    if p < 0 {
        return BigInt::zero();
    }
    if g >= 0 {
        return binomial(g, p);
    }
    // (p-g-1)! / (p! (-g-1)!) = C(p-g-1, p)
    let magnitude = binomial(p - g - 1, p);
    if p % 2 == 0 {
        magnitude
    } else {
        -magnitude
    }
}

/// Rising factorial `(y)_p = y (y+1) ... (y+p-1)`, with `(y)_0 = 1`.
pub fn pochhammer(y: &Rational, p: u32) -> Rational {
    let mut acc = Rational::one();
    let mut factor = y.clone();
    for _ in 0..p {
        acc *= &factor;
        factor += Rational::one();
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::RationalExt;

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0).unwrap(), BigInt::from(1));
        assert_eq!(factorial(5).unwrap(), BigInt::from(120));
        let twenty: BigInt = (1..=20u64).fold(BigInt::one(), |a, i| a * i);
        assert_eq!(factorial(20).unwrap(), twenty);
        assert_eq!(twenty, "2432902008176640000".parse::<BigInt>().unwrap());
        assert!(matches!(factorial(-1), Err(Error::Domain(_))));
    }

    #[test]
    fn factorial_beyond_table() {
        let n = DEFAULT_FACTORIAL_CACHE as u64 + 3;
        let direct: BigInt = (1..=n).fold(BigInt::one(), |a, i| a * i);
        assert_eq!(factorial_u(n), direct);
    }

    #[test]
    fn extended_binomial_cases() {
        assert_eq!(extended_binomial(5, 2), BigInt::from(10));
        // (-1)^3 4!/(3! 1!)
        assert_eq!(extended_binomial(-2, 3), BigInt::from(-4));
        assert_eq!(extended_binomial(7, -1), BigInt::zero());
        assert_eq!(extended_binomial(2, 5), BigInt::zero());
        assert_eq!(extended_binomial(-1, 0), BigInt::one());
        assert_eq!(extended_binomial(-1, 4), BigInt::one());
        assert_eq!(extended_binomial(-1, 3), BigInt::from(-1));
    }

    #[test]
    fn extended_binomial_matches_generalized_definition() {
        // g (g-1) ... (g-p+1) / p! for any integer g.
        for g in -8i64..8 {
            for p in 0i64..8 {
                if (0..p).contains(&g) {
                    continue;
                }
                let falling = (0..p).fold(Rational::one(), |a, i| a * Rational::int(g - i));
                let expect = falling / Rational::from_integer(factorial_u(p as u64));
                assert_eq!(Rational::from_integer(extended_binomial(g, p)), expect, "g={g} p={p}");
            }
        }
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(&Rational::int(3), 0), Rational::int(1));
        assert_eq!(pochhammer(&Rational::int(2), 3), Rational::int(24));
        assert_eq!(pochhammer(&Rational::frac(-1, 2), 2), Rational::frac(-1, 4));
        assert_eq!(pochhammer(&Rational::int(-2), 3), Rational::int(0));
    }
}
