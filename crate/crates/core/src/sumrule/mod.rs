//! Weighted 3jm sums
//!
//! `S_k(j1, m1, j2, m2) = sum_{j,m} (2j+1) [j(j+1)]^k (j1 j2 j; m1 m2 -m)^2`
//!
//! evaluated four ways: the diagonal element of `(J^2)^k` on a tridiagonal
//! ladder block ([`sumrule_operator`]), direct summation over `j`
//! ([`sumrule_bruteforce`]), enumeration of operator words
//! ([`sumrule_permutation`]), and the explicit polynomials for `k <= 3`
//! ([`sumrule_closed`], [`sumrule_zero_projection`]).

mod permutation;
mod tridiagonal;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{HalfInt, Rational, RationalExt};
use crate::wigner::{wigner_3jm, ThreeJArgs};

pub use permutation::{
    diagonal_words, sumrule_permutation, sumrule_permutation_bounded, Ladder, OperatorWord,
    DEFAULT_PERMUTATION_BOUND,
};
pub use tridiagonal::{build_tridiagonal, sumrule_operator, TridiagonalBlock};

/// A request for `S_k(j1, m1, j2, m2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SumRuleQuery {
    pub k: u32,
    pub j1: HalfInt,
    pub m1: HalfInt,
    pub j2: HalfInt,
    pub m2: HalfInt,
}

impl SumRuleQuery {
    pub fn new(k: u32, j1: HalfInt, m1: HalfInt, j2: HalfInt, m2: HalfInt) -> Result<Self> {
        j1.check_projection(m1)?;
        j2.check_projection(m2)?;
        Ok(SumRuleQuery { k, j1, m1, j2, m2 })
    }

    /// Same query with the power replaced.
    pub fn with_k(self, k: u32) -> Self {
        SumRuleQuery { k, ..self }
    }
}

/// Direct summation over `|j1-j2| <= j <= j1+j2`; only `m = m1 + m2`
/// survives the projection selection rule.
pub fn sumrule_bruteforce(q: &SumRuleQuery) -> Rational {
    let m = q.m1 + q.m2;
    let j_min = (q.j1 - q.j2).abs().max(m.abs());
    let mut total = Rational::zero();
    let mut j = j_min;
    while j <= q.j1 + q.j2 {
        let args = ThreeJArgs::new(q.j1, q.j2, j, q.m1, q.m2, -m).expect("projections checked");
        let weight = Rational::int(j.twice() + 1) * j.casimir().powi(q.k as i32);
        total += weight * wigner_3jm(&args).square();
        j = j + HalfInt::int(1);
    }
    total
}

/// Diagonal eigenvalue of `J1^2 + J2^2 + 2 J1z J2z`.
fn diagonal_weight(jj1: &Rational, jj2: &Rational, m1: &Rational, m2: &Rational) -> Rational {
    jj1 + jj2 + Rational::int(2) * m1 * m2
}

/// `j(j+1) - m(m+s)` for `s = +1` (raising) or `s = -1` (lowering).
fn ladder_weight(jj: &Rational, m: &Rational, s: i64) -> Rational {
    jj - m * (m + Rational::int(s))
}

/// Explicit polynomial sum rule for `k` in {1, 2, 3}.
pub fn sumrule_closed(k: u32, j1: HalfInt, m1: HalfInt, j2: HalfInt, m2: HalfInt) -> Result<Rational> {
    if !(1..=3).contains(&k) {
        return Err(Error::Domain(format!("closed-form sum rule exists only for k in 1..=3, got {k}")));
    }
    j1.check_projection(m1)?;
    j2.check_projection(m2)?;
    let (jj1, jj2) = (j1.casimir(), j2.casimir());
    let (m1, m2) = (m1.to_rational(), m2.to_rational());
    let one = Rational::one();

    let a = diagonal_weight(&jj1, &jj2, &m1, &m2);
    // B1 B2: lower m1 and raise m2 first, then undo.
    let down_up = ladder_weight(&jj1, &m1, -1) * ladder_weight(&jj2, &m2, 1);
    // B2 B1: raise m1 and lower m2 first.
    let up_down = ladder_weight(&jj1, &m1, 1) * ladder_weight(&jj2, &m2, -1);

    let value = match k {
        1 => a,
        2 => &a * &a + &down_up + &up_down,
        _ => {
            let a_after_down_up = diagonal_weight(&jj1, &jj2, &(&m1 - &one), &(&m2 + &one));
            let a_after_up_down = diagonal_weight(&jj1, &jj2, &(&m1 + &one), &(&m2 - &one));
            &a * &a * &a
                + &up_down * a_after_up_down
                + Rational::int(2) * &up_down * &a
                + Rational::int(2) * &down_up * &a
                + &down_up * a_after_down_up
        }
    };
    Ok(value)
}

/// `sum_l (2l+1) [l(l+1)]^k (a c l; -x x 0)^2` for `k` in {1, 2, 3}.
pub fn sumrule_zero_projection(k: u32, a: HalfInt, c: HalfInt, x: HalfInt) -> Result<Rational> {
    if !(1..=3).contains(&k) {
        return Err(Error::Domain(format!("closed-form sum rule exists only for k in 1..=3, got {k}")));
    }
    a.check_projection(-x)?;
    c.check_projection(x)?;
    let (aa, cc) = (a.casimir(), c.casimir());
    let x = x.to_rational();
    let one = Rational::one();
    let two = Rational::int(2);

    let diag = |shift: &Rational| {
        let y = &x + shift;
        &aa + &cc - &two * &y * &y
    };
    let x_plus = &x * (&x + &one);
    let x_minus = &x * (&x - &one);
    let plus = (&aa - &x_plus) * (&cc - &x_plus);
    let minus = (&aa - &x_minus) * (&cc - &x_minus);
    let center = diag(&Rational::zero());

    let value = match k {
        1 => center,
        2 => &center * &center + &minus + &plus,
        _ => {
            &center * &center * &center
                + &plus * diag(&one)
                + &two * &plus * &center
                + &two * &minus * &center
                + &minus * diag(&-one.clone())
        }
    };
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(t: i64) -> HalfInt {
        HalfInt::from_twice(t)
    }

    fn q(k: u32, t: [i64; 4]) -> SumRuleQuery {
        SumRuleQuery::new(k, h(t[0]), h(t[1]), h(t[2]), h(t[3])).unwrap()
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(sumrule_bruteforce(&q(1, [2, 0, 2, 0])), Rational::int(4));
        assert_eq!(sumrule_bruteforce(&q(2, [1, 1, 1, -1])), Rational::int(2));
        assert_eq!(sumrule_bruteforce(&q(1, [1, 1, 1, 1])), Rational::int(2));
        assert_eq!(sumrule_bruteforce(&q(0, [3, -1, 4, 2])), Rational::int(1));
    }

    #[test]
    fn closed_examples() {
        let half = h(1);
        assert_eq!(sumrule_closed(1, half, half, half, half).unwrap(), Rational::int(2));
        let one = HalfInt::int(1);
        let z = HalfInt::ZERO;
        assert_eq!(sumrule_closed(2, one, z, one, z).unwrap(), Rational::int(24));
        assert_eq!(sumrule_closed(3, half, half, half, half).unwrap(), Rational::int(8));
        assert!(sumrule_closed(4, one, z, one, z).is_err());
        assert!(sumrule_closed(0, one, z, one, z).is_err());
        assert!(sumrule_closed(1, one, h(1), one, z).is_err());
    }

    #[test]
    fn zero_projection_examples() {
        let one = HalfInt::int(1);
        assert_eq!(sumrule_zero_projection(1, one, one, HalfInt::ZERO).unwrap(), Rational::int(4));
        assert_eq!(sumrule_zero_projection(1, one, one, one).unwrap(), Rational::int(2));
        assert_eq!(sumrule_zero_projection(2, h(1), h(1), h(-1)).unwrap(), Rational::int(2));
        assert!(sumrule_zero_projection(2, one, one, HalfInt::int(2)).is_err());
        assert!(sumrule_zero_projection(5, one, one, one).is_err());
    }

    #[test]
    fn query_validation() {
        assert!(SumRuleQuery::new(1, h(1), h(3), h(1), h(1)).is_err());
        assert!(SumRuleQuery::new(1, h(2), h(1), h(1), h(1)).is_err());
    }
}
