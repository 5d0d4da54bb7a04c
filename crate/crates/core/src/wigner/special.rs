//! Closed forms for `(a a i; x -x 0)` and `{a c l; c a i}` with small `i`.
//! They are independent of the Racah sums and serve as cross-checks.

use num_traits::{One, Signed, Zero};

use super::{fact, phase, require, triangle_ok, whole};
use crate::error::Result;
use crate::exact::{binomial, pochhammer, HalfInt, Rational, RationalExt, SqrtRational};

/// `sign * numerator / sqrt(denominator)` as a signed square root.
fn ratio(sign: i32, numerator: Rational, denominator: Rational) -> SqrtRational {
    let s = sign * if numerator.is_negative() { -1 } else { 1 };
    SqrtRational::with_sign(s, &numerator * &numerator / denominator)
}

fn check_diag_args(a: HalfInt, i: i64, x: HalfInt) -> Result<()> {
    a.check_projection(x)?;
    require(i >= 0 && i <= a.twice(), || format!("rank {i} outside 0..=2a for a = {a}"))
}

/// `(a a i; x -x 0)` for `i` in {1, 2, 3} from its polynomial closed form.
pub fn threej_diag_special(a: HalfInt, i: i64, x: HalfInt) -> Result<SqrtRational> {
    require((1..=3).contains(&i), || format!("closed form only for i in 1..=3, got {i}"))?;
    check_diag_args(a, i, x)?;
    let aa = a.casimir();
    let ar = a.to_rational();
    let xr = x.to_rational();
    let two_a = Rational::int(a.twice());
    let one = Rational::one();
    let base = phase(whole((a - x).twice()));
    let value = match i {
        1 => ratio(base, xr, &aa * (&two_a + &one)),
        2 => ratio(
            -base,
            &aa - Rational::int(3) * &xr * &xr,
            &aa * (&two_a - &one) * (&two_a + &one) * (&two_a + Rational::int(3)),
        ),
        _ => ratio(
            -base,
            &xr * (Rational::int(3) * &aa - Rational::int(5) * &xr * &xr - &one),
            (&ar - &one)
                * &aa
                * (&ar + Rational::int(2))
                * (&two_a - &one)
                * (&two_a + &one)
                * (&two_a + Rational::int(3)),
        ),
    };
    Ok(value)
}

/// `(a a i; x -x 0)` for any rank `0 <= i <= 2a`:
///
/// `(-1)^(a-x) sqrt((2a-i)!/(2a+i+1)!) sum_n (-1)^(i-n) C(i,n)^2 (x-a)_n (-a-x)_(i-n)`
pub fn threej_diag_general(a: HalfInt, i: i64, x: HalfInt) -> Result<SqrtRational> {
    check_diag_args(a, i, x)?;
    let lower = -a.to_rational() + x.to_rational();
    let upper = -a.to_rational() - x.to_rational();
    let mut sum = Rational::zero();
    for n in 0..=i {
        let c = binomial(i, n);
        let term = Rational::from_integer(&c * &c)
            * pochhammer(&lower, n as u32)
            * pochhammer(&upper, (i - n) as u32);
        if (i - n) % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let prefactor = Rational::new(fact(a.twice() - i), fact(a.twice() + i + 1));
    let sign = phase(whole((a - x).twice())) * if sum.is_negative() { -1 } else { 1 };
    Ok(SqrtRational::with_sign(sign, &sum * &sum * prefactor))
}

/// `{a c l; c a i}` for `i` in {1, 2, 3} from its polynomial closed form in
/// `X = a(a+1) + c(c+1) - l(l+1)`.
pub fn sixj_unit_special(a: HalfInt, c: HalfInt, l: HalfInt, i: i64) -> Result<SqrtRational> {
    require((1..=3).contains(&i), || format!("closed form only for i in 1..=3, got {i}"))?;
    a.check_momentum()?;
    c.check_momentum()?;
    l.check_momentum()?;
    require(a.twice() >= i && c.twice() >= i, || {
        format!("closed form for i = {i} needs a, c >= {i}/2 (a = {a}, c = {c})")
    })?;
    require(triangle_ok(a, c, l), || format!("({a}, {c}, {l}) violates the triangle rule"))?;

    let aa = a.casimir();
    let cc = c.casimir();
    let xx = &aa + &cc - l.casimir();
    let base = phase(whole((a + c + l).twice()));
    let two_a = a.twice();
    let two_c = c.twice();
    let value = match i {
        1 => {
            let den = Rational::int(4)
                * &aa
                * Rational::int(two_a + 1)
                * &cc
                * Rational::int(two_c + 1);
            ratio(base, -xx, den)
        }
        2 => {
            let j = Rational::int(3) * &xx * (&xx - Rational::one()) - Rational::int(4) * &aa * &cc;
            let radicand = Rational::new(
                fact(two_a - 2) * fact(two_c - 2),
                fact(two_a + 3) * fact(two_c + 3),
            );
            let num = Rational::int(2) * j;
            ratio(base, num, Rational::one() / radicand)
        }
        _ => {
            let x2 = &xx * &xx;
            let poly = Rational::int(5) * &x2 * &xx - Rational::int(20) * &x2
                - Rational::int(4) * &xx * (Rational::int(3) * &aa * &cc - &aa - &cc - Rational::int(3))
                + Rational::int(20) * &aa * &cc;
            let radicand = Rational::new(
                fact(two_a - 3) * fact(two_c - 3),
                fact(two_a + 4) * fact(two_c + 4),
            );
            ratio(-base, Rational::int(4) * poly, Rational::one() / radicand)
        }
    };
    Ok(value)
}
