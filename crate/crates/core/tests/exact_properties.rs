use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use wigner_sumrules::exact::{
    binomial, checked_div, extended_binomial, factorial, factorial_u, parse_rational, pochhammer, rational_sqrt,
};
use wigner_sumrules::{Error, HalfInt, Rational, RationalExt, SqrtRational};

fn rational() -> impl Strategy<Value = Rational> {
    (-10_000i64..=10_000, 1i64..=500).prop_map(|(a, b)| Rational::frac(a, b))
}

fn nonneg() -> impl Strategy<Value = Rational> {
    (0i64..=2_000, 1i64..=300).prop_map(|(a, b)| Rational::frac(a, b))
}

fn sqrt_rational() -> impl Strategy<Value = SqrtRational> {
    (prop::sample::select(vec![-1, 1]), nonneg()).prop_map(|(s, r)| SqrtRational::with_sign(s, r))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a - &a, Rational::zero());
        if !a.is_zero() {
            prop_assert_eq!(checked_div(&b, &a).unwrap() * &a, b.clone());
        }
        prop_assert!(matches!(checked_div(&a, &Rational::zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn canonical_denominator(a in rational()) {
        prop_assert!(a.denom() > &BigInt::zero());
        let g = gcd(a.numer().clone(), a.denom().clone());
        prop_assert!(g.is_one() || a.is_zero());
    }

    #[test]
    fn rational_round_trip(a in rational()) {
        prop_assert_eq!(parse_rational(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn half_int_round_trip(t in -400i64..=400) {
        let h = HalfInt::from_twice(t);
        prop_assert_eq!(h.to_string().parse::<HalfInt>().unwrap(), h);
        prop_assert_eq!(h.twice(), t);
        prop_assert_eq!(-(-h), h);
    }

    #[test]
    fn sqrt_rational_round_trip(s in sqrt_rational()) {
        prop_assert_eq!(s.to_string().parse::<SqrtRational>().unwrap(), s);
    }

    #[test]
    fn sqrt_rational_products(a in sqrt_rational(), b in sqrt_rational()) {
        let p = &a * &b;
        prop_assert_eq!(p.square(), a.square() * b.square());
        prop_assert_eq!(p.sign(), if p.is_zero() { 0 } else { a.sign() * b.sign() });
        prop_assert!((p.to_f64() - a.to_f64() * b.to_f64()).abs() <= 1e-9 * (1.0 + p.to_f64().abs()));
        prop_assert_eq!(&a * &a, SqrtRational::from_rational(&a.square()));
    }

    #[test]
    fn perfect_squares(a in nonneg()) {
        let sq = &a * &a;
        prop_assert_eq!(rational_sqrt(&sq), Some(a.clone()));
        prop_assert_eq!(SqrtRational::sqrt_of(sq).unwrap().to_rational(), Some(a));
    }

    #[test]
    fn pascal_rule(n in 1i64..=120, k in 1i64..=120) {
        prop_assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
    }

    #[test]
    fn extended_binomial_continuation(g in -40i64..=-1, p in 1i64..=40) {
        // C(g, p) = C(g-1, p-1) + C(g-1, p) keeps holding for negative g
        prop_assert_eq!(extended_binomial(g, p), extended_binomial(g - 1, p - 1) + extended_binomial(g - 1, p));
        // and C(-1, p) = (-1)^p
        let unit = if p % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        prop_assert_eq!(extended_binomial(-1, p), unit);
    }

    #[test]
    fn pochhammer_recurrence(y in rational(), p in 0u32..=12) {
        let shifted = &y + Rational::int(p as i64);
        prop_assert_eq!(pochhammer(&y, p + 1), pochhammer(&y, p) * shifted);
    }

    #[test]
    fn factorial_ratios(n in 0u64..=300) {
        prop_assert_eq!(factorial_u(n + 1), factorial_u(n) * (n + 1));
        let k = n / 3;
        prop_assert_eq!(
            factorial_u(n),
            binomial(n as i64, k as i64) * factorial_u(k) * factorial_u(n - k)
        );
    }
}

fn gcd(mut a: BigInt, mut b: BigInt) -> BigInt {
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    if a < BigInt::zero() { -a } else { a }
}

#[test]
fn parsing_rejects_garbage() {
    for bad in ["", "1/", "/2", "a", "1//2", "1/-2", "1.5"] {
        assert!(parse_rational(bad).is_err(), "{bad:?}");
    }
    assert!(matches!(parse_rational("3/0"), Err(Error::DivisionByZero)));
    for bad in ["", "1/3", "x", "3/2/2"] {
        assert!(bad.parse::<HalfInt>().is_err(), "{bad:?}");
    }
    assert!(factorial(-1).is_err());
    assert!(SqrtRational::sqrt_of(Rational::int(-1)).is_err());
}

#[test]
fn rendering() {
    assert_eq!(SqrtRational::sqrt_of(Rational::frac(2, 15)).unwrap().to_string(), "+sqrt(2/15)");
    assert_eq!((-SqrtRational::sqrt_of(Rational::frac(1, 3)).unwrap()).to_string(), "-sqrt(1/3)");
    assert_eq!(SqrtRational::sqrt_of(Rational::frac(1, 36)).unwrap().to_string(), "1/6");
    assert_eq!(SqrtRational::zero().to_string(), "0");
    assert_eq!(HalfInt::from_twice(-3).to_string(), "-3/2");
    assert_eq!(HalfInt::from_twice(4).to_string(), "2");
}
