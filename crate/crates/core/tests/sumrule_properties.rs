use nalgebra::DMatrix;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use wigner_sumrules::sumrule::{
    build_tridiagonal, diagonal_words, sumrule_bruteforce, sumrule_closed, sumrule_operator,
    sumrule_permutation, sumrule_permutation_bounded, sumrule_zero_projection, SumRuleQuery,
    DEFAULT_PERMUTATION_BOUND,
};
use wigner_sumrules::{Error, HalfInt, Rational, RationalExt};

fn h(t: i64) -> HalfInt {
    HalfInt::from_twice(t)
}

/// `J^2` on the block `|m1 + t, m2 - t>` built from scratch in f64.
fn j2_block(j1: HalfInt, m1: HalfInt, j2: HalfInt, m2: HalfInt) -> (DMatrix<f64>, usize) {
    let total = m1 + m2;
    let states: Vec<HalfInt> = j1.projections().filter(|a| (total - *a).abs() <= j2).collect();
    let origin = states.iter().position(|a| *a == m1).unwrap();
    let (a, b) = (j1.to_f64(), j2.to_f64());
    let d = states.len();
    let mut mat = DMatrix::zeros(d, d);
    for (i, s) in states.iter().enumerate() {
        let (x, y) = (s.to_f64(), (total - *s).to_f64());
        mat[(i, i)] = a * (a + 1.0) + b * (b + 1.0) + 2.0 * x * y;
        if i + 1 < d {
            let v = ((a * (a + 1.0) - x * (x + 1.0)) * (b * (b + 1.0) - y * (y - 1.0))).sqrt();
            mat[(i, i + 1)] = v;
            mat[(i + 1, i)] = v;
        }
    }
    (mat, origin)
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9 * a.abs().max(b.abs()).max(1.0)
}

fn point() -> impl Strategy<Value = (HalfInt, HalfInt, HalfInt, HalfInt)> {
    (0i64..=7, 0i64..=7).prop_flat_map(|(a, b)| {
        ((0..=a).prop_map(move |i| -a + 2 * i), (0..=b).prop_map(move |i| -b + 2 * i))
            .prop_map(move |(x, y)| (h(a), h(x), h(b), h(y)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn operator_matches_bruteforce((j1, m1, j2, m2) in point(), k in 0u32..=8) {
        let q = SumRuleQuery::new(k, j1, m1, j2, m2).unwrap();
        prop_assert_eq!(sumrule_operator(&q), sumrule_bruteforce(&q));
    }

    #[test]
    fn permutation_matches_bruteforce((j1, m1, j2, m2) in point(), k in 0u32..=5) {
        let q = SumRuleQuery::new(k, j1, m1, j2, m2).unwrap();
        prop_assert_eq!(sumrule_permutation(&q).unwrap(), sumrule_bruteforce(&q));
    }

    #[test]
    fn closed_matches_bruteforce((j1, m1, j2, m2) in point(), k in 1u32..=3) {
        let q = SumRuleQuery::new(k, j1, m1, j2, m2).unwrap();
        prop_assert_eq!(sumrule_closed(k, j1, m1, j2, m2).unwrap(), sumrule_bruteforce(&q));
    }

    #[test]
    fn matrix_power_oracle((j1, m1, j2, m2) in point(), k in 0u32..=5) {
        let (mat, origin) = j2_block(j1, m1, j2, m2);
        let power = mat.pow(k);
        let q = SumRuleQuery::new(k, j1, m1, j2, m2).unwrap();
        let exact = sumrule_operator(&q).to_f64().unwrap();
        prop_assert!(close(exact, power[(origin, origin)]));
        let block = build_tridiagonal(j1, m1, j2, m2);
        prop_assert_eq!(block.origin_index, origin);
        for target in 0..block.dimension() {
            let entry = block.power_entry(k, target).to_f64();
            prop_assert!(close(entry, power[(target, origin)]), "target {target}: {entry} vs {}", power[(target, origin)]);
        }
    }

    #[test]
    fn log_convex_in_k((j1, m1, j2, m2) in point(), k in 1u32..=6) {
        // S_k are moments of a probability distribution over j(j+1)
        let q = SumRuleQuery::new(k, j1, m1, j2, m2).unwrap();
        let here = sumrule_bruteforce(&q);
        let below = sumrule_bruteforce(&q.with_k(k - 1));
        let above = sumrule_bruteforce(&q.with_k(k + 1));
        prop_assert!(&here * &here <= below * above);
    }
}

#[test]
fn known_values() {
    let q = |k, a, b, c, d| SumRuleQuery::new(k, h(a), h(b), h(c), h(d)).unwrap();
    assert_eq!(sumrule_operator(&q(1, 1, 1, 1, 1)), Rational::int(2));
    assert_eq!(sumrule_operator(&q(2, 2, 0, 2, 0)), Rational::int(24));
    assert_eq!(sumrule_operator(&q(0, 3, 1, 5, -3)), Rational::int(1));
    // Stretched state: only j = j1 + j2.
    assert_eq!(sumrule_operator(&q(3, 2, 2, 4, 4)), Rational::int(1728));
}

#[test]
fn word_counts() {
    let counts: Vec<usize> = (0..=6).map(|k| diagonal_words(k).len()).collect();
    assert_eq!(counts, vec![1, 1, 3, 7, 19, 51, 141]);
    assert!(diagonal_words(5).iter().all(|w| w.is_diagonal() && w.len() == 5));
}

#[test]
fn bounds_and_domains() {
    let q = SumRuleQuery::new(DEFAULT_PERMUTATION_BOUND + 1, h(1), h(1), h(1), h(1)).unwrap();
    assert!(matches!(sumrule_permutation(&q), Err(Error::Capacity { .. })));
    assert!(sumrule_permutation_bounded(&q, DEFAULT_PERMUTATION_BOUND + 1).is_ok());
    assert!(sumrule_closed(4, h(2), h(0), h(2), h(0)).is_err());
    assert!(SumRuleQuery::new(1, h(1), h(3), h(1), h(1)).is_err());
    assert!(sumrule_zero_projection(1, h(2), h(2), h(4)).is_err());
    assert!(sumrule_zero_projection(4, h(2), h(2), h(0)).is_err());
}

#[test]
fn zero_projection_is_a_special_case() {
    for ta in 0i64..=8 {
        for tc in 0i64..=8 {
            for tx in (-tc..=tc).step_by(2) {
                if tx.abs() > ta || (ta - tx) % 2 != 0 {
                    continue;
                }
                let (a, c, x) = (h(ta), h(tc), h(tx));
                for k in 1..=3 {
                    let q = SumRuleQuery::new(k, a, -x, c, x).unwrap();
                    assert_eq!(sumrule_zero_projection(k, a, c, x).unwrap(), sumrule_closed(k, a, -x, c, x).unwrap());
                    assert_eq!(sumrule_zero_projection(k, a, c, x).unwrap(), sumrule_bruteforce(&q));
                }
            }
        }
    }
}
