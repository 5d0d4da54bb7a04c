use num_traits::{One, Zero};

use super::{diagonal_weight, ladder_weight, SumRuleQuery};
use crate::error::{Error, Result};
use crate::exact::{rational_sqrt, Rational};

/// Default cap on the word length; the word count grows like `3^k`.
pub const DEFAULT_PERMUTATION_BOUND: u32 = 6;

/// The three pieces of `J^2 = A + B1 + B2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ladder {
    /// `J1^2 + J2^2 + 2 J1z J2z`
    A,
    /// `J1+ J2-`
    B1,
    /// `J1- J2+`
    B2,
}

/// A product of [`Ladder`] factors, written left to right and applied right
/// to left.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OperatorWord(pub Vec<Ladder>);

impl OperatorWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn count(&self, l: Ladder) -> usize {
        self.0.iter().filter(|&&x| x == l).count()
    }

    /// A word can have a diagonal matrix element only if it raises `m1` as
    /// often as it lowers it.
    pub fn is_diagonal(&self) -> bool {
        self.count(Ladder::B1) == self.count(Ladder::B2)
    }

    /// `<j1 m1 j2 m2| word |j1 m1 j2 m2>`, exact.
    pub fn diagonal_element(&self, q: &SumRuleQuery) -> Rational {
        if !self.is_diagonal() {
            return Rational::zero();
        }
        let (jj1, jj2) = (q.j1.casimir(), q.j2.casimir());
        let (mut m1, mut m2) = (q.m1.to_rational(), q.m2.to_rational());
        let one = Rational::one();
        let mut diagonal_product = Rational::one();
        let mut radicand_product = Rational::one();
        for op in self.0.iter().rev() {
            match op {
                Ladder::A => diagonal_product *= diagonal_weight(&jj1, &jj2, &m1, &m2),
                Ladder::B1 => {
                    radicand_product *= ladder_weight(&jj1, &m1, 1) * ladder_weight(&jj2, &m2, -1);
                    m1 += &one;
                    m2 -= &one;
                }
                Ladder::B2 => {
                    radicand_product *= ladder_weight(&jj1, &m1, -1) * ladder_weight(&jj2, &m2, 1);
                    m1 -= &one;
                    m2 += &one;
                }
            }
            if radicand_product.is_zero() {
                return Rational::zero();
            }
        }
        // A closed walk crosses every edge an even number of times.
        let amplitude = rational_sqrt(&radicand_product).expect("closed ladder walk has a perfect-square weight");
        diagonal_product * amplitude
    }
}

/// All distinct words of length `k` with equally many `B1` and `B2`, grouped
/// by the number of ladder pairs.
pub fn diagonal_words(k: u32) -> Vec<OperatorWord> {
    let mut out = Vec::new();
    for pairs in 0..=(k / 2) {
        let mut counts = [(k - 2 * pairs) as usize, pairs as usize, pairs as usize];
        let mut current = Vec::with_capacity(k as usize);
        permute(&mut counts, &mut current, &mut out);
    }
    out
}

fn permute(counts: &mut [usize; 3], current: &mut Vec<Ladder>, out: &mut Vec<OperatorWord>) {
    if counts.iter().all(|&c| c == 0) {
        out.push(OperatorWord(current.clone()));
        return;
    }
    for (slot, op) in [Ladder::A, Ladder::B1, Ladder::B2].into_iter().enumerate() {
        if counts[slot] > 0 {
            counts[slot] -= 1;
            current.push(op);
            permute(counts, current, out);
            current.pop();
            counts[slot] += 1;
        }
    }
}

/// `S_k` by summing the diagonal elements of every diagonal word, with the
/// default bound on `k`.
pub fn sumrule_permutation(q: &SumRuleQuery) -> Result<Rational> {
    sumrule_permutation_bounded(q, DEFAULT_PERMUTATION_BOUND)
}

pub fn sumrule_permutation_bounded(q: &SumRuleQuery, bound: u32) -> Result<Rational> {
    if q.k > bound {
        return Err(Error::Capacity {
            what: "permutation word length k",
            requested: q.k as usize,
            bound: bound as usize,
        });
    }
    Ok(diagonal_words(q.k).iter().map(|w| w.diagonal_element(q)).sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{HalfInt, RationalExt};
    use crate::sumrule::sumrule_operator;

    fn h(t: i64) -> HalfInt {
        HalfInt::from_twice(t)
    }

    fn q(k: u32, t: [i64; 4]) -> SumRuleQuery {
        SumRuleQuery::new(k, h(t[0]), h(t[1]), h(t[2]), h(t[3])).unwrap()
    }

    #[test]
    fn word_counts() {
        // Central trinomial coefficients 1, 1, 3, 7, 19, 51, 141.
        let counts: Vec<usize> = (0..=6).map(|k| diagonal_words(k).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 7, 19, 51, 141]);
        assert!(diagonal_words(4).iter().all(OperatorWord::is_diagonal));
    }

    #[test]
    fn permutation_examples() {
        assert_eq!(sumrule_permutation(&q(1, [2, 0, 2, 0])).unwrap(), Rational::int(4));
        assert_eq!(sumrule_permutation(&q(2, [1, 1, 1, -1])).unwrap(), Rational::int(2));
        let query = q(3, [2, 2, 2, -2]);
        assert_eq!(sumrule_permutation(&query).unwrap(), sumrule_operator(&query));
    }

    #[test]
    fn k2_words_match_term_by_term() {
        // (1/2, 1/2, 1/2, -1/2): AA gives 1, B1B2 gives 1, B2B1 gives 0.
        let query = q(2, [1, 1, 1, -1]);
        let value = |w: &[Ladder]| OperatorWord(w.to_vec()).diagonal_element(&query);
        assert_eq!(value(&[Ladder::A, Ladder::A]), Rational::int(1));
        assert_eq!(value(&[Ladder::B1, Ladder::B2]), Rational::int(1));
        assert_eq!(value(&[Ladder::B2, Ladder::B1]), Rational::int(0));
        assert_eq!(value(&[Ladder::B1, Ladder::B1]), Rational::int(0));
    }

    #[test]
    fn capacity_bound() {
        assert!(matches!(sumrule_permutation(&q(7, [1, 1, 1, 1])), Err(Error::Capacity { .. })));
        assert!(sumrule_permutation_bounded(&q(7, [1, 1, 1, 1]), 7).is_ok());
    }
}
