use num_traits::{One, Signed, Zero};

use super::{diagonal_weight, ladder_weight, SumRuleQuery};
use crate::exact::{HalfInt, Rational, SqrtRational};

/// `J^2` restricted to the states `|m1 + t, m2 - t>` of fixed `M = m1 + m2`,
/// ordered by increasing `t`.
///
/// Off-diagonal entries are stored as squares (`offdiag_sq[i]` is the
/// product of the raising and lowering weights linking states `i` and
/// `i + 1`). Diagonal entries of powers of a symmetric tridiagonal matrix
/// only see each edge through such products, so the walk is carried out on
/// the similar matrix with `offdiag_sq` above the diagonal and ones below.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TridiagonalBlock {
    j1: HalfInt,
    j2: HalfInt,
    /// First state is `(m1 + t_min, m2 - t_min)`.
    first: (HalfInt, HalfInt),
    pub diag: Vec<Rational>,
    pub offdiag_sq: Vec<Rational>,
    pub origin_index: usize,
}

/// The ladder block containing `|j1 m1, j2 m2>`.
pub fn build_tridiagonal(j1: HalfInt, m1: HalfInt, j2: HalfInt, m2: HalfInt) -> TridiagonalBlock {
    let (tj1, tj2, tm1, tm2) = (j1.twice(), j2.twice(), m1.twice(), m2.twice());
    // Twice-values of the admissible shifts t.
    let t_min = (-tj1 - tm1).max(tm2 - tj2);
    let t_max = (tj1 - tm1).min(tm2 + tj2);
    let (jj1, jj2) = (j1.casimir(), j2.casimir());

    let mut diag = Vec::new();
    let mut offdiag_sq = Vec::new();
    let mut t = t_min;
    while t <= t_max {
        let a = (m1 + HalfInt::from_twice(t)).to_rational();
        let b = (m2 - HalfInt::from_twice(t)).to_rational();
        diag.push(diagonal_weight(&jj1, &jj2, &a, &b));
        if t + 2 <= t_max {
            offdiag_sq.push(ladder_weight(&jj1, &a, 1) * ladder_weight(&jj2, &b, -1));
        }
        t += 2;
    }
    TridiagonalBlock {
        j1,
        j2,
        first: (m1 + HalfInt::from_twice(t_min), m2 - HalfInt::from_twice(t_min)),
        diag,
        offdiag_sq,
        origin_index: (-t_min / 2) as usize,
    }
}

impl TridiagonalBlock {
    pub fn dimension(&self) -> usize {
        self.diag.len()
    }

    pub fn momenta(&self) -> (HalfInt, HalfInt) {
        (self.j1, self.j2)
    }

    /// Projections `(m1', m2')` of the state at `index`.
    pub fn state(&self, index: usize) -> (HalfInt, HalfInt) {
        let shift = HalfInt::int(index as i64);
        (self.first.0 + shift, self.first.1 - shift)
    }

    /// `v -> M v` with `M[i][i+1] = offdiag_sq[i]` and `M[i+1][i] = 1`.
    fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        self.apply_with(v, false)
    }

    /// `v -> M^T v`.
    fn apply_transposed(&self, v: &[Rational]) -> Vec<Rational> {
        self.apply_with(v, true)
    }

    fn apply_with(&self, v: &[Rational], transposed: bool) -> Vec<Rational> {
        let d = self.dimension();
        (0..d)
            .map(|i| {
                let mut acc = &self.diag[i] * &v[i];
                if i + 1 < d && !v[i + 1].is_zero() {
                    if transposed {
                        acc += &v[i + 1];
                    } else {
                        acc += &self.offdiag_sq[i] * &v[i + 1];
                    }
                }
                if i > 0 && !v[i - 1].is_zero() {
                    if transposed {
                        acc += &self.offdiag_sq[i - 1] * &v[i - 1];
                    } else {
                        acc += &v[i - 1];
                    }
                }
                acc
            })
            .collect()
    }

    fn unit(&self, index: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dimension()];
        v[index] = Rational::one();
        v
    }

    /// `<origin| (J^2)^k |origin>`, by `k` sparse applications to the origin
    /// unit vector.
    pub fn power_diagonal(&self, k: u32) -> Rational {
        let mut v = self.unit(self.origin_index);
        for _ in 0..k {
            v = self.apply(&v);
        }
        v.swap_remove(self.origin_index)
    }

    /// Experimental: the off-diagonal element `<state(target)| (J^2)^k |origin>`
    /// of the symmetric (physical) matrix. Gauge invariance makes
    /// `M^k[o][s] * M^k[s][o]` its exact square.
    pub fn power_entry(&self, k: u32, target: usize) -> SqrtRational {
        assert!(target < self.dimension(), "target state outside the block");
        let mut column = self.unit(self.origin_index);
        let mut row = self.unit(self.origin_index);
        for _ in 0..k {
            column = self.apply(&column);
            row = self.apply_transposed(&row);
        }
        let sign = if row[target].is_negative() {
            -1
        } else if row[target].is_zero() {
            0
        } else {
            1
        };
        SqrtRational::with_sign(sign, &row[target] * &column[target])
    }
}

/// `S_k` as the diagonal element of `(J^2)^k` in the uncoupled basis.
pub fn sumrule_operator(q: &SumRuleQuery) -> Rational {
    build_tridiagonal(q.j1, q.m1, q.j2, q.m2).power_diagonal(q.k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::RationalExt;

    fn h(t: i64) -> HalfInt {
        HalfInt::from_twice(t)
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::int(x)).collect()
    }

    #[test]
    fn stretched_block() {
        let b = build_tridiagonal(h(1), h(1), h(1), h(1));
        assert_eq!(b.dimension(), 1);
        assert_eq!(b.diag, ints(&[2]));
        assert!(b.offdiag_sq.is_empty());
        assert_eq!(b.origin_index, 0);
    }

    #[test]
    fn two_state_block() {
        let b = build_tridiagonal(h(1), h(1), h(1), h(-1));
        assert_eq!(b.diag, ints(&[1, 1]));
        assert_eq!(b.offdiag_sq, ints(&[1]));
        assert_eq!(b.origin_index, 1);
        assert_eq!(b.state(0), (h(-1), h(1)));
        assert_eq!(b.state(1), (h(1), h(-1)));
    }

    #[test]
    fn three_state_block() {
        let b = build_tridiagonal(h(2), h(0), h(2), h(0));
        assert_eq!(b.diag, ints(&[2, 4, 2]));
        assert_eq!(b.offdiag_sq, ints(&[4, 4]));
        assert_eq!(b.origin_index, 1);
    }

    #[test]
    fn operator_examples() {
        let q = |k, t: [i64; 4]| SumRuleQuery::new(k, h(t[0]), h(t[1]), h(t[2]), h(t[3])).unwrap();
        assert_eq!(sumrule_operator(&q(0, [5, 1, 3, -3])), Rational::int(1));
        assert_eq!(sumrule_operator(&q(1, [1, 1, 1, 1])), Rational::int(2));
        assert_eq!(sumrule_operator(&q(2, [2, 0, 2, 0])), Rational::int(24));
        assert_eq!(sumrule_operator(&q(3, [1, 1, 1, 1])), Rational::int(8));
    }

    #[test]
    fn power_entry_diagonal_matches_power_diagonal() {
        let b = build_tridiagonal(h(3), h(1), h(4), h(0));
        for k in 0..5 {
            let e = b.power_entry(k, b.origin_index);
            assert_eq!(e.to_rational(), Some(b.power_diagonal(k)));
        }
    }
}
