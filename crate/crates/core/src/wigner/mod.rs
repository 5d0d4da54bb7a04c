//! Wigner 3jm and 6j symbols and Clebsch-Gordan coefficients, evaluated
//! exactly with the Racah single-sum formulas (Condon-Shortley phases).

mod special;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{factorial_u, HalfInt, Rational, SqrtRational};

pub use special::{sixj_unit_special, threej_diag_general, threej_diag_special};

/// `(-1)^n`.
pub(crate) fn phase(n: i64) -> i32 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Integer value of a half-integer combination that is known to be integral.
fn whole(x: i64) -> i64 {
    debug_assert!(x % 2 == 0, "expected an even twice-value, got {x}");
    x / 2
}

fn fact(n: i64) -> BigInt {
    debug_assert!(n >= 0);
    factorial_u(n as u64)
}

/// `|j1 - j2| <= j3 <= j1 + j2` and `j1 + j2 + j3` integral.
pub fn triangle_ok(j1: HalfInt, j2: HalfInt, j3: HalfInt) -> bool {
    let (a, b, c) = (j1.twice(), j2.twice(), j3.twice());
    a >= 0 && b >= 0 && c >= 0 && (a - b).abs() <= c && c <= a + b && (a + b + c) % 2 == 0
}

/// Triangle coefficient `(a+b-c)! (a-b+c)! (-a+b+c)! / (a+b+c+1)!` for a
/// triad that satisfies [`triangle_ok`].
fn triangle_coefficient(a: HalfInt, b: HalfInt, c: HalfInt) -> Rational {
    let (a, b, c) = (a.twice(), b.twice(), c.twice());
    let num = fact(whole(a + b - c)) * fact(whole(a - b + c)) * fact(whole(-a + b + c));
    Rational::new(num, fact(whole(a + b + c) + 1))
}

/// Arguments of `(j1 j2 j3; m1 m2 m3)` with every `(j, m)` pair checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ThreeJArgs {
    pub j1: HalfInt,
    pub j2: HalfInt,
    pub j3: HalfInt,
    pub m1: HalfInt,
    pub m2: HalfInt,
    pub m3: HalfInt,
}

impl ThreeJArgs {
    pub fn new(j1: HalfInt, j2: HalfInt, j3: HalfInt, m1: HalfInt, m2: HalfInt, m3: HalfInt) -> Result<Self> {
        j1.check_projection(m1)?;
        j2.check_projection(m2)?;
        j3.check_projection(m3)?;
        Ok(ThreeJArgs { j1, j2, j3, m1, m2, m3 })
    }

    /// Builds the arguments from twice-values `[2j1, 2j2, 2j3, 2m1, 2m2, 2m3]`.
    pub fn from_twice(t: [i64; 6]) -> Result<Self> {
        let h = HalfInt::from_twice;
        Self::new(h(t[0]), h(t[1]), h(t[2]), h(t[3]), h(t[4]), h(t[5]))
    }

    /// Whether the selection rules allow a nonzero value.
    pub fn selection_rules_hold(&self) -> bool {
        (self.m1 + self.m2 + self.m3) == HalfInt::ZERO && triangle_ok(self.j1, self.j2, self.j3)
    }
}

/// Exact `(j1 j2 j3; m1 m2 m3)`; zero whenever a selection rule fails.
pub fn wigner_3jm(args: &ThreeJArgs) -> SqrtRational {
    if !args.selection_rules_hold() {
        return SqrtRational::zero();
    }
    let [j1, j2, j3, m1, m2, m3] =
        [args.j1, args.j2, args.j3, args.m1, args.m2, args.m3].map(HalfInt::twice);

    let t_min = 0.max(whole(j2 - j3 - m1)).max(whole(j1 - j3 + m2));
    let t_max = whole(j1 + j2 - j3).min(whole(j1 - m1)).min(whole(j2 + m2));

    let mut sum = Rational::zero();
    for t in t_min..=t_max {
        let den = fact(t)
            * fact(whole(j3 - j2 + m1) + t)
            * fact(whole(j3 - j1 - m2) + t)
            * fact(whole(j1 + j2 - j3) - t)
            * fact(whole(j1 - m1) - t)
            * fact(whole(j2 + m2) - t);
        let term = Rational::new(BigInt::from(phase(t)), den);
        sum += term;
    }
    if sum.is_zero() {
        return SqrtRational::zero();
    }

    let projections = fact(whole(j1 + m1))
        * fact(whole(j1 - m1))
        * fact(whole(j2 + m2))
        * fact(whole(j2 - m2))
        * fact(whole(j3 + m3))
        * fact(whole(j3 - m3));
    let radicand = &sum * &sum
        * triangle_coefficient(args.j1, args.j2, args.j3)
        * Rational::from_integer(projections);
    let sign = phase(whole(j1 - j2 - m3)) * if sum.is_negative() { -1 } else { 1 };
    SqrtRational::with_sign(sign, radicand)
}

/// Convenience wrapper validating the arguments before calling [`wigner_3jm`].
pub fn threej(j1: HalfInt, j2: HalfInt, j3: HalfInt, m1: HalfInt, m2: HalfInt, m3: HalfInt) -> Result<SqrtRational> {
    Ok(wigner_3jm(&ThreeJArgs::new(j1, j2, j3, m1, m2, m3)?))
}

/// `<j m | j1 m1 j2 m2> = (-1)^(j1-j2+m) sqrt(2j+1) (j1 j2 j; m1 m2 -m)`.
pub fn clebsch_gordan(j1: HalfInt, m1: HalfInt, j2: HalfInt, m2: HalfInt, j: HalfInt, m: HalfInt) -> Result<SqrtRational> {
    let three = threej(j1, j2, j, m1, m2, -m)?;
    if three.is_zero() {
        return Ok(three);
    }
    let weight = SqrtRational::sqrt_of(Rational::from_integer((j.twice() + 1).into()))?;
    let sign = phase(whole((j1 - j2 + m).twice()));
    Ok(SqrtRational::with_sign(sign, Rational::from_integer(1.into())) * weight * three)
}

/// Arguments of the 6j symbol `{j1 j2 j3; j4 j5 j6}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SixJArgs(pub [HalfInt; 6]);

impl SixJArgs {
    pub fn new(j: [HalfInt; 6]) -> Result<Self> {
        for x in j {
            x.check_momentum()?;
        }
        Ok(SixJArgs(j))
    }

    pub fn from_twice(t: [i64; 6]) -> Result<Self> {
        Self::new(t.map(HalfInt::from_twice))
    }

    /// The four triads `(j1 j2 j3) (j1 j5 j6) (j4 j2 j6) (j4 j5 j3)`.
    pub fn triads(&self) -> [[HalfInt; 3]; 4] {
        let [j1, j2, j3, j4, j5, j6] = self.0;
        [[j1, j2, j3], [j1, j5, j6], [j4, j2, j6], [j4, j5, j3]]
    }
}

/// Exact `{j1 j2 j3; j4 j5 j6}`; zero if any triad fails the triangle rule.
pub fn wigner_6j(args: &SixJArgs) -> SqrtRational {
    let triads = args.triads();
    if !triads.iter().all(|&[a, b, c]| triangle_ok(a, b, c)) {
        return SqrtRational::zero();
    }
    let [j1, j2, j3, j4, j5, j6] = args.0.map(HalfInt::twice);
    let alpha = [
        whole(j1 + j2 + j3),
        whole(j1 + j5 + j6),
        whole(j4 + j2 + j6),
        whole(j4 + j5 + j3),
    ];
    let beta = [
        whole(j1 + j2 + j4 + j5),
        whole(j2 + j3 + j5 + j6),
        whole(j3 + j1 + j6 + j4),
    ];
    let t_min = *alpha.iter().max().unwrap();
    let t_max = *beta.iter().min().unwrap();

    let mut sum = Rational::zero();
    for t in t_min..=t_max {
        let den = alpha.iter().map(|&a| fact(t - a)).product::<BigInt>()
            * beta.iter().map(|&b| fact(b - t)).product::<BigInt>();
        sum += Rational::new(BigInt::from(phase(t)) * fact(t + 1), den);
    }
    if sum.is_zero() {
        return SqrtRational::zero();
    }
    let deltas: Rational = triads
        .iter()
        .map(|&[a, b, c]| triangle_coefficient(a, b, c))
        .product();
    let sign = if sum.is_negative() { -1 } else { 1 };
    SqrtRational::with_sign(sign, &sum * &sum * deltas)
}

/// Convenience wrapper for [`wigner_6j`].
pub fn sixj(j: [HalfInt; 6]) -> Result<SqrtRational> {
    Ok(wigner_6j(&SixJArgs::new(j)?))
}

pub(crate) fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Domain(msg()))
    }
}
