use num_traits::Zero;

use super::spherical::radial_moments;
use super::{Charge, ParabolicOrbital, SphericalOrbital};
use crate::error::{Error, Result};
use crate::exact::{HalfInt, Rational, RationalExt, SqrtRational};
use crate::sumrule::sumrule_zero_projection;
use crate::wigner::{phase, wigner_3jm, ThreeJArgs};

/// Overlap `<n q m | n l m>`:
/// `(-1)^((1+m-q-n)/2) sqrt(2l+1) ((n-1)/2 (n-1)/2 l; (m-q)/2 (m+q)/2 -m)`.
pub fn cg_spherical_parabolic(n: u32, q: i32, m: i32, l: u32) -> Result<SqrtRational> {
    ParabolicOrbital::from_electric(n, q, m)?;
    if l >= n {
        return Err(Error::Domain(format!("l = {l} must satisfy l <= n - 1 = {}", n as i64 - 1)));
    }
    if l < m.unsigned_abs() {
        return Ok(SqrtRational::zero());
    }
    let (n, q, m, l) = (n as i64, q as i64, m as i64, l as i64);
    let args = ThreeJArgs::from_twice([n - 1, n - 1, 2 * l, m - q, m + q, -2 * m])?;
    let three = wigner_3jm(&args);
    let weight = SqrtRational::sqrt_of(Rational::int(2 * l + 1))?;
    // 1 + m - q - n is even for every valid state.
    let sign = SqrtRational::from_rational(&Rational::int(phase((1 + m - q - n) / 2) as i64));
    Ok(sign * weight * three)
}

/// `sum_l |<n q m|n l m>|^2 <n l| r^p |n l>`.
pub fn expval_parabolic_via_basis_change(orb: &ParabolicOrbital, z: &Charge, p: u32) -> Rational {
    let mut total = Rational::zero();
    for l in orb.m().unsigned_abs()..orb.n() {
        let weight = cg_spherical_parabolic(orb.n(), orb.q(), orb.m(), l).expect("valid orbital").square();
        let spherical = SphericalOrbital::new(orb.n(), l).expect("l < n");
        total += weight * radial_moments(&spherical, z, p).swap_remove(p as usize);
    }
    total
}

/// `<n q m| L^(2k) |n q m>` for `k` in {1, 2} via the zero-projection sum
/// rule with `a = (n-1+|m|)/2`, `c = (n-1-|m|)/2`, `x = -q/2`.
pub fn l2k_parabolic(orb: &ParabolicOrbital, k: u32) -> Result<Rational> {
    if !(1..=2).contains(&k) {
        return Err(Error::Domain(format!("parabolic <L^2k> provided for k in 1..=2, got {k}")));
    }
    let (n, m, q) = (orb.n() as i64, orb.m().unsigned_abs() as i64, orb.q() as i64);
    sumrule_zero_projection(
        k,
        HalfInt::from_twice(n - 1 + m),
        HalfInt::from_twice(n - 1 - m),
        HalfInt::from_twice(-q),
    )
}

/// `sum_l |<n q m|n l m>|^2 [l(l+1)]^k` summed directly.
pub fn l2k_parabolic_bruteforce(orb: &ParabolicOrbital, k: u32) -> Rational {
    (orb.m().unsigned_abs()..orb.n())
        .map(|l| {
            let w = cg_spherical_parabolic(orb.n(), orb.q(), orb.m(), l).expect("valid orbital").square();
            w * Rational::int(l as i64 * (l as i64 + 1)).powi(k as i32)
        })
        .sum()
}

/// `(n^2 + m^2 - q^2 - 1) / 2`.
pub fn l2_parabolic_quadratic_form(orb: &ParabolicOrbital) -> Rational {
    let (n, m, q) = (orb.n() as i64, orb.m() as i64, orb.q() as i64);
    Rational::frac(n * n + m * m - q * q - 1, 2)
}

/// `(|m| + 1)(n - 1) + 2 n1 n2`.
pub fn l2_parabolic_n1n2_form(orb: &ParabolicOrbital) -> Rational {
    let (n, m) = (orb.n() as i64, orb.m().unsigned_abs() as i64);
    Rational::int((m + 1) * (n - 1) + 2 * orb.n1() as i64 * orb.n2() as i64)
}

fn l4_polynomial(orb: &ParabolicOrbital, last_uses_n: bool) -> Rational {
    let (n, m, q) = (orb.n() as i64, orb.m() as i64, orb.q() as i64);
    let (n2, m2, q2) = (n * n, m * m, q * q);
    let last = if last_uses_n { n2 } else { m2 };
    let body = 3 + 3 * m2 * m2 + 10 * q2 + 2 * m2 * (n2 - 3 * (1 + q2))
        + 3 * (n2 * n2 + q2 * q2 - 2 * last * (1 + q2));
    Rational::frac(body, 8)
}

/// The closed polynomial for `<L^4>` exactly as it is usually printed,
/// ending in `-2 m^2 (1 + q^2)`. It disagrees with the sum rule (e.g. 8
/// against 2 for n = 2, m = 0, q = 1); kept for diagnostics.
pub fn l4_parabolic_printed(orb: &ParabolicOrbital) -> Rational {
    l4_polynomial(orb, false)
}

/// The printed `<L^4>` polynomial with its last term replaced by
/// `-2 n^2 (1 + q^2)`, which reproduces the sum rule.
pub fn l4_parabolic_conjectured(orb: &ParabolicOrbital) -> Rational {
    l4_polynomial(orb, true)
}
