use num_traits::{One, Zero};

use super::{Charge, Method, ParabolicOrbital};
use crate::error::{Error, Result};
use crate::exact::{binomial, extended_binomial, factorial_u, Rational, RationalExt};

/// Parabolic moment `<xi^k> = c * sqrt(Z/pi) / n`, stored through the
/// rational coefficient `c`.
///
/// The moment is `int xi^k |u(xi)|^2 dxi` with `u` the normalized
/// `xi`-factor of the parabolic wavefunction, so `c_0 = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct XiMomentCoefficient(pub Rational);

impl XiMomentCoefficient {
    pub fn coefficient(&self) -> &Rational {
        &self.0
    }
}

fn check(n: u32, n1: u32, m: u32) -> Result<()> {
    if n == 0 || n1 + m + 1 > n {
        return Err(Error::Domain(format!("no parabolic state with n = {n}, n1 = {n1}, |m| = {m}")));
    }
    Ok(())
}

/// `c_0, ..., c_k` by the three-term recurrence in `k`.
pub fn xi_moments(n: u32, n1: u32, m: u32, z: &Charge, k: u32) -> Result<Vec<Rational>> {
    check(n, n1, m)?;
    let scale = Rational::int(n as i64) / z.value();
    let drift = Rational::int(2 * n1 as i64 + m as i64 + 1);
    let m = m as i64;
    let mut c = Vec::with_capacity(k as usize + 1);
    c.push(Rational::one());
    if k >= 1 {
        c.push(&scale * &drift);
    }
    for j in 2..=k as i64 {
        let first = &scale * Rational::frac(2 * j - 1, j) * &drift * &c[j as usize - 1];
        let second = &scale * &scale * Rational::frac((j - 1) * (m - j + 1) * (m + j - 1), j) * &c[j as usize - 2];
        c.push(first - second);
    }
    Ok(c)
}

/// Explicit single sum with extended binomials.
fn xi_moment_explicit(n: u32, n1: u32, m: u32, z: &Charge, k: u32) -> Rational {
    let (n1, m, k) = (n1 as i64, m as i64, k as i64);
    let sum: Rational = (0..=n1)
        .map(|i| {
            let b = extended_binomial(n1 - i - k - 1, n1 - i);
            Rational::from_integer(&b * &b * binomial(m + k + i, i))
        })
        .sum();
    let prefactor = Rational::new(
        factorial_u(n1 as u64) * factorial_u((m + k) as u64),
        factorial_u((n1 + m) as u64),
    );
    prefactor * (Rational::int(n as i64) / z.value()).powi(k as i32) * sum
}

/// `<n n1 m| xi^k |n n1 m>` (for `eta`, pass `n2` in place of `n1`).
pub fn xi_moment(n: u32, n1: u32, m: u32, z: &Charge, k: u32, method: Method) -> Result<XiMomentCoefficient> {
    check(n, n1, m)?;
    let c = match method {
        Method::Recurrence => xi_moments(n, n1, m, z, k)?.swap_remove(k as usize),
        Method::Explicit => xi_moment_explicit(n, n1, m, z, k),
    };
    Ok(XiMomentCoefficient(c))
}

/// `<n n1 n2 m| r^p |n n1 n2 m>` from products of `xi` and `eta` moments.
///
/// With `r = (xi + eta)/2` and volume element `(xi + eta)/4`, the moment is
/// `pi / 2^(p+1) sum_r C(p+1, r) <xi^r> <eta^(p+1-r)>`; the factor
/// `(sqrt(Z/pi)/n)^2` cancels the `pi`.
pub fn expval_parabolic(orb: &ParabolicOrbital, z: &Charge, p: u32) -> Rational {
    let m = orb.m().unsigned_abs();
    let xi = xi_moments(orb.n(), orb.n1(), m, z, p + 1).expect("valid orbital");
    let eta = xi_moments(orb.n(), orb.n2(), m, z, p + 1).expect("valid orbital");
    let top = p as i64 + 1;
    let sum: Rational = (0..=top)
        .map(|r| Rational::from_integer(binomial(top, r)) * &xi[r as usize] * &eta[(top - r) as usize])
        .sum();
    let n = orb.n() as i64;
    let denominator = Rational::int(2).powi(top as i32) * Rational::int(n * n);
    if sum.is_zero() {
        return sum;
    }
    z.value() * sum / denominator
}
