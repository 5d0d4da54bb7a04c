use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Charge, Method, SphericalOrbital};
use crate::error::{Error, Result};
use crate::exact::{binomial, factorial_u, pochhammer, Rational, RationalExt};

fn int(n: i64) -> Rational {
    Rational::int(n)
}

fn fact(n: u64) -> Rational {
    Rational::from_integer(factorial_u(n))
}

/// `<n l| r^p |n l>`.
pub fn expval_spherical(orb: &SphericalOrbital, z: &Charge, p: u32, method: Method) -> Rational {
    match method {
        Method::Recurrence => radial_moments(orb, z, p).swap_remove(p as usize),
        Method::Explicit => radial_moment_explicit(orb, z, p),
    }
}

/// `<r^0>, ..., <r^p>` by the three-term recurrence
/// `a_k = (2k+1) n^2 / (Z (k+1)) a_{k-1} - k n^2 / (4 Z^2 (k+1)) [4l(l+1) + 1 - k^2] a_{k-2}`.
pub(crate) fn radial_moments(orb: &SphericalOrbital, z: &Charge, p: u32) -> Vec<Rational> {
    let n2 = int(orb.n as i64 * orb.n as i64);
    let ll = int(orb.l as i64 * (orb.l as i64 + 1));
    let z = z.value();
    let mut out = Vec::with_capacity(p as usize + 1);
    out.push(Rational::one());
    if p >= 1 {
        out.push((int(3) * &n2 - &ll) / (int(2) * z));
    }
    for k in 2..=p as i64 {
        let first = int(2 * k + 1) * &n2 / (z * int(k + 1)) * &out[k as usize - 1];
        let second = int(k) * &n2 / (int(4) * z * z * int(k + 1))
            * (int(4) * &ll + int(1) - int(k * k))
            * &out[k as usize - 2];
        out.push(first - second);
    }
    out
}

/// Double finite sum over the Laguerre expansion.
fn radial_moment_explicit(orb: &SphericalOrbital, z: &Charge, p: u32) -> Rational {
    let (n, l, p) = (orb.n as i64, orb.l as i64, p as i64);
    let z = z.value();
    let mut outer = Rational::zero();
    for s in 0..=(2 * n - 2 * l - 2) {
        let inner: BigInt = (0..=s)
            .map(|j| binomial(s, j) * binomial(n + l, 2 * l + 1 + j) * binomial(n + l, 2 * l + 1 + s - j))
            .sum();
        let term = Rational::from_integer(inner) * fact((2 * l + p + s + 2) as u64) / fact(s as u64);
        if s % 2 == 0 {
            outer += term;
        } else {
            outer -= term;
        }
    }
    let scale = (int(n) / (int(2) * z)).powi(p as i32 + 1);
    z * fact((n - l - 1) as u64) / (int(n * n) * fact((n + l) as u64)) * scale * outer
}

/// `<n l| r^(-p-2) |n l>` from the terminating series
/// `3F2(-p, p+1, l+1-n; 1, 2l+2; 1)`; defined for `p <= 2l`.
pub fn expval_spherical_negative(orb: &SphericalOrbital, z: &Charge, p: u32) -> Result<Rational> {
    let (n, l) = (orb.n as i64, orb.l as i64);
    let p = p as i64;
    if p > 2 * l {
        return Err(Error::Domain(format!("<r^-{}> diverges for l = {l}; need p <= 2l", p + 2)));
    }
    let upper = [int(-p), int(p + 1), int(l + 1 - n)];
    let lower = [int(1), int(2 * l + 2)];
    let mut series = Rational::zero();
    for k in 0..=p as u32 {
        let num: Rational = upper.iter().map(|a| pochhammer(a, k)).product();
        let den: Rational = lower.iter().map(|b| pochhammer(b, k)).product::<Rational>() * fact(k as u64);
        series += num / den;
    }
    // (Z/(n l))^(p+2) (l/n) (2l)^(p+1) with the powers of l cancelled.
    let zv = z.value();
    let prefactor = int(2).powi(p as i32 + 1) * zv.powi(p as i32 + 2) / int(n).powi(p as i32 + 3);
    Ok(prefactor * fact((2 * l - p) as u64) / fact((2 * l + 1) as u64) * series)
}

/// `<r^p>` through the reflection onto a negative power:
/// `<r^p> = (2l+p+2)! / (2l-p-1)! (n/2Z)^(2p+3) <r^(-p-3)>`, for `p <= 2l - 1`.
pub fn marxer_reflect(orb: &SphericalOrbital, z: &Charge, p: u32) -> Result<Rational> {
    let (n, l, p) = (orb.n as i64, orb.l as i64, p as i64);
    if p > 2 * l - 1 {
        return Err(Error::Domain(format!("reflection needs p <= 2l - 1, got p = {p} with l = {l}")));
    }
    let negative = expval_spherical_negative(orb, z, (p + 1) as u32)?;
    let ratio = fact((2 * l + p + 2) as u64) / fact((2 * l - p - 1) as u64);
    let scale = (int(n) / (int(2) * z.value())).powi(2 * p as i32 + 3);
    Ok(ratio * scale * negative)
}
