use super::{Charge, ParabolicOrbital, SphericalOrbital};
use crate::error::{Error, Result};
use crate::exact::{Rational, RationalExt};

/// Quantum numbers for a tabulated closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orbital {
    Spherical(SphericalOrbital),
    Parabolic(ParabolicOrbital),
}

fn spherical(orb: &SphericalOrbital, k: u32) -> Option<(i64, i64, i64)> {
    let n = orb.n() as i64;
    let (n2, n4) = (n * n, n * n * n * n);
    let ll = orb.l() as i64 * (orb.l() as i64 + 1);
    // (numerator, denominator, power of n in the prefactor)
    Some(match k {
        1 => (3 * n2 - ll, 2, 0),
        2 => (5 * n2 + 1 - 3 * ll, 2, 2),
        3 => (3 * ll * (ll - 2) + 5 * n2 * (5 - 6 * ll) + 35 * n4, 8, 2),
        4 => (12 - 5 * ll * (10 - 3 * ll) + 35 * n2 * (3 - 2 * ll) + 63 * n4, 8, 4),
        _ => return None,
    })
}

fn parabolic(orb: &ParabolicOrbital, k: u32) -> Option<(i64, i64, i64)> {
    let (n, m, q) = (orb.n() as i64, orb.m() as i64, orb.q() as i64);
    let (n2, m2, q2) = (n * n, m * m, q * q);
    Some(match k {
        1 => (6 * n2 - (n2 - 1 + m2 - q2), 4, 0),
        2 => (2 * n * (2 * n + 3) + 3 * ((n - 1) * (n - 1) + q2 - m2) + 2, 4, 2),
        3 => (
            33 + 9 * m2 * m2 + 169 * n2 * n2 - 6 * m2 * (7 + 19 * n2 + 3 * q2)
                + 2 * n2 * (139 + 51 * q2)
                + 9 * (6 + q2) * q2,
            64,
            2,
        ),
        4 => (
            341 + 45 * m2 * m2 + 269 * n2 * n2 - 10 * m2 * (29 + 25 * n2 + 9 * q2)
                + 10 * n2 * (83 + 19 * q2)
                + 350 * q2
                + 45 * q2 * q2,
            64,
            4,
        ),
        _ => return None,
    })
}

fn assemble((num, den, npow): (i64, i64, i64), n: u32, z: &Charge, zpow: i32) -> Rational {
    Rational::frac(num, den) * Rational::int(n as i64).powi(npow as i32) / z.value().powi(zpow)
}

/// Closed-form `<r^k>` polynomial for `k` in 1..=4.
///
/// The parabolic `k = 4` entry uses the prefactor `n^4/(64 Z^4)`; see
/// [`parabolic_k4_printed_prefactor`] for the `Z^3` variant.
pub fn table_polynomial(orbital: &Orbital, k: u32, z: &Charge) -> Result<Rational> {
    let (terms, n) = match orbital {
        Orbital::Spherical(o) => (spherical(o, k), o.n()),
        Orbital::Parabolic(o) => (parabolic(o, k), o.n()),
    };
    let terms = terms.ok_or_else(|| Error::Domain(format!("closed forms exist for k in 1..=4, got {k}")))?;
    Ok(assemble(terms, n, z, k as i32))
}

/// Parabolic `k = 4` entry with the prefactor `n^4/(64 Z^3)` as usually
/// printed. Off by a factor `Z` from the true moment.
pub fn parabolic_k4_printed_prefactor(orb: &ParabolicOrbital, z: &Charge) -> Rational {
    assemble(parabolic(orb, 4).expect("k = 4 tabulated"), orb.n(), z, 3)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let h = Charge::hydrogen();
        let s = Orbital::Spherical(SphericalOrbital::new(2, 1).unwrap());
        assert_eq!(table_polynomial(&s, 3, &h).unwrap(), Rational::int(210));
        assert_eq!(table_polynomial(&s, 4, &h).unwrap(), Rational::int(1680));
        let p = ParabolicOrbital::from_electric(2, 0, 1).unwrap();
        assert_eq!(table_polynomial(&Orbital::Parabolic(p), 3, &h).unwrap(), Rational::int(210));
        assert_eq!(table_polynomial(&Orbital::Parabolic(p), 4, &h).unwrap(), Rational::int(1680));
        assert!(table_polynomial(&s, 5, &h).is_err());

        let z = Charge::new(Rational::int(2)).unwrap();
        assert_eq!(parabolic_k4_printed_prefactor(&p, &z), Rational::int(1680 * 2) / Rational::int(16));
        assert_eq!(table_polynomial(&Orbital::Parabolic(p), 4, &z).unwrap(), Rational::int(105));
    }
}
