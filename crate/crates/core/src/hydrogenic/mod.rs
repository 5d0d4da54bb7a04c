//! Hydrogenic expectation values `<r^p>` in spherical `|n l>` and parabolic
//! `|n n1 n2 m>` states, and the Clebsch-Gordan basis change linking them.
//!
//! Everything is exact in the nuclear charge `Z`. Parabolic `xi`/`eta`
//! moments carry a common irrational factor `sqrt(Z/pi)/n` which is kept
//! symbolic (see [`XiMomentCoefficient`]); it cancels in `<r^p>`.

mod basis;
mod parabolic;
mod quasiclassical;
mod spherical;
mod tables;

use std::fmt;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exact::Rational;

pub use basis::{
    cg_spherical_parabolic, expval_parabolic_via_basis_change, l2_parabolic_n1n2_form,
    l2_parabolic_quadratic_form, l2k_parabolic, l2k_parabolic_bruteforce, l4_parabolic_conjectured,
    l4_parabolic_printed,
};
pub use parabolic::{expval_parabolic, xi_moment, xi_moments, XiMomentCoefficient};
pub use quasiclassical::{quasiclassical_probability, quasiclassical_probability_m0, turning_points};
pub use spherical::{expval_spherical, expval_spherical_negative, marxer_reflect};
pub use tables::{parabolic_k4_printed_prefactor, table_polynomial, Orbital};

/// Which of two independent formulas to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Method {
    /// Three-term recurrence in the power.
    #[default]
    Recurrence,
    /// Closed finite sum.
    Explicit,
}

/// Bound state `|n l>` with `0 <= l <= n - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SphericalOrbital {
    n: u32,
    l: u32,
}

impl SphericalOrbital {
    pub fn new(n: u32, l: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("principal quantum number n must be positive".into()));
        }
        if l >= n {
            return Err(Error::Domain(format!("orbital quantum number l = {l} must satisfy l <= n - 1 = {}", n - 1)));
        }
        Ok(SphericalOrbital { n, l })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn l(&self) -> u32 {
        self.l
    }
}

impl fmt::Display for SphericalOrbital {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|n={} l={}>", self.n, self.l)
    }
}

/// Parabolic state `|n n1 n2 m>` with `n = n1 + n2 + |m| + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ParabolicOrbital {
    n: u32,
    n1: u32,
    n2: u32,
    m: i32,
}

impl ParabolicOrbital {
    /// From the parabolic quantum numbers; `n` follows.
    pub fn from_parabolic(n1: u32, n2: u32, m: i32) -> Self {
        ParabolicOrbital { n: n1 + n2 + m.unsigned_abs() + 1, n1, n2, m }
    }

    /// From all four numbers, checking `n = n1 + n2 + |m| + 1`.
    pub fn new(n: u32, n1: u32, n2: u32, m: i32) -> Result<Self> {
        let o = Self::from_parabolic(n1, n2, m);
        if o.n != n {
            return Err(Error::Domain(format!(
                "n = n1 + n2 + |m| + 1 violated: {n} != {n1} + {n2} + {} + 1",
                m.unsigned_abs()
            )));
        }
        Ok(o)
    }

    /// From `n`, the electric quantum number `q = n1 - n2` and `m`.
    pub fn from_electric(n: u32, q: i32, m: i32) -> Result<Self> {
        let span = n as i64 - 1 - m.unsigned_abs() as i64;
        if n == 0 || span < 0 {
            return Err(Error::Domain(format!("|m| = {} must satisfy |m| <= n - 1 (n = {n})", m.unsigned_abs())));
        }
        let q64 = q as i64;
        if q64.abs() > span {
            return Err(Error::Domain(format!("|q| = {} must satisfy |q| <= n - 1 - |m| = {span}", q64.abs())));
        }
        if (span - q64) % 2 != 0 {
            return Err(Error::Domain(format!("q = {q} must have the parity of n - 1 - |m| = {span}")));
        }
        Ok(ParabolicOrbital {
            n,
            n1: ((span + q64) / 2) as u32,
            n2: ((span - q64) / 2) as u32,
            m,
        })
    }

    /// Every state of the shell `n`, ordered by `m` then `n1`.
    pub fn shell(n: u32) -> Vec<Self> {
        let top = n as i32 - 1;
        (-top..=top)
            .flat_map(|m| {
                let span = (n - 1) - m.unsigned_abs();
                (0..=span).map(move |n1| ParabolicOrbital::from_parabolic(n1, span - n1, m))
            })
            .collect()
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn n1(&self) -> u32 {
        self.n1
    }

    pub fn n2(&self) -> u32 {
        self.n2
    }

    pub fn m(&self) -> i32 {
        self.m
    }

    /// Electric quantum number `q = n1 - n2`.
    pub fn q(&self) -> i32 {
        self.n1 as i32 - self.n2 as i32
    }
}

impl fmt::Display for ParabolicOrbital {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|n={} n1={} n2={} m={}>", self.n, self.n1, self.n2, self.m)
    }
}

/// Nuclear charge `Z > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Charge(Rational);

impl Charge {
    pub fn new(z: Rational) -> Result<Self> {
        if !z.is_positive() {
            return Err(Error::Domain(format!("nuclear charge Z = {z} must be positive")));
        }
        Ok(Charge(z))
    }

    pub fn hydrogen() -> Self {
        Charge(Rational::from_integer(1.into()))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }
}

impl TryFrom<Rational> for Charge {
    type Error = Error;
    fn try_from(z: Rational) -> Result<Self> {
        Charge::new(z)
    }
}
