//! Exact scalars: arbitrary-precision rationals, signed square roots of
//! rationals, half-integers, and the combinatorial primitives built on them.

mod combinatorics;
mod halfint;
mod rational;
mod sqrt_rational;

pub use combinatorics::{binomial, extended_binomial, factorial, factorial_u, pochhammer, FACTORIAL_CACHE_ENV};
pub use halfint::HalfInt;
pub use rational::{checked_div, parse_rational, rational_sqrt, Integer, Rational, RationalExt};
pub use sqrt_rational::SqrtRational;
