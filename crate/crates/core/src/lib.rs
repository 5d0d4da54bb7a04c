//! Exact angular-momentum coupling coefficients, `[j(j+1)]^k`-weighted
//! 3jm sum rules, and hydrogenic radial moments in spherical and parabolic
//! coordinates.
//!
//! Every quantity is computed in exact arithmetic: [`Rational`] for
//! rational values and [`SqrtRational`] for coupling coefficients, whose
//! squares are always rational.

pub mod error;
pub mod exact;
pub mod hydrogenic;
pub mod sumrule;
pub mod verify;
pub mod wigner;

pub use error::{Error, Result};
pub use exact::{HalfInt, Integer, Rational, RationalExt, SqrtRational};
