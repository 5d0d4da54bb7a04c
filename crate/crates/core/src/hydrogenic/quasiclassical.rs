use std::f64::consts::PI;

use super::ParabolicOrbital;
use crate::error::{Error, Result};

/// Turning points `(l_min^2, l_max^2)` of the quasi-classical distribution.
pub fn turning_points(n: u32, m: u32, q: i32) -> (f64, f64) {
    let nn = (n as f64 - 1.0).powi(2);
    let mm = (m as f64).powi(2);
    let s = nn + mm - (q as f64).powi(2);
    let root = (s * s - 4.0 * nn * mm).max(0.0).sqrt();
    ((s - root) / 2.0, (s + root) / 2.0)
}

/// Large-`n` estimate of `|<n q m|n l m>|^2`:
/// `2 l / (pi sqrt((l^2 - l_min^2)(l_max^2 - l^2)))`.
pub fn quasiclassical_probability(n: u32, m: u32, q: i32, l: u32) -> Result<f64> {
    ParabolicOrbital::from_electric(n, q, m as i32)?;
    let (lo, hi) = turning_points(n, m, q);
    let l = l as f64;
    let l2 = l * l;
    if !(l2 > lo && l2 < hi) {
        return Err(Error::Domain(format!(
            "l^2 = {l2} outside the classically allowed interval ({lo}, {hi})"
        )));
    }
    Ok(2.0 * l / (PI * ((l2 - lo) * (hi - l2)).sqrt()))
}

/// `m = 0` limit for `l << n`, independent of `l`:
/// `2 / (pi sqrt((n-1)^2 - q^2))`.
pub fn quasiclassical_probability_m0(n: u32, q: i32) -> Result<f64> {
    ParabolicOrbital::from_electric(n, q, 0)?;
    let d = (n as f64 - 1.0).powi(2) - (q as f64).powi(2);
    if d <= 0.0 {
        return Err(Error::Domain(format!("|q| = {} leaves no allowed l for n = {n}", q.abs())));
    }
    Ok(2.0 / (PI * d.sqrt()))
}
