//! The invariant family of isosceles trapezoids and its one-dimensional
//! return map.
//!
//! A trapezoid with angles `(a, π − a, π − a, a)` is mapped by the square of
//! the dynamics to the trapezoid with base angle `c(a)`.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};
use crate::tuple::{AngleTuple, EdgeTuple};

/// A base angle and its image under the return map.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrapezoidParam {
    pub a: f64,
    pub c: f64,
}

impl TrapezoidParam {
    pub fn new(a: f64) -> Result<Self> {
        Ok(Self { a, c: c_map(a)? })
    }
}

fn check_base_angle(a: f64) -> Result<()> {
    if !(a > 0.0 && a <= FRAC_PI_2) {
        return Err(Error::Domain(format!("base angle {a} not in (0, pi/2]")));
    }
    Ok(())
}

fn c_formula(a: f64) -> f64 {
    let s = PI / (2.0 + 2.0 * a.cos());
    PI / (1.0 + s.sin() + s.cos())
}

/// `c(a) = π / (1 + sin s + cos s)` with `s = π / (2 + 2 cos a)`.
pub fn c_map(a: f64) -> Result<f64> {
    check_base_angle(a)?;
    Ok(c_formula(a))
}

/// Like [`c_map`] but also accepts `a = 0`, where it returns the one-sided
/// limit `π / (√2 + 1)`.
pub fn c_map_extended(a: f64) -> Result<f64> {
    if a == 0.0 {
        return Ok(c_formula(0.0));
    }
    c_map(a)
}

/// Edge lengths `(s, π/2, s, π/2 + π cos a / (1 + cos a))` with
/// `s = π / (2 + 2 cos a)`.
pub fn trapezoid_edges(a: f64) -> Result<EdgeTuple> {
    check_base_angle(a)?;
    let cos_a = a.cos();
    let side = PI / (2.0 + 2.0 * cos_a);
    Ok(EdgeTuple::from_parts(
        [
            side,
            FRAC_PI_2,
            side,
            FRAC_PI_2 + PI * cos_a / (1.0 + cos_a),
        ],
        false,
    ))
}

/// The trapezoid angle tuple `(a, π − a, π − a, a)`.
pub fn trapezoid_angles(a: f64) -> Result<AngleTuple> {
    check_base_angle(a)?;
    AngleTuple::new([a, PI - a, PI - a, a])
}
