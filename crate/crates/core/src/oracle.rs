//! Balanced edges computed directly from the closure equations.
//!
//! This path never touches the triangle formulas: it solves the linear system
//! `Σ xᵢ uᵢ = 0, Σ xᵢ = 2π` for the unit edge headings `uᵢ`, clips the
//! resulting line to the nonnegative orthant and takes the midpoint.

use std::f64::consts::{PI, TAU};

use nalgebra::{Matrix3, Matrix3x4, Vector3, Vector4};

use crate::error::{Error, Result};
use crate::tuple::{AngleTuple, EdgeTuple};

/// Headings of edges DA, AB, BC, CD when DA points along the x axis and the
/// walk turns left by the exterior angle at each vertex.
pub fn edge_headings(q: &AngleTuple) -> [f64; 4] {
    let [a, b, c, _] = q.as_array();
    let h2 = PI - a;
    let h3 = h2 + PI - b;
    let h4 = h3 + PI - c;
    [0.0, h2, h3, h4]
}

/// The segment of edge tuples closing a quadrangle with fixed angles,
/// parametrized as `base + t * direction` for `t` in `[t_min, t_max]`.
///
/// `base` is the endpoint at `t_min = 0`; `direction` has unit length and
/// zero component sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FeasibleSegment {
    pub base: EdgeTuple,
    pub direction: [f64; 4],
    pub t_min: f64,
    pub t_max: f64,
}

impl FeasibleSegment {
    pub fn point(&self, t: f64) -> [f64; 4] {
        let b = self.base.as_array();
        std::array::from_fn(|i| b[i] + t * self.direction[i])
    }

    pub fn endpoints(&self) -> ([f64; 4], [f64; 4]) {
        (self.point(self.t_min), self.point(self.t_max))
    }

    pub fn midpoint(&self) -> [f64; 4] {
        self.point(0.5 * (self.t_min + self.t_max))
    }

    pub fn length(&self) -> f64 {
        self.t_max - self.t_min
    }
}

fn closure_matrix(q: &AngleTuple) -> Matrix3x4<f64> {
    let h = edge_headings(q);
    Matrix3x4::from_fn(|r, c| match r {
        0 => h[c].cos(),
        1 => h[c].sin(),
        _ => 1.0,
    })
}

/// Null vector of a 3×4 matrix by signed 3×3 cofactors.
fn null_vector(m: &Matrix3x4<f64>) -> Vector4<f64> {
    Vector4::from_fn(|j, _| {
        let cols: Vec<usize> = (0..4).filter(|&c| c != j).collect();
        let minor = Matrix3::from_fn(|r, c| m[(r, cols[c])]);
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        sign * minor.determinant()
    })
}

/// Midpoint of the feasible segment, and the segment itself.
pub fn balanced_edges_oracle(q: &AngleTuple) -> Result<(EdgeTuple, FeasibleSegment)> {
    let a = closure_matrix(q);
    let dir = null_vector(&a);
    let norm = dir.norm();
    if !(norm > 1e-12) {
        return Err(Error::DegenerateFamily);
    }
    let dir = dir / norm;

    // Least-norm particular solution x = Aᵀ (A Aᵀ)⁻¹ b.
    let rhs = Vector3::new(0.0, 0.0, TAU);
    let gram = a * a.transpose();
    let y = gram.lu().solve(&rhs).ok_or(Error::DegenerateFamily)?;
    let particular = a.transpose() * y;

    let mut lo = f64::NEG_INFINITY;
    let mut hi = f64::INFINITY;
    for i in 0..4 {
        if dir[i] > 0.0 {
            lo = lo.max(-particular[i] / dir[i]);
        } else if dir[i] < 0.0 {
            hi = hi.min(-particular[i] / dir[i]);
        } else if particular[i] < 0.0 {
            return Err(Error::DegenerateFamily);
        }
    }
    if !(lo.is_finite() && hi.is_finite() && hi > lo) {
        return Err(Error::DegenerateFamily);
    }

    let start: [f64; 4] = std::array::from_fn(|i| (particular[i] + lo * dir[i]).max(0.0));
    let segment = FeasibleSegment {
        base: EdgeTuple::from_parts(start, true),
        direction: std::array::from_fn(|i| dir[i]),
        t_min: 0.0,
        t_max: hi - lo,
    };
    let mid = EdgeTuple::from_parts(segment.midpoint(), false);
    Ok((mid, segment))
}
