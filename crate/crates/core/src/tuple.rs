//! Angle and edge 4-tuples of a convex quadrangle and their relabelings.
//!
//! Vertices are labeled A, B, C, D counter-clockwise. Angles are stored in
//! vertex order `(alpha, beta, gamma, delta)`; edges are stored as
//! `(x1, x2, x3, x4)` for DA, AB, BC, CD, so edge `i` ends at vertex `i`.
//! This makes a cyclic shift of the vertex labels act identically on both
//! tuples.

use std::f64::consts::{PI, TAU};
use std::fmt;

use crate::error::{Error, Result};

/// Tolerance on the angle and edge sums.
pub const SUM_TOL: f64 = 1e-9;

/// Cyclically shift a 4-tuple: `rotate_labels([1, 2, 3, 4], 1) == [2, 3, 4, 1]`.
pub fn rotate_labels<T: Copy>(t: [T; 4], k: i64) -> [T; 4] {
    let k = k.rem_euclid(4) as usize;
    std::array::from_fn(|i| t[(i + k) % 4])
}

/// Rescale a tuple so that its components sum to 2π.
///
/// Validation never does this implicitly; sampling pipelines and loosely
/// typed command-line input call it explicitly.
pub fn renormalize_sum(raw: [f64; 4]) -> [f64; 4] {
    let sum: f64 = raw.iter().sum();
    raw.map(|x| x * TAU / sum)
}

pub(crate) fn sup_distance(a: &[f64; 4], b: &[f64; 4]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

fn check_sum(raw: &[f64; 4]) -> Result<()> {
    let sum: f64 = raw.iter().sum();
    if (sum - TAU).abs() > SUM_TOL || !sum.is_finite() {
        return Err(Error::SumMismatch { sum, tol: SUM_TOL });
    }
    Ok(())
}

/// Interior angles of a convex quadrangle with total 2π.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleTuple([f64; 4]);

impl AngleTuple {
    /// Validate raw angles; see [`validate_angles`].
    pub fn new(raw: [f64; 4]) -> Result<Self> {
        for (index, &value) in raw.iter().enumerate() {
            if !(value > 0.0 && value < PI) {
                return Err(Error::OutOfRange { index, value });
            }
        }
        check_sum(&raw)?;
        Ok(Self(raw))
    }

    pub fn square() -> Self {
        Self([PI / 2.0; 4])
    }

    pub fn alpha(&self) -> f64 {
        self.0[0]
    }

    pub fn beta(&self) -> f64 {
        self.0[1]
    }

    pub fn gamma(&self) -> f64 {
        self.0[2]
    }

    pub fn delta(&self) -> f64 {
        self.0[3]
    }

    pub fn as_array(&self) -> [f64; 4] {
        self.0
    }

    /// Relabel so that vertex `k` becomes A.
    pub fn rotated(&self, k: i64) -> Self {
        Self(rotate_labels(self.0, k))
    }

    /// Mirror relabeling `(α, β, γ, δ) ↦ (α, δ, γ, β)`.
    pub fn reflected(&self) -> Self {
        let [a, b, c, d] = self.0;
        Self([a, d, c, b])
    }

    /// The 8 relabelings under the dihedral group: rotations 0..4, then
    /// rotations of the reflected tuple.
    pub fn dihedral_images(&self) -> [AngleTuple; 8] {
        let mirrored = self.reflected();
        std::array::from_fn(|i| {
            if i < 4 {
                self.rotated(i as i64)
            } else {
                mirrored.rotated(i as i64 - 4)
            }
        })
    }

    /// Sup-norm distance in labeled coordinates.
    pub fn sup_distance(&self, other: &AngleTuple) -> f64 {
        sup_distance(&self.0, &other.0)
    }
}

impl fmt::Display for AngleTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "({a}, {b}, {c}, {d})")
    }
}

/// Checks that every angle is in (0, π) and that they sum to 2π within
/// [`SUM_TOL`]. Never renormalizes.
pub fn validate_angles(raw: [f64; 4]) -> Result<AngleTuple> {
    AngleTuple::new(raw)
}

pub fn reflect_labels_angles(q: &AngleTuple) -> AngleTuple {
    q.reflected()
}

pub fn reflect_labels_edges(e: &EdgeTuple) -> EdgeTuple {
    e.reflected()
}

/// Edge lengths `(x1, x2, x3, x4)` of DA, AB, BC, CD with perimeter 2π.
///
/// A tuple produced by one of the degenerate-triangle constructors may carry
/// zero components (and, in limit cases, a component equal to π); such tuples
/// are flagged by [`EdgeTuple::is_degenerate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgeTuple {
    lengths: [f64; 4],
    degenerate: bool,
}

impl EdgeTuple {
    /// Validate the edge lengths of a proper quadrangle: components in (0, π),
    /// sum 2π.
    pub fn new(raw: [f64; 4]) -> Result<Self> {
        for (index, &value) in raw.iter().enumerate() {
            if !(value > 0.0 && value < PI) {
                return Err(Error::OutOfRange { index, value });
            }
        }
        check_sum(&raw)?;
        Ok(Self {
            lengths: raw,
            degenerate: false,
        })
    }

    pub(crate) fn from_parts(lengths: [f64; 4], degenerate: bool) -> Self {
        debug_assert!((lengths.iter().sum::<f64>() - TAU).abs() <= SUM_TOL);
        Self {
            lengths,
            degenerate,
        }
    }

    pub fn as_array(&self) -> [f64; 4] {
        self.lengths
    }

    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    pub fn sum(&self) -> f64 {
        self.lengths.iter().sum()
    }

    pub fn rotated(&self, k: i64) -> Self {
        Self {
            lengths: rotate_labels(self.lengths, k),
            degenerate: self.degenerate,
        }
    }

    /// Edge relabeling induced by [`AngleTuple::reflected`]:
    /// `(x1, x2, x3, x4) ↦ (x2, x1, x4, x3)`.
    pub fn reflected(&self) -> Self {
        let [x1, x2, x3, x4] = self.lengths;
        Self {
            lengths: [x2, x1, x4, x3],
            degenerate: self.degenerate,
        }
    }

    pub fn sup_distance(&self, other: &EdgeTuple) -> f64 {
        sup_distance(&self.lengths, &other.lengths)
    }
}

/// A cyclic relabeling placing D at a vertex whose two adjacent angle-pair
/// sums are at most π.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CanonicalLabeling {
    pub rotation_offset: usize,
    pub rotated: AngleTuple,
}

impl CanonicalLabeling {
    /// Map a tuple labeled canonically back to the original labels.
    pub fn restore_edges(&self, e: &EdgeTuple) -> EdgeTuple {
        e.rotated(-(self.rotation_offset as i64))
    }
}

/// Smallest rotation `r` with `δ + α ≤ π` and `γ + δ ≤ π` (within
/// [`SUM_TOL`]) after relabeling.
pub fn canonicalize(q: &AngleTuple) -> CanonicalLabeling {
    let admissible = |t: &AngleTuple| {
        t.delta() + t.alpha() <= PI + SUM_TOL && t.gamma() + t.delta() <= PI + SUM_TOL
    };
    // Adjacent pair sums satisfy s1 + s3 = s2 + s4 = 2π, so some vertex
    // always qualifies; the fallback only absorbs rounding.
    let excess = |t: &AngleTuple| (t.delta() + t.alpha()).max(t.gamma() + t.delta());
    let rotation_offset = (0..4)
        .find(|&r| admissible(&q.rotated(r as i64)))
        .unwrap_or_else(|| {
            (0..4)
                .min_by(|&a, &b| {
                    excess(&q.rotated(a as i64)).total_cmp(&excess(&q.rotated(b as i64)))
                })
                .unwrap_or(0)
        });
    CanonicalLabeling {
        rotation_offset,
        rotated: q.rotated(rotation_offset as i64),
    }
}
