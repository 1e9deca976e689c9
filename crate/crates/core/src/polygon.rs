//! Planar realization of an angle/edge pair.

use crate::oracle::edge_headings;
use crate::tuple::{AngleTuple, EdgeTuple};

/// Vertices `[A, B, C, D]` of a walked quadrangle, D at the origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanarPolygon {
    pub vertices: [[f64; 2]; 4],
    /// Distance between the end of the walk and its start.
    pub closure_gap: f64,
}

impl PlanarPolygon {
    /// Lengths of DA, AB, BC, CD measured on the vertices.
    pub fn edge_lengths(&self) -> [f64; 4] {
        let v = &self.vertices;
        std::array::from_fn(|i| {
            let (p, q) = (v[(i + 3) % 4], v[i]);
            (q[0] - p[0]).hypot(q[1] - p[1])
        })
    }

    /// Interior angles at A, B, C, D measured on the vertices.
    pub fn interior_angles(&self) -> [f64; 4] {
        let v = &self.vertices;
        std::array::from_fn(|i| {
            let (p, c, n) = (v[(i + 3) % 4], v[i], v[(i + 1) % 4]);
            let u = [p[0] - c[0], p[1] - c[1]];
            let w = [n[0] - c[0], n[1] - c[1]];
            let cross = u[0] * w[1] - u[1] * w[0];
            let dot = u[0] * w[0] + u[1] * w[1];
            cross.abs().atan2(dot)
        })
    }
}

/// Walk from the origin along DA (heading 0), turning left by `π - angle`
/// at A, B and C.
pub fn realize_polygon(q: &AngleTuple, e: &EdgeTuple) -> PlanarPolygon {
    let headings = edge_headings(q);
    let lengths = e.as_array();
    let mut pos = [0.0, 0.0];
    let mut walk = [[0.0; 2]; 4];
    for i in 0..4 {
        pos[0] += lengths[i] * headings[i].cos();
        pos[1] += lengths[i] * headings[i].sin();
        walk[i] = pos;
    }
    PlanarPolygon {
        vertices: [walk[0], walk[1], walk[2], [0.0, 0.0]],
        closure_gap: walk[3][0].hypot(walk[3][1]),
    }
}
