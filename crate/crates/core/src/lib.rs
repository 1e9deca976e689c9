//! Balanced convex quadrangles and the dynamical system that turns the edge
//! lengths of one balanced quadrangle into the angles of the next.
//!
//! All quadrangles have perimeter 2π, so edge lengths and angles live in the
//! same numeric range and the map is well defined on angle 4-tuples.

// `!(x > lo)` style checks are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod balanced;
pub mod dynamics;
pub mod error;
pub mod oracle;
pub mod polygon;
pub mod solvers;
pub mod trapezoid;
pub mod tuple;

pub use balanced::{
    balanced_edges, balanced_edges_canonical, degenerate_edges_first, degenerate_edges_second,
    prop1_fractions,
};
pub use dynamics::{
    dihedral_distance, iterate, step, step_n, Classification, CycleInfo, Trajectory,
};
pub use error::{Error, Result};
pub use oracle::{balanced_edges_oracle, FeasibleSegment};
pub use polygon::{realize_polygon, PlanarPolygon};
pub use trapezoid::{c_map, c_map_extended, trapezoid_angles, trapezoid_edges, TrapezoidParam};
pub use tuple::{
    canonicalize, reflect_labels_angles, reflect_labels_edges, renormalize_sum, rotate_labels,
    validate_angles, AngleTuple, CanonicalLabeling, EdgeTuple, SUM_TOL,
};
