//! Edge lengths of the balanced quadrangle with prescribed angles.
//!
//! With canonical labels (δ + α ≤ π, γ + δ ≤ π) the family of quadrangles of
//! perimeter 2π with angles (α, β, γ, δ) degenerates at one end to the
//! triangle A'CD (edge BC collapsed) and at the other to the triangle BCD'
//! (edge AB collapsed). The balanced quadrangle is the average of the two.

use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::tuple::{canonicalize, AngleTuple, CanonicalLabeling, EdgeTuple, SUM_TOL};

fn check_pair(name: &str, first: f64, second: f64) -> Result<()> {
    for v in [first, second] {
        if !(v > 0.0 && v < PI) {
            return Err(Error::Domain(format!("{name}: angle {v} not in (0, pi)")));
        }
    }
    if first + second > PI + SUM_TOL {
        return Err(Error::Domain(format!(
            "{name}: angle pair sum {} exceeds pi",
            first + second
        )));
    }
    Ok(())
}

/// Edges `(x1', x2', 0, x4')` of the triangle A'CD with angles α at A' and
/// δ at D.
pub fn degenerate_edges_first(alpha: f64, delta: f64) -> Result<EdgeTuple> {
    check_pair("degenerate_edges_first", alpha, delta)?;
    let (sa, sd, sad) = (alpha.sin(), delta.sin(), (alpha + delta).sin());
    let scale = TAU / (sa + sd + sad);
    Ok(EdgeTuple::from_parts(
        [scale * sad, scale * sd, 0.0, scale * sa],
        true,
    ))
}

/// Edges `(x1'', 0, x3'', x4'')` of the triangle BCD' with angles γ at C and
/// δ at D'.
pub fn degenerate_edges_second(gamma: f64, delta: f64) -> Result<EdgeTuple> {
    check_pair("degenerate_edges_second", gamma, delta)?;
    let (sg, sd, sgd) = (gamma.sin(), delta.sin(), (gamma + delta).sin());
    let scale = TAU / (sg + sd + sgd);
    Ok(EdgeTuple::from_parts(
        [scale * sg, 0.0, scale * sd, scale * sgd],
        true,
    ))
}

/// Balanced edges in the canonical labeling, together with that labeling.
pub fn balanced_edges_canonical(q: &AngleTuple) -> (CanonicalLabeling, EdgeTuple) {
    let canon = canonicalize(q);
    let r = canon.rotated;
    // Canonical labels satisfy both pair-sum preconditions up to SUM_TOL.
    let first = degenerate_edges_first(r.alpha(), r.delta())
        .expect("canonical labeling satisfies delta + alpha <= pi");
    let second = degenerate_edges_second(r.gamma(), r.delta())
        .expect("canonical labeling satisfies gamma + delta <= pi");
    let (a, b) = (first.as_array(), second.as_array());
    let mid = std::array::from_fn(|i| 0.5 * (a[i] + b[i]));
    (canon, EdgeTuple::from_parts(mid, false))
}

/// Edge lengths of the balanced quadrangle with angles `q`, labeled like `q`.
pub fn balanced_edges(q: &AngleTuple) -> EdgeTuple {
    let (canon, edges) = balanced_edges_canonical(q);
    canon.restore_edges(&edges)
}

/// The two fractions `sin φ / S` and `sin(φ + ψ) / S` with
/// `S = sin φ + sin ψ + sin(φ + ψ)`; both stay below 1/2 whenever
/// φ, ψ > 0 and φ + ψ < π.
pub fn prop1_fractions(phi: f64, psi: f64) -> (f64, f64) {
    let s = phi.sin() + psi.sin() + (phi + psi).sin();
    (phi.sin() / s, (phi + psi).sin() / s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn law_of_sines(angles: [f64; 3]) -> [f64; 3] {
        let s: f64 = angles.iter().map(|a| a.sin()).sum();
        angles.map(|a| TAU * a.sin() / s)
    }

    #[test]
    fn first_triangle_equilateral() {
        let e = degenerate_edges_first(PI / 3.0, PI / 3.0)
            .unwrap()
            .as_array();
        for (got, want) in e
            .iter()
            .zip([2.0 * PI / 3.0, 2.0 * PI / 3.0, 0.0, 2.0 * PI / 3.0])
        {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-12);
        }
    }

    #[test]
    fn first_triangle_right_angle_limit() {
        let e = degenerate_edges_first(PI / 2.0, PI / 2.0).unwrap();
        assert!(e.is_degenerate());
        for (got, want) in e.as_array().iter().zip([0.0, PI, 0.0, PI]) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-12);
        }
    }

    #[test]
    fn first_triangle_matches_law_of_sines() {
        let e = degenerate_edges_first(PI / 2.0, PI / 3.0)
            .unwrap()
            .as_array();
        // Triangle with angles pi/2 at A', pi/3 at D and pi/6 at C; the side
        // DA' faces C, A'C faces D, CD faces A'.
        let [da, ac, cd] = law_of_sines([PI / 6.0, PI / 3.0, PI / 2.0]);
        assert_abs_diff_eq!(e[0], da, epsilon = 1e-12);
        assert_abs_diff_eq!(e[1], ac, epsilon = 1e-12);
        assert_abs_diff_eq!(e[3], cd, epsilon = 1e-12);
        assert_abs_diff_eq!(e[0], 1.32781, epsilon = 1e-4);
        assert_abs_diff_eq!(e[1], 2.29984, epsilon = 1e-4);
        assert_abs_diff_eq!(e[3], 2.65562, epsilon = 1e-4);
    }

    #[test]
    fn second_triangle_examples() {
        let e = degenerate_edges_second(PI / 3.0, PI / 3.0)
            .unwrap()
            .as_array();
        for (got, want) in e
            .iter()
            .zip([2.0 * PI / 3.0, 0.0, 2.0 * PI / 3.0, 2.0 * PI / 3.0])
        {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-12);
        }
        let e = degenerate_edges_second(PI - 1.0, 1.0).unwrap().as_array();
        for (got, want) in e.iter().zip([PI, 0.0, PI, 0.0]) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-12);
        }
        let e = degenerate_edges_second(PI / 2.0, PI / 3.0)
            .unwrap()
            .as_array();
        assert_abs_diff_eq!(e[0], 2.65562, epsilon = 1e-4);
        assert_abs_diff_eq!(e[2], 2.29984, epsilon = 1e-4);
        assert_abs_diff_eq!(e[3], 1.32781, epsilon = 1e-4);
    }

    #[test]
    fn obtuse_pairs_are_rejected() {
        assert!(matches!(
            degenerate_edges_first(2.0, 2.0),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            degenerate_edges_second(1.5, 1.8),
            Err(Error::Domain(_))
        ));
        assert!(degenerate_edges_first(0.0, 1.0).is_err());
    }

    #[test]
    fn square_is_balanced_square() {
        let e = balanced_edges(&AngleTuple::square());
        for x in e.as_array() {
            assert_abs_diff_eq!(x, PI / 2.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn trapezoid_at_third_pi() {
        let q = AngleTuple::new([PI / 3.0, 2.0 * PI / 3.0, 2.0 * PI / 3.0, PI / 3.0]).unwrap();
        let e = balanced_edges(&q).as_array();
        let want = [5.0 * PI / 6.0, PI / 3.0, PI / 2.0, PI / 3.0];
        for (got, want) in e.iter().zip(want) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-12);
        }
    }

    #[test]
    fn output_is_labeled_like_input() {
        let q = AngleTuple::new([2.0, 2.0, 1.0, TAU - 5.0]).unwrap();
        let (canon, canonical_edges) = balanced_edges_canonical(&q);
        assert_eq!(canon.rotation_offset, 3);
        let e = balanced_edges(&q);
        assert_eq!(e.rotated(3), canonical_edges);
    }

    #[test]
    fn prop1_boundary_values() {
        let (a, b) = prop1_fractions(1.0, 1.0);
        assert!(a < 0.5 && b < 0.5);
        // psi -> 0 gives the first fraction -> 1/2.
        let (a, _) = prop1_fractions(1.0, 1e-9);
        assert_abs_diff_eq!(a, 0.5, epsilon = 1e-8);
    }
}
