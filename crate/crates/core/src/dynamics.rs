//! The edge-to-angle map on balanced quadrangles and its orbits.

use std::fmt;

use crate::balanced::balanced_edges;
use crate::error::{Error, Result};
use crate::trapezoid::trapezoid_angles;
use crate::tuple::AngleTuple;

/// Longest period searched for by [`iterate`].
pub const MAX_PERIOD: usize = 8;
/// Consecutive recurrences needed before a period is accepted.
pub const CONFIRMATIONS: usize = 3;
/// Default recurrence tolerance for cycle detection.
pub const DETECTION_TOL: f64 = 1e-12;
/// Dihedral distance under which a cycle is matched to a known limit set.
pub const MATCH_TOL: f64 = 1e-6;

/// Attracting fixed point of the trapezoid return map, to double precision.
pub const TRAPEZOID_FIXED_POINT: f64 = 1.483_421_587_693_779_5;

/// Angles `(α, β, γ, δ)` of one element of the generic attracting 2-cycle,
/// to double precision.
pub const CYCLE_ANGLES: [f64; 4] = [
    1.548_193_052_486_692_3,
    1.824_051_885_127_593,
    1.415_159_530_313_509_1,
    1.495_780_839_251_792_1,
];

/// One application of the map: the new angles at A, B, C, D are the balanced
/// edge lengths DA, AB, BC, CD.
pub fn step(q: &AngleTuple) -> Result<AngleTuple> {
    AngleTuple::new(balanced_edges(q).as_array())
}

/// `n` applications of [`step`].
pub fn step_n(q: &AngleTuple, n: usize) -> Result<AngleTuple> {
    (0..n).try_fold(*q, |s, _| step(&s))
}

/// Minimum sup-norm distance between `p` and the 8 dihedral relabelings of `q`.
pub fn dihedral_distance(p: &AngleTuple, q: &AngleTuple) -> f64 {
    q.dihedral_images()
        .iter()
        .map(|g| p.sup_distance(g))
        .fold(f64::INFINITY, f64::min)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Classification {
    SquareFixed,
    Trapezoid2Cycle,
    General2Cycle,
    OtherCycle,
    NoConvergence,
}

impl Classification {
    pub const ALL: [Classification; 5] = [
        Classification::General2Cycle,
        Classification::Trapezoid2Cycle,
        Classification::SquareFixed,
        Classification::OtherCycle,
        Classification::NoConvergence,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Classification::SquareFixed => "square_fixed",
            Classification::Trapezoid2Cycle => "trapezoid_2cycle",
            Classification::General2Cycle => "general_2cycle",
            Classification::OtherCycle => "other_cycle",
            Classification::NoConvergence => "no_convergence",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A known limit set: its period and one labeled representative per element.
#[derive(Debug, Clone)]
pub struct LimitSet {
    pub classification: Classification,
    pub period: usize,
    pub states: Vec<AngleTuple>,
}

impl LimitSet {
    /// Largest distance from a cycle representative to its nearest element.
    pub fn match_distance(&self, reps: &[AngleTuple]) -> f64 {
        reps.iter()
            .map(|r| {
                self.states
                    .iter()
                    .map(|s| dihedral_distance(r, s))
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max)
    }
}

/// The square, the trapezoid 2-cycle and the generic 2-cycle, in
/// classification order.
pub fn known_limit_sets() -> Vec<LimitSet> {
    let square = AngleTuple::square();
    let trapezoid = trapezoid_angles(TRAPEZOID_FIXED_POINT).expect("fixed point is in (0, pi/2]");
    let partner = step(&trapezoid).expect("step preserves validity");
    let general = AngleTuple::new(CYCLE_ANGLES).expect("cycle angles sum to 2*pi");
    vec![
        LimitSet {
            classification: Classification::SquareFixed,
            period: 1,
            states: vec![square],
        },
        LimitSet {
            classification: Classification::Trapezoid2Cycle,
            period: 2,
            states: vec![trapezoid, partner],
        },
        LimitSet {
            classification: Classification::General2Cycle,
            period: 2,
            // The partner is the mirror image, so one state covers both
            // under dihedral matching.
            states: vec![general],
        },
    ]
}

/// A detected periodic orbit.
///
/// States are compared up to cyclic relabeling of the vertices, i.e. as
/// quadrangles rather than as labeled tuples: two applications of the map
/// shift the labels of a generic 2-cycle by one vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct CycleInfo {
    /// Period up to cyclic relabeling.
    pub period: usize,
    /// `step^period(state) == rotated(state, label_shift)` on the cycle.
    pub label_shift: usize,
    pub representative_states: Vec<AngleTuple>,
    pub classification: Classification,
    /// Recurrence distance at detection.
    pub residual: f64,
    /// Distance to the matched limit set, or to the nearest one when nothing
    /// matched.
    pub match_distance: f64,
}

impl CycleInfo {
    /// Period of the orbit as labeled tuples.
    pub fn label_period(&self) -> usize {
        let turns = match self.label_shift % 4 {
            0 => 1,
            2 => 2,
            _ => 4,
        };
        self.period * turns
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub states: Vec<AngleTuple>,
    /// `residuals[k]` is the sup-norm step `states[k + 1] - states[k]`.
    pub residuals: Vec<f64>,
    pub cycle: Option<CycleInfo>,
}

impl Trajectory {
    pub fn classification(&self) -> Classification {
        self.cycle
            .as_ref()
            .map_or(Classification::NoConvergence, |c| c.classification)
    }

    /// Number of applications of the map performed.
    pub fn iterations(&self) -> usize {
        self.residuals.len()
    }

    pub fn last(&self) -> &AngleTuple {
        self.states
            .last()
            .expect("trajectory holds the initial state")
    }
}

/// Classify a period-`period` orbit through `reps`.
pub fn classify_cycle(period: usize, reps: &[AngleTuple]) -> (Classification, f64) {
    let mut nearest = f64::INFINITY;
    for set in known_limit_sets() {
        let d = set.match_distance(reps);
        if set.period == period && d < MATCH_TOL {
            return (set.classification, d);
        }
        nearest = nearest.min(d);
    }
    (Classification::OtherCycle, nearest)
}

/// Smallest sup-norm distance between `p` and a cyclic relabeling of `q`,
/// with the rotation achieving it.
pub fn rotation_distance(p: &AngleTuple, q: &AngleTuple) -> (f64, usize) {
    (0..4)
        .map(|k| (p.sup_distance(&q.rotated(k as i64)), k))
        .fold(
            (f64::INFINITY, 0),
            |best, cur| if cur.0 < best.0 { cur } else { best },
        )
}

/// Extra structure imposed on every iterate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Constraint {
    #[default]
    None,
    /// Project each state onto the mirror-symmetric quadrangles (isosceles
    /// trapezoids and kites). That set is invariant under the map, but its
    /// 2-cycle repels transversally, so unprojected rounding error would
    /// carry a symmetric seed off it.
    MirrorSymmetric,
}

/// The four vertex reflections `rotate(reflect(q), k)`, `k = 0..4`.
fn reflections(q: &AngleTuple) -> [AngleTuple; 4] {
    let r = q.reflected();
    std::array::from_fn(|k| r.rotated(k as i64))
}

/// Distance from `q` to the nearest mirror-symmetric tuple, measured as the
/// smallest `|q - g(q)|∞` over the four reflections `g`.
pub fn asymmetry(q: &AngleTuple) -> f64 {
    reflections(q)
        .iter()
        .map(|g| q.sup_distance(g))
        .fold(f64::INFINITY, f64::min)
}

/// Average `q` with its image under the reflection that moves it least.
pub fn symmetrize(q: &AngleTuple) -> AngleTuple {
    let images = reflections(q);
    let nearest = images
        .iter()
        .min_by(|a, b| q.sup_distance(a).total_cmp(&q.sup_distance(b)))
        .expect("four reflections");
    let (p, g) = (q.as_array(), nearest.as_array());
    let avg: [f64; 4] = std::array::from_fn(|i| 0.5 * (p[i] + g[i]));
    AngleTuple::new(avg).unwrap_or(*q)
}

/// Iterate the map from `q0` until a cycle of period at most [`MAX_PERIOD`]
/// recurs within `tol` for [`CONFIRMATIONS`] consecutive steps, or until
/// `max_iter` steps were taken.
pub fn iterate(q0: &AngleTuple, max_iter: usize, tol: f64) -> Result<Trajectory> {
    iterate_with(q0, max_iter, tol, Constraint::None)
}

/// [`iterate`] with a [`Constraint`] applied after every step.
pub fn iterate_with(
    q0: &AngleTuple,
    max_iter: usize,
    tol: f64,
    constraint: Constraint,
) -> Result<Trajectory> {
    if max_iter == 0 {
        return Err(Error::InvalidArgument("max_iter must be at least 1".into()));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "tolerance {tol} must be positive"
        )));
    }
    let project = |q: AngleTuple| match constraint {
        Constraint::None => q,
        Constraint::MirrorSymmetric => symmetrize(&q),
    };
    let mut states = vec![project(*q0)];
    let mut residuals = Vec::new();
    let mut streak = [0usize; MAX_PERIOD + 1];

    for n in 1..=max_iter {
        let next = project(step(&states[n - 1])?);
        residuals.push(next.sup_distance(&states[n - 1]));
        states.push(next);

        let mut detected = None;
        for p in 1..=MAX_PERIOD.min(n) {
            let (d, shift) = rotation_distance(&states[n], &states[n - p]);
            if d < tol {
                streak[p] += 1;
            } else {
                streak[p] = 0;
            }
            if detected.is_none() && streak[p] >= CONFIRMATIONS {
                detected = Some((p, shift, d));
            }
        }
        if let Some((period, label_shift, residual)) = detected {
            let reps = states[n + 1 - period..=n].to_vec();
            let (classification, match_distance) = classify_cycle(period, &reps);
            return Ok(Trajectory {
                states,
                residuals,
                cycle: Some(CycleInfo {
                    period,
                    label_shift,
                    representative_states: reps,
                    classification,
                    residual,
                    match_distance,
                }),
            });
        }
    }
    Ok(Trajectory {
        states,
        residuals,
        cycle: None,
    })
}

/// The relabeling that carries `step^n(q)` to `step^n(reflect(q))`.
///
/// Reflection equivariance of the balanced construction sends the vertex
/// reflection `(α, β, γ, δ) ↦ (α, δ, γ, β)` to the edge reflection
/// `(x1, x2, x3, x4) ↦ (x2, x1, x4, x3)`, which is the vertex reflection
/// followed by a backward shift of one label. After `n` steps the shift has
/// accumulated to `n`.
pub fn mirror_relabel(q: &AngleTuple, n: usize) -> AngleTuple {
    q.reflected().rotated(-(n as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trapezoid::c_map;
    use crate::tuple::reflect_labels_angles;
    use std::f64::consts::{FRAC_PI_2, TAU};

    #[test]
    fn square_is_fixed() {
        let sq = AngleTuple::square();
        assert!(step(&sq).unwrap().sup_distance(&sq) < 1e-12);
    }

    #[test]
    fn cycle_point_maps_to_its_mirror() {
        let q = AngleTuple::new(CYCLE_ANGLES).unwrap();
        let image = step(&q).unwrap();
        assert!(image.sup_distance(&reflect_labels_angles(&q)) < 1e-9);
        // Twice around the cycle the labels have moved back by one vertex.
        let twice = step(&image).unwrap();
        assert!(twice.sup_distance(&q.rotated(3)) < 1e-9);
        assert!(twice.sup_distance(&q) > 0.05);
    }

    #[test]
    fn trapezoid_returns_to_trapezoid_family() {
        let q = trapezoid_angles(1.0).unwrap();
        let twice = step_n(&q, 2).unwrap();
        let target = trapezoid_angles(c_map(1.0).unwrap()).unwrap();
        let best = (0..4)
            .map(|r| twice.rotated(r).sup_distance(&target))
            .fold(f64::INFINITY, f64::min);
        assert!(best < 1e-10, "{best}");
    }

    #[test]
    fn iterate_square() {
        let t = iterate(&AngleTuple::square(), 50, DETECTION_TOL).unwrap();
        let cycle = t.cycle.unwrap();
        assert_eq!(cycle.period, 1);
        assert_eq!(cycle.classification, Classification::SquareFixed);
    }

    #[test]
    fn iterate_generic_seed() {
        let q0 = AngleTuple::new([1.2, 2.1, 1.5, TAU - 4.8]).unwrap();
        let t = iterate(&q0, 10_000, 1e-12).unwrap();
        let cycle = t.cycle.expect("converges");
        assert_eq!(cycle.period, 2);
        assert_eq!(cycle.classification, Classification::General2Cycle);
        assert!(cycle.match_distance < 1e-6);
    }

    #[test]
    fn iterate_trapezoid_seed() {
        let seed = trapezoid_angles(1.0).unwrap();
        let t = iterate_with(&seed, 10_000, 1e-12, Constraint::MirrorSymmetric).unwrap();
        let cycle = t.cycle.expect("converges");
        assert_eq!(cycle.period, 2);
        assert_eq!(cycle.classification, Classification::Trapezoid2Cycle);
        assert!(cycle.match_distance < 1e-6);
    }

    #[test]
    fn trapezoid_seed_escapes_without_projection() {
        // The symmetric 2-cycle repels transversally, so rounding error
        // eventually carries the plain iteration to the generic cycle.
        let seed = trapezoid_angles(1.0).unwrap();
        let t = iterate(&seed, 10_000, 1e-12).unwrap();
        assert_eq!(t.classification(), Classification::General2Cycle);
        let closest = t
            .states
            .iter()
            .map(|q| known_limit_sets()[1].match_distance(&[*q]))
            .fold(f64::INFINITY, f64::min);
        assert!(closest < 1e-8, "{closest}");
    }

    #[test]
    fn symmetrize_fixes_symmetric_tuples() {
        let t = trapezoid_angles(1.1).unwrap();
        assert_eq!(asymmetry(&t), 0.0);
        assert!(symmetrize(&t).sup_distance(&t) < 1e-15);
        let kite = AngleTuple::new([1.0, 1.7, TAU - 4.4, 1.7]).unwrap();
        assert_eq!(asymmetry(&kite), 0.0);
        let generic = AngleTuple::new(CYCLE_ANGLES).unwrap();
        assert!(asymmetry(&generic) > 0.05);
    }

    #[test]
    fn mirror_symmetric_set_is_invariant() {
        for a in [0.3, 0.9, 1.4] {
            let mut q = trapezoid_angles(a).unwrap();
            for _ in 0..6 {
                q = step(&q).unwrap();
                assert!(asymmetry(&q) < 1e-12);
            }
        }
    }

    #[test]
    fn trajectory_bookkeeping() {
        let q0 = AngleTuple::new([1.2, 2.1, 1.5, TAU - 4.8]).unwrap();
        let t = iterate(&q0, 5, 1e-300).unwrap();
        assert!(t.cycle.is_none());
        assert_eq!(t.classification(), Classification::NoConvergence);
        assert_eq!(t.states.len(), 6);
        assert_eq!(t.residuals.len(), 5);
        for w in t.states.windows(2) {
            assert!(step(&w[0]).unwrap().sup_distance(&w[1]) <= 1e-12);
        }
    }

    #[test]
    fn iterate_rejects_bad_arguments() {
        let sq = AngleTuple::square();
        assert!(iterate(&sq, 0, 1e-12).is_err());
        assert!(iterate(&sq, 10, 0.0).is_err());
    }

    #[test]
    fn dihedral_distance_examples() {
        let q = AngleTuple::new([1.2, 2.1, 1.5, TAU - 4.8]).unwrap();
        assert_eq!(dihedral_distance(&q, &q), 0.0);
        assert_eq!(dihedral_distance(&q.rotated(2), &q), 0.0);
        assert_eq!(dihedral_distance(&q.reflected(), &q), 0.0);

        let general = AngleTuple::new(CYCLE_ANGLES).unwrap();
        let d = dihedral_distance(&AngleTuple::square(), &general);
        // Every relabeling of the square is the square, so the distance is
        // the largest deviation of any component from pi/2.
        let brute = CYCLE_ANGLES
            .iter()
            .map(|x| (x - FRAC_PI_2).abs())
            .fold(0.0, f64::max);
        assert_eq!(d, brute);
        assert!((d - 0.2533).abs() < 1e-4);
    }

    #[test]
    fn limit_sets_are_well_separated() {
        let sets = known_limit_sets();
        for (i, a) in sets.iter().enumerate() {
            for b in &sets[i + 1..] {
                assert!(a.match_distance(&b.states) > 0.05);
            }
        }
    }
}
