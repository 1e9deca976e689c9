//! Seeded draws of initial angle tuples.
//!
//! Sample `i` of a run with seed `s` reads from stream `i` of a ChaCha
//! generator keyed by `s`, so a record does not depend on the other samples
//! or on the order in which they are computed.

use std::f64::consts::PI;

use quadrangle::{renormalize_sum, trapezoid_angles, AngleTuple};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

/// Default distance kept from 0 and π by sampled angles.
pub const DEFAULT_MARGIN: f64 = 0.05;
/// Range of the parameter `a` for trapezoid seeds.
pub const TRAPEZOID_RANGE: (f64, f64) = (0.1, 1.5);

/// Draws per sample before giving up on rejection sampling.
const MAX_DRAWS: usize = 100_000;

pub fn sample_rng(seed: u64, sample_id: u64) -> ChaCha20Rng {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    rng.set_stream(sample_id);
    rng
}

/// Four uniform values on `(margin, π − margin)`, rescaled to sum 2π;
/// redrawn until the rescaled tuple stays inside the same interval.
pub fn random_tuple(seed: u64, sample_id: u64, margin: f64) -> Option<AngleTuple> {
    if !(0.0..PI / 2.0).contains(&margin) {
        return None;
    }
    let mut rng = sample_rng(seed, sample_id);
    let (lo, hi) = (margin, PI - margin);
    for _ in 0..MAX_DRAWS {
        let raw: [f64; 4] = std::array::from_fn(|_| rng.random_range(lo..hi));
        let scaled = renormalize_sum(raw);
        if scaled.iter().all(|&a| a > lo && a < hi) {
            if let Ok(q) = AngleTuple::new(scaled) {
                return Some(q);
            }
        }
    }
    None
}

/// `(a, π − a, π − a, a)` with `a` uniform on [`TRAPEZOID_RANGE`].
pub fn trapezoid_tuple(seed: u64, sample_id: u64) -> AngleTuple {
    let mut rng = sample_rng(seed, sample_id);
    let a = rng.random_range(TRAPEZOID_RANGE.0..TRAPEZOID_RANGE.1);
    trapezoid_angles(a).expect("range lies in (0, pi/2]")
}
