//! Linear stability of fixed points and 2-cycles in the reduced chart.

use nalgebra::Matrix3;

use super::chart::{chart_step, ChartPoint, MapOrder};
use super::eigen::eigenvalue_moduli_3x3;
use super::jacobian::fd_jacobian;
use super::system::c_map_slope;
use crate::dynamics::{asymmetry, step_n};
use crate::error::Result;
use crate::trapezoid::trapezoid_angles;
use crate::tuple::AngleTuple;

/// Difference step for stability Jacobians.
pub const STABILITY_FD_STEP: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct StabilityReport {
    pub point: ChartPoint,
    pub map_order: MapOrder,
    pub jacobian: Matrix3<f64>,
    /// Sorted descending.
    pub eigenvalue_moduli: [f64; 3],
    pub spectral_radius: f64,
    pub fd_step: f64,
}

impl StabilityReport {
    pub fn is_attracting(&self) -> bool {
        self.spectral_radius < 1.0
    }
}

/// Jacobian and spectrum of the map (or its square) at `q`.
pub fn stability_report(q: &AngleTuple, map_order: MapOrder, h: f64) -> Result<StabilityReport> {
    let point = ChartPoint::from_angles(q);
    let jacobian = fd_jacobian(|p| chart_step(p, map_order), &point, h)?;
    let eigenvalue_moduli = eigenvalue_moduli_3x3(&jacobian);
    Ok(StabilityReport {
        point,
        map_order,
        jacobian,
        eigenvalue_moduli,
        spectral_radius: eigenvalue_moduli[0],
        fd_step: h,
    })
}

/// Multipliers of the trapezoid 2-cycle.
///
/// The map is not differentiable on the trapezoid family (one end of the
/// feasible segment loses two edges at once), so the central-difference
/// report averages one-sided derivatives there. The in-family and transverse
/// rates are therefore measured directly.
#[derive(Debug, Clone, PartialEq)]
pub struct TrapezoidMultipliers {
    /// `c'(a*)`: contraction per two steps inside the mirror-symmetric family.
    pub in_family: f64,
    /// Growth per two steps of a small asymmetric perturbation.
    pub transverse: f64,
    /// Central-difference report of the squared map at the cycle point.
    pub report: StabilityReport,
}

/// Seed asymmetry for the transverse growth estimate.
const TRANSVERSE_SEED: f64 = 1e-10;
/// Double steps over which the transverse growth is averaged.
const TRANSVERSE_DOUBLE_STEPS: i32 = 20;

pub fn trapezoid_multipliers(a_star: f64, h: f64) -> Result<TrapezoidMultipliers> {
    let cycle_point = trapezoid_angles(a_star)?;
    let in_family = c_map_slope(a_star, h)?;
    let report = stability_report(&cycle_point, MapOrder::Twice, h)?;

    // Antisymmetric direction for the reflection that fixes the trapezoid.
    let [a, b, c, d] = cycle_point.as_array();
    let perturbed = AngleTuple::new([a + TRANSVERSE_SEED, b, c, d - TRANSVERSE_SEED])?;
    let start = asymmetry(&perturbed);
    let end = asymmetry(&step_n(&perturbed, 2 * TRANSVERSE_DOUBLE_STEPS as usize)?);
    let transverse = (end / start).powf(1.0 / TRANSVERSE_DOUBLE_STEPS as f64);
    Ok(TrapezoidMultipliers {
        in_family,
        transverse,
        report,
    })
}
