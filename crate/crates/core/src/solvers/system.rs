//! Fixed points of the trapezoid return map and the generic 2-cycle.

use std::f64::consts::{FRAC_PI_2, TAU};

use nalgebra::Vector3;

use super::chart::{cycle_residual, ChartPoint};
use super::root::{bisect, newton_1d, Provenance, SolveResult};
use crate::dynamics::step_n;
use crate::error::{Error, Result};
use crate::trapezoid::c_map;
use crate::tuple::AngleTuple;

/// Bracket for the attracting fixed point of `c(a) = a`.
pub const TRAPEZOID_BRACKET: (f64, f64) = (1.4, 1.5);
/// Seed whose orbit provides the default starting point for the cycle solve.
pub const CYCLE_SEED: [f64; 4] = [1.2, 2.1, 1.5, TAU - 4.8];
/// Steps taken from [`CYCLE_SEED`] before reading off the starting point.
pub const CYCLE_WARMUP_STEPS: usize = 50;
/// Difference step for Newton Jacobians.
pub const NEWTON_SYSTEM_FD_STEP: f64 = 1e-7;
/// Maximum number of step halvings in the line search.
pub const MAX_HALVINGS: u32 = 20;

/// Both fixed points of `c(a) = a` on `(0, π/2]`.
#[derive(Debug, Clone, PartialEq)]
pub struct TrapezoidFixedPoints {
    /// Newton-refined attracting fixed point.
    pub attracting: SolveResult<f64>,
    /// The bisection stage that preceded the refinement.
    pub bracketed: SolveResult<f64>,
    /// The square, `a = π/2`.
    pub repelling: f64,
}

/// `c(a) − a`.
pub fn trapezoid_gap(a: f64) -> f64 {
    c_map(a).map_or(f64::NAN, |c| c - a)
}

/// Bisection on `bracket` followed by Newton refinement until
/// `|c(a) − a| ≤ tol`.
pub fn solve_trapezoid_fixed_point_in(
    bracket: (f64, f64),
    tol: f64,
) -> Result<TrapezoidFixedPoints> {
    if !(tol >= 1e-14) {
        return Err(Error::InvalidArgument(format!(
            "tolerance {tol:e} below 1e-14"
        )));
    }
    let bracketed = bisect(trapezoid_gap, bracket.0, bracket.1, 1e-15, 200)?;
    let mut attracting = newton_1d(trapezoid_gap, bracketed.solution, tol, 50)?;
    attracting.provenance = Provenance::Bracket {
        lo: bracket.0,
        hi: bracket.1,
    };
    Ok(TrapezoidFixedPoints {
        attracting,
        bracketed,
        repelling: FRAC_PI_2,
    })
}

pub fn solve_trapezoid_fixed_point(tol: f64) -> Result<TrapezoidFixedPoints> {
    solve_trapezoid_fixed_point_in(TRAPEZOID_BRACKET, tol)
}

/// Central-difference slope of `c` at `a`.
pub fn c_map_slope(a: f64, h: f64) -> Result<f64> {
    Ok((c_map(a + h)? - c_map(a - h)?) / (2.0 * h))
}

/// Starting point read off the orbit of [`CYCLE_SEED`] after
/// [`CYCLE_WARMUP_STEPS`] steps.
///
/// Every two steps the orbit's labels shift by one vertex, so the warmed-up
/// state is relabeled by the dihedral image with the smallest residual.
/// Without this the solve can land on the square, which satisfies the same
/// relations.
pub fn default_cycle_start() -> Result<ChartPoint> {
    let q = step_n(&AngleTuple::new(CYCLE_SEED)?, CYCLE_WARMUP_STEPS)?;
    let best = q
        .dihedral_images()
        .iter()
        .map(ChartPoint::from_angles)
        .min_by(|a, b| {
            cycle_residual(a)
                .amax()
                .total_cmp(&cycle_residual(b).amax())
        })
        .expect("eight images");
    Ok(best)
}

fn residual_at(x: &Vector3<f64>) -> Option<Vector3<f64>> {
    let p = ChartPoint::from_vector(x);
    // Newton may wander; only accept points that are still quadrangles.
    p.to_angles().ok()?;
    let g = cycle_residual(&p);
    g.iter().all(|v| v.is_finite()).then_some(g)
}

/// Damped Newton on the three cycle relations. The Jacobian is a central
/// difference with step [`NEWTON_SYSTEM_FD_STEP`]; a step is halved until
/// `‖G‖₂` decreases, at most [`MAX_HALVINGS`] times.
pub fn solve_cycle_system(
    initial: Option<ChartPoint>,
    tol: f64,
    max_iter: usize,
) -> Result<SolveResult<ChartPoint>> {
    if !(tol >= 1e-13) {
        return Err(Error::InvalidArgument(format!(
            "tolerance {tol:e} below 1e-13"
        )));
    }
    let start = match initial {
        Some(p) => p,
        None => default_cycle_start()?,
    };
    let mut x = start.to_vector();
    let mut g = residual_at(&x).ok_or_else(|| {
        Error::Domain(format!("initial point {start:?} is not a valid quadrangle"))
    })?;
    let h = NEWTON_SYSTEM_FD_STEP;

    for iterations in 0..=max_iter {
        if g.amax() <= tol {
            return Ok(SolveResult {
                solution: ChartPoint::from_vector(&x),
                residual_norm: g.amax(),
                iterations,
                converged: true,
                provenance: Provenance::InitialGuess(vec![start.alpha, start.gamma, start.delta]),
            });
        }
        if iterations == max_iter {
            break;
        }
        let mut jac = nalgebra::Matrix3::zeros();
        for j in 0..3 {
            let (mut plus, mut minus) = (x, x);
            plus[j] += h;
            minus[j] -= h;
            let (gp, gm) = (
                cycle_residual(&ChartPoint::from_vector(&plus)),
                cycle_residual(&ChartPoint::from_vector(&minus)),
            );
            jac.set_column(j, &((gp - gm) / (2.0 * h)));
        }
        let delta = jac
            .lu()
            .solve(&(-g))
            .ok_or(Error::SingularJacobian { iterations })?;

        let current = g.norm();
        let mut lambda = 1.0;
        let mut accepted = None;
        for _ in 0..=MAX_HALVINGS {
            let trial = x + lambda * delta;
            if let Some(gt) = residual_at(&trial) {
                if gt.norm() < current {
                    accepted = Some((trial, gt));
                    break;
                }
            }
            lambda *= 0.5;
        }
        match accepted {
            Some((trial, gt)) => {
                x = trial;
                g = gt;
            }
            None => {
                return Err(Error::StepCollapse {
                    iterations,
                    residual: g.amax(),
                })
            }
        }
    }
    Err(Error::MaxIterations {
        iterations: max_iter,
        residual: g.amax(),
    })
}
