//! Scalar root finding: bisection and Newton with a central-difference
//! derivative.

use crate::error::{Error, Result};

/// Where a solve started from.
#[derive(Debug, Clone, PartialEq)]
pub enum Provenance {
    Bracket { lo: f64, hi: f64 },
    InitialGuess(Vec<f64>),
    Analytic,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveResult<T> {
    pub solution: T,
    /// `|f(x)|` for Newton-type solves; half the final bracket width for
    /// bisection.
    pub residual_norm: f64,
    pub iterations: usize,
    pub converged: bool,
    pub provenance: Provenance,
}

/// Step used for the derivative in [`newton_1d`].
pub const NEWTON_FD_STEP: f64 = 1e-7;

fn eval<F: Fn(f64) -> f64>(f: &F, x: f64) -> Result<f64> {
    let y = f(x);
    if y.is_finite() {
        Ok(y)
    } else {
        Err(Error::NonFinite { at: x })
    }
}

/// Halve `[lo, hi]` until its width is at most `tol` or `max_iter` halvings
/// were done. Requires a sign change between the endpoints.
pub fn bisect<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    tol: f64,
    max_iter: usize,
) -> Result<SolveResult<f64>> {
    if !(lo < hi) {
        return Err(Error::InvalidArgument(format!(
            "empty bracket [{lo}, {hi}]"
        )));
    }
    let provenance = Provenance::Bracket { lo, hi };
    let (mut a, mut b) = (lo, hi);
    let mut fa = eval(&f, a)?;
    let fb = eval(&f, b)?;
    for (x, fx) in [(a, fa), (b, fb)] {
        if fx == 0.0 {
            return Ok(SolveResult {
                solution: x,
                residual_norm: 0.0,
                iterations: 0,
                converged: true,
                provenance,
            });
        }
    }
    if fa.signum() == fb.signum() {
        return Err(Error::NoSignChange {
            lo,
            hi,
            f_lo: fa,
            f_hi: fb,
        });
    }

    let mut iterations = 0;
    while iterations < max_iter && b - a > tol {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            // Adjacent doubles; nothing left to halve.
            break;
        }
        iterations += 1;
        let fm = eval(&f, mid)?;
        if fm == 0.0 {
            a = mid;
            b = mid;
            break;
        }
        if fm.signum() == fa.signum() {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    let width = b - a;
    Ok(SolveResult {
        solution: 0.5 * (a + b),
        residual_norm: 0.5 * width,
        iterations,
        converged: width <= tol,
        provenance,
    })
}

/// Newton's method with derivative `(f(x + h) - f(x - h)) / 2h`,
/// `h = NEWTON_FD_STEP`, stopping once `|f(x)| <= tol`.
pub fn newton_1d<F: Fn(f64) -> f64>(
    f: F,
    x0: f64,
    tol: f64,
    max_iter: usize,
) -> Result<SolveResult<f64>> {
    let h = NEWTON_FD_STEP;
    let mut x = x0;
    for iterations in 0..=max_iter {
        let fx = eval(&f, x)?;
        if fx.abs() <= tol {
            return Ok(SolveResult {
                solution: x,
                residual_norm: fx.abs(),
                iterations,
                converged: true,
                provenance: Provenance::InitialGuess(vec![x0]),
            });
        }
        if iterations == max_iter {
            return Err(Error::MaxIterations {
                iterations,
                residual: fx.abs(),
            });
        }
        let slope = (eval(&f, x + h)? - eval(&f, x - h)?) / (2.0 * h);
        if slope == 0.0 {
            return Err(Error::DerivativeVanishes { at: x });
        }
        x -= fx / slope;
    }
    unreachable!("loop returns on its last iteration")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bisect_linear() {
        let r = bisect(|x| x - 1.0, 0.0, 2.0, 1e-12, 200).unwrap();
        assert!(r.converged);
        assert!((r.solution - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn bisect_requires_sign_change() {
        let err = bisect(|x| x * x + 1.0, -1.0, 1.0, 1e-12, 100).unwrap_err();
        assert!(matches!(err, Error::NoSignChange { .. }));
    }

    #[test]
    fn bisect_rejects_nan() {
        let err = bisect(
            |x| if x > 0.5 { f64::NAN } else { x - 1.0 },
            0.0,
            2.0,
            1e-12,
            100,
        )
        .unwrap_err();
        assert!(matches!(err, Error::NonFinite { .. }));
    }

    #[test]
    fn bisect_stops_at_max_iter() {
        let r = bisect(|x| x - 1.0 / 3.0, 0.0, 1.0, 1e-15, 5).unwrap();
        assert!(!r.converged);
        assert_eq!(r.iterations, 5);
        assert!((r.solution - 1.0 / 3.0).abs() <= r.residual_norm);
    }

    #[test]
    fn newton_sqrt_two() {
        let r = newton_1d(|x| x * x - 2.0, 1.5, 1e-14, 50).unwrap();
        assert!((r.solution - 2f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn newton_degenerate_root() {
        // Starting on the triple root is accepted immediately; starting away
        // from it converges only linearly.
        let r = newton_1d(|x| x * x * x, 0.0, 1e-14, 50).unwrap();
        assert_eq!(r.solution, 0.0);
        let r = newton_1d(|x| x * x * x, 1.0, 1e-14, 200).unwrap();
        assert!(r.iterations > 20);
    }

    #[test]
    fn newton_flat_start() {
        let err = newton_1d(|x| x * x + 1.0, 0.0, 1e-14, 50).unwrap_err();
        assert!(matches!(err, Error::DerivativeVanishes { .. }));
    }

    #[test]
    fn newton_gives_up() {
        let err = newton_1d(|x| x * x + 1.0, 0.3, 1e-14, 10).unwrap_err();
        assert!(matches!(err, Error::MaxIterations { iterations: 10, .. }));
    }
}
