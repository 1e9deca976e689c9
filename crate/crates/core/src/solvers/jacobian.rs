//! Central-difference Jacobians of chart maps.

use nalgebra::Matrix3;

use super::chart::ChartPoint;
use crate::error::{Error, Result};

/// Allowed range for the difference step.
pub const FD_STEP_RANGE: (f64, f64) = (1e-8, 1e-4);

/// `J[i][j] = (F_i(p + h e_j) − F_i(p − h e_j)) / 2h`.
pub fn fd_jacobian<F>(map: F, p: &ChartPoint, h: f64) -> Result<Matrix3<f64>>
where
    F: Fn(&ChartPoint) -> Result<ChartPoint>,
{
    if !(h >= FD_STEP_RANGE.0 && h <= FD_STEP_RANGE.1) {
        return Err(Error::InvalidArgument(format!(
            "difference step {h:e} outside [{:e}, {:e}]",
            FD_STEP_RANGE.0, FD_STEP_RANGE.1
        )));
    }
    // Moving one chart coordinate by h also moves β by h.
    if !(p.boundary_distance() > h) {
        return Err(Error::BoundaryTooClose { h });
    }
    let base = p.to_vector();
    let mut jac = Matrix3::zeros();
    for j in 0..3 {
        let mut plus = base;
        let mut minus = base;
        plus[j] += h;
        minus[j] -= h;
        let fp = map(&ChartPoint::from_vector(&plus))?.to_vector();
        let fm = map(&ChartPoint::from_vector(&minus))?.to_vector();
        jac.set_column(j, &((fp - fm) / (2.0 * h)));
    }
    if jac.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite { at: h });
    }
    Ok(jac)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn identity_map() {
        let p = ChartPoint::new(1.2, 1.5, 1.4);
        let j = fd_jacobian(|q| Ok(*q), &p, 1e-6).unwrap();
        assert!((j - Matrix3::identity()).amax() < 1e-10);
    }

    #[test]
    fn linear_map_is_exact() {
        let p = ChartPoint::new(1.2, 1.5, 1.4);
        let a = Matrix3::new(0.5, -1.0, 2.0, 0.0, 3.0, 0.25, 1.0, 1.0, -0.75);
        let j = fd_jacobian(
            |q| Ok(ChartPoint::from_vector(&(a * q.to_vector()))),
            &p,
            1e-5,
        )
        .unwrap();
        assert!((j - a).amax() < 1e-9);
    }

    #[test]
    fn step_bounds() {
        let p = ChartPoint::new(FRAC_PI_2, FRAC_PI_2, FRAC_PI_2);
        assert!(fd_jacobian(|q| Ok(*q), &p, 1e-3).is_err());
        assert!(fd_jacobian(|q| Ok(*q), &p, 1e-9).is_err());
    }

    #[test]
    fn too_close_to_boundary() {
        let p = ChartPoint::new(1e-7, 3.0, 3.0);
        let err = fd_jacobian(|q| Ok(*q), &p, 1e-6).unwrap_err();
        assert!(matches!(err, Error::BoundaryTooClose { .. }));
    }
}
