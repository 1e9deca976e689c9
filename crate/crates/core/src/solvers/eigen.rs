//! Eigenvalue moduli of a 3×3 matrix from its characteristic cubic.

use std::f64::consts::PI;

use nalgebra::Matrix3;

/// Roots of `λ³ − t λ² + m λ − d` where `t` is the trace, `m` the sum of the
/// principal 2×2 minors and `d` the determinant, returned as `(re, im)`.
pub fn characteristic_roots(m: &Matrix3<f64>) -> [(f64, f64); 3] {
    let trace = m.trace();
    let minors = m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)] + m[(0, 0)] * m[(2, 2)]
        - m[(0, 2)] * m[(2, 0)]
        + m[(1, 1)] * m[(2, 2)]
        - m[(1, 2)] * m[(2, 1)];
    let det = m.determinant();
    cubic_roots(-trace, minors, -det)
}

/// Roots of the monic cubic `λ³ + a λ² + b λ + c`.
///
/// Substituting `λ = t − a/3` gives `t³ + p t + q = 0`. Three real roots use
/// the trigonometric form; otherwise the stable Cardano form yields one real
/// root and a conjugate pair.
pub fn cubic_roots(a: f64, b: f64, c: f64) -> [(f64, f64); 3] {
    let shift = a / 3.0;
    let p = b - a * a / 3.0;
    let q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    let disc = (q / 2.0).powi(2) + (p / 3.0).powi(3);

    if disc < 0.0 {
        // p < 0 here.
        let r = 2.0 * (-p / 3.0).sqrt();
        let cos_arg = ((3.0 * q) / (2.0 * p) * (-3.0 / p).sqrt()).clamp(-1.0, 1.0);
        let phi = cos_arg.acos() / 3.0;
        std::array::from_fn(|k| (r * (phi - 2.0 * PI * k as f64 / 3.0).cos() - shift, 0.0))
    } else {
        let big = -q.signum() * (q.abs() / 2.0 + disc.sqrt()).cbrt();
        let small = if big == 0.0 { 0.0 } else { -p / (3.0 * big) };
        let real = big + small - shift;
        let re = -0.5 * (big + small) - shift;
        let im = 0.5 * 3f64.sqrt() * (big - small);
        [(real, 0.0), (re, im), (re, -im)]
    }
}

/// Moduli of the three eigenvalues, sorted descending.
pub fn eigenvalue_moduli_3x3(m: &Matrix3<f64>) -> [f64; 3] {
    let mut moduli = characteristic_roots(m).map(|(re, im)| re.hypot(im));
    moduli.sort_by(|a, b| b.total_cmp(a));
    moduli
}

/// Largest eigenvalue modulus.
pub fn spectral_radius(m: &Matrix3<f64>) -> f64 {
    eigenvalue_moduli_3x3(m)[0]
}
