use thiserror::Error;

/// Failures raised by validation, geometry and the numerical solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("component {index} = {value} lies outside the open interval (0, pi)")]
    OutOfRange { index: usize, value: f64 },

    #[error("components sum to {sum}, expected 2*pi within {tol:e}")]
    SumMismatch { sum: f64, tol: f64 },

    #[error("argument outside the domain: {0}")]
    Domain(String),

    #[error("closure system does not have a one-dimensional solution set")]
    DegenerateFamily,

    #[error("no sign change on [{lo}, {hi}]: f(lo) = {f_lo}, f(hi) = {f_hi}")]
    NoSignChange {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },

    #[error("non-finite function value at x = {at}")]
    NonFinite { at: f64 },

    #[error("derivative vanishes at x = {at}")]
    DerivativeVanishes { at: f64 },

    #[error("no convergence after {iterations} iterations (residual {residual:e})")]
    MaxIterations { iterations: usize, residual: f64 },

    #[error("line search collapsed after {iterations} iterations (residual {residual:e})")]
    StepCollapse { iterations: usize, residual: f64 },

    #[error("jacobian is singular at iteration {iterations}")]
    SingularJacobian { iterations: usize },

    #[error("point lies within the difference step {h:e} of the chart boundary")]
    BoundaryTooClose { h: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
