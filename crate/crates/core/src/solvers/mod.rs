//! Root finding, Newton solves, numerical Jacobians and spectra.

pub mod chart;
pub mod eigen;
pub mod jacobian;
pub mod root;
pub mod stability;
pub mod system;

pub use chart::{chart_step, cycle_relations, cycle_residual, ChartPoint, MapOrder};
pub use eigen::{eigenvalue_moduli_3x3, spectral_radius};
pub use jacobian::fd_jacobian;
pub use root::{bisect, newton_1d, Provenance, SolveResult};
pub use stability::{
    stability_report, trapezoid_multipliers, StabilityReport, TrapezoidMultipliers,
    STABILITY_FD_STEP,
};
pub use system::{
    c_map_slope, default_cycle_start, solve_cycle_system, solve_trapezoid_fixed_point,
    solve_trapezoid_fixed_point_in, TrapezoidFixedPoints,
};
