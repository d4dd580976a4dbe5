//! Validation tolerances shared by every crate in the workspace.
//!
//! Physical objects are checked against these bounds when they are
//! constructed, so downstream code can rely on them without re-checking.

/// Allowed deviation from Hermiticity, `max |ρ - ρ†|`.
pub const HERMITIAN: f64 = 1e-12;

/// Allowed deviation of a density-matrix trace from one.
pub const TRACE: f64 = 1e-12;

/// Most negative eigenvalue tolerated in a density matrix.
pub const MIN_EIGENVALUE: f64 = -1e-10;

/// Trace deviation tolerated in a density matrix produced by time stepping.
pub const EVOLVED_TRACE: f64 = 1e-9;

/// Most negative eigenvalue tolerated in a density matrix produced by time
/// stepping; a fourth-order step is not exactly positivity preserving.
pub const EVOLVED_MIN_EIGENVALUE: f64 = -1e-8;

/// Allowed deviation of a normalized state vector's norm from one.
pub const NORM: f64 = 1e-12;

/// Unitarity check for basis changes, `max |U U† - 1|`.
pub const UNITARY: f64 = 1e-12;

/// Largest real part tolerated in the spectrum of a dissipative generator.
pub const GENERATOR_EIGEN_REAL: f64 = 1e-10;

/// Distance from `cos k0d = ±1` below which collective rates are treated as
/// exactly degenerate and closed forms switch to their limit expressions.
pub const DEGENERATE_COS: f64 = 1e-6;
