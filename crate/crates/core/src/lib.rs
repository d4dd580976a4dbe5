//! Core types for N qubits coupled to an open one-dimensional waveguide.
//!
//! Everything here works in the product basis of the spin system: qubit 1 is
//! the most significant bit of a basis index, `g = 0` and `e = 1`, so for two
//! qubits the order is `gg, ge, eg, ee`. Time is measured in units of the
//! single-qubit decay rate `1/Γ` and frequencies in units of `Γ`.
//!
//! The [`generator`] module builds the vacuum-averaged equation of motion for
//! transition operators `P_ij(t)`, the Heisenberg-evolved dyads `|i⟩⟨j|`.
//! Their expansion coefficients over the dyad basis are stored in
//! [`field::TransitionCoefficients`].

pub mod basis;
pub mod bell;
pub mod config;
pub mod error;
pub mod field;
pub mod generator;
pub mod io;
pub mod spin;
pub mod state;
pub mod tolerances;

pub use basis::{build_basis, BasisSet};
pub use bell::{bell_matrix, bell_transform_density, bell_transform_state, BellLabel, Direction};
pub use config::SystemConfig;
pub use error::CoreError;
pub use field::{OperatorBasis, TransitionCoefficients, TransitionOperatorField};
pub use generator::{build_generator, pairwise_rates, GeneratorMatrix, RateMatrices};
pub use spin::{apply_spin_operator, spin_matrix, SpinOp};
pub use state::{density_from_pure, DensityMatrix, StateVector};

/// Double-precision complex scalar used throughout.
pub type C64 = num_complex::Complex64;

/// Dense complex matrix.
pub type CMatrix = nalgebra::DMatrix<C64>;

/// Dense complex column vector.
pub type CVector = nalgebra::DVector<C64>;

/// Shorthand for a complex number from its parts.
#[inline]
pub fn c64(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Largest absolute entry of a complex matrix.
pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().fold(0.0_f64, |acc, z| acc.max(z.norm()))
}

/// Largest absolute entrywise difference between two matrices of equal shape.
pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    assert_eq!(a.shape(), b.shape(), "shape mismatch");
    a.iter()
        .zip(b.iter())
        .fold(0.0_f64, |acc, (x, y)| acc.max((x - y).norm()))
}
