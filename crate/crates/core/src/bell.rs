//! Two-qubit Bell basis `{G, E, S, A}`.
//!
//! `G = gg`, `E = ee`, `S = (ge + eg)/√2`, `A = (ge - eg)/√2`. With qubit 1
//! written first, `ge` has the *second* qubit excited, so `eg = (S - A)/√2`.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::CoreError;
use crate::state::{DensityMatrix, StateVector};
use crate::{c64, CMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BellLabel {
    G,
    E,
    S,
    A,
}

impl BellLabel {
    pub const ALL: [BellLabel; 4] = [BellLabel::G, BellLabel::E, BellLabel::S, BellLabel::A];

    /// Position in the `(G, E, S, A)` ordering.
    pub fn index(self) -> usize {
        match self {
            BellLabel::G => 0,
            BellLabel::E => 1,
            BellLabel::S => 2,
            BellLabel::A => 3,
        }
    }

    pub fn from_index(i: usize) -> Option<Self> {
        Self::ALL.get(i).copied()
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "G" => Some(BellLabel::G),
            "E" => Some(BellLabel::E),
            "S" => Some(BellLabel::S),
            "A" => Some(BellLabel::A),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BellLabel::G => "G",
            BellLabel::E => "E",
            BellLabel::S => "S",
            BellLabel::A => "A",
        }
    }

    /// The Bell state as a product-basis vector.
    pub fn state(self) -> StateVector {
        StateVector::from_column(bell_matrix().column(self.index()).into_owned())
    }
}

impl fmt::Display for BellLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    ProductToBell,
    BellToProduct,
}

/// Unitary whose columns are `G, E, S, A` written in the product basis
/// `gg, ge, eg, ee`.
///
/// Bell coordinates of a product vector `v` are `U† v`.
pub fn bell_matrix() -> CMatrix {
    let r = FRAC_1_SQRT_2;
    #[rustfmt::skip]
    let u = CMatrix::from_row_slice(4, 4, &[
        c64(1.0, 0.0), c64(0.0, 0.0), c64(0.0, 0.0), c64(0.0, 0.0),
        c64(0.0, 0.0), c64(0.0, 0.0), c64(r, 0.0),   c64(r, 0.0),
        c64(0.0, 0.0), c64(0.0, 0.0), c64(r, 0.0),   c64(-r, 0.0),
        c64(0.0, 0.0), c64(1.0, 0.0), c64(0.0, 0.0), c64(0.0, 0.0),
    ]);
    u
}

fn check_two_qubit(dim: usize) -> Result<(), CoreError> {
    if dim != 4 {
        return Err(CoreError::NotTwoQubits(dim.trailing_zeros() as usize));
    }
    Ok(())
}

/// Change the coordinates of a two-qubit state vector.
pub fn bell_transform_state(
    direction: Direction,
    state: &StateVector,
) -> Result<StateVector, CoreError> {
    check_two_qubit(state.dim())?;
    let u = bell_matrix();
    let v = match direction {
        Direction::ProductToBell => u.adjoint() * state.amplitudes(),
        Direction::BellToProduct => u * state.amplitudes(),
    };
    Ok(StateVector::from_column(v))
}

/// Change the coordinates of a two-qubit density matrix.
pub fn bell_transform_density(
    direction: Direction,
    rho: &DensityMatrix,
) -> Result<DensityMatrix, CoreError> {
    check_two_qubit(rho.dim())?;
    let m = transform_matrix(direction, rho.matrix());
    // A unitary change of basis preserves every density-matrix property.
    Ok(DensityMatrix::new_unchecked(m))
}

/// Change the coordinates of an arbitrary two-qubit operator.
pub fn transform_matrix(direction: Direction, m: &CMatrix) -> CMatrix {
    let u = bell_matrix();
    match direction {
        Direction::ProductToBell => u.adjoint() * m * &u,
        Direction::BellToProduct => &u * m * u.adjoint(),
    }
}
