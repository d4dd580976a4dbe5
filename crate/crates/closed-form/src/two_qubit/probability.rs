use std::fmt;

use wgqed_core::basis::product_label;
use wgqed_core::{bell_matrix, BellLabel, CMatrix, CVector, StateVector};

use super::{coefficients, to_bell};
use crate::error::ClosedFormError;
use crate::params::TwoQubitParams;
use crate::tags::InitialStateTag;

/// Target state of a transition probability.
#[derive(Debug, Clone, PartialEq)]
pub enum FinalState {
    Bell(BellLabel),
    /// Product basis index (`gg = 0`, `ge = 1`, `eg = 2`, `ee = 3`).
    Product(usize),
    Pure(StateVector),
}

impl FinalState {
    /// Accepts Bell labels (`G`, `E`, `S`, `A`) and product labels (`gg`, `ge`, `eg`, `ee`).
    pub fn parse(s: &str) -> Result<Self, ClosedFormError> {
        if let Some(b) = BellLabel::parse(s) {
            return Ok(Self::Bell(b));
        }
        (0..4)
            .find(|&i| product_label(i, 2) == s)
            .map(Self::Product)
            .ok_or_else(|| ClosedFormError::InvalidTag(s.to_string()))
    }

    /// Coordinates in the product basis.
    pub fn product_vector(&self) -> Result<CVector, ClosedFormError> {
        Ok(match self {
            Self::Bell(b) => b.state().amplitudes().clone(),
            Self::Product(i) if *i < 4 => StateVector::basis_state(4, *i).amplitudes().clone(),
            Self::Product(i) => {
                return Err(ClosedFormError::InvalidTag(format!("product index {i}")))
            }
            Self::Pure(v) if v.dim() == 4 => v.amplitudes().clone(),
            Self::Pure(v) => return Err(wgqed_core::CoreError::NotTwoQubits(v.n_qubits()).into()),
        })
    }
}

impl fmt::Display for FinalState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Bell(b) => write!(f, "{b}"),
            Self::Product(i) => f.write_str(&product_label(*i, 2)),
            Self::Pure(_) => f.write_str("custom"),
        }
    }
}

/// `Tr[ρ(0) ⟨P_ff(t)⟩]`.
pub fn probability(
    p: &TwoQubitParams,
    initial: &InitialStateTag,
    target: &FinalState,
    t: f64,
) -> Result<f64, ClosedFormError> {
    let rho = to_bell(initial.density()?.matrix());
    let f = bell_matrix().adjoint() * target.product_vector()?;
    Ok(coefficients(p, t)?.probability(&rho, &f))
}

/// Probabilities of the four Bell states, in `(G, E, S, A)` order.
pub fn probabilities_bell(
    p: &TwoQubitParams,
    initial: &InitialStateTag,
    t: f64,
) -> Result<[f64; 4], ClosedFormError> {
    let rho = to_bell(initial.density()?.matrix());
    let c = coefficients(p, t)?;
    let evolved = c.evolve_density(&rho);
    Ok([0, 1, 2, 3].map(|i| evolved[(i, i)].re))
}

/// `ρ(t)` in the product basis.
pub fn density_at(
    p: &TwoQubitParams,
    initial: &InitialStateTag,
    t: f64,
) -> Result<CMatrix, ClosedFormError> {
    let rho = to_bell(initial.density()?.matrix());
    let evolved = coefficients(p, t)?.evolve_density(&rho);
    let u = bell_matrix();
    Ok(&u * evolved * u.adjoint())
}
