//! Two qubits separated by the phase `k0d`.
//!
//! Coefficients are expressed in the Bell basis `(G, E, S, A)` with
//! `|S⟩ = (|ge⟩+|eg⟩)/√2` and `|A⟩ = (|ge⟩-|eg⟩)/√2`.

mod coefficients;
mod emission;
mod photon;
mod probability;
mod spectrum;

pub use coefficients::{coefficients, coefficients_product, field};
pub use emission::{emission_rate, emission_rate_density};
pub use photon::{photon_mean, photon_mean_density};
pub use probability::{density_at, probabilities_bell, probability, FinalState};
pub use spectrum::{
    spectrum, spectrum_antisymmetric, spectrum_doubly_excited, spectrum_doubly_excited_generic,
    spectrum_doubly_excited_limit, spectrum_eg, spectrum_ge, spectrum_symmetric,
};

use wgqed_core::{bell_matrix, c64, spin_matrix, CMatrix, SpinOp};

use crate::params::TwoQubitParams;

pub(crate) const G: usize = 0;
pub(crate) const E: usize = 1;
pub(crate) const S: usize = 2;
pub(crate) const A: usize = 3;

/// Observation time for spectra.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpectrumTime {
    Finite(f64),
    /// Long-time spectral density.
    Infinite,
}

/// `J₋ = Σ_n e^{-i k0 x_n} σ₋^n` in the product basis, with `k0 x = ∓k0d/2`.
pub fn collective_lowering(p: &TwoQubitParams) -> CMatrix {
    let phases = [-0.5 * p.k0d, 0.5 * p.k0d];
    let mut j = CMatrix::zeros(4, 4);
    for (q, ph) in phases.iter().enumerate() {
        let sm = spin_matrix(SpinOp::Lower, q, 2).expect("two qubits");
        j += sm * c64(0.0, -ph).exp();
    }
    j
}

/// Product-basis matrix to Bell coordinates.
pub(crate) fn to_bell(m: &CMatrix) -> CMatrix {
    let u = bell_matrix();
    u.adjoint() * m * u
}
