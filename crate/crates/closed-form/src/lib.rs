//! Closed-form results for one and two qubits in an open waveguide.
//!
//! Units: `Γ` sets the time scale, frequencies are in units of `Γ`, and
//! spectra use the convention `v_g / 2L = 1`, so the single-qubit spectral
//! density is `Γ / ((ω - Ω)² + Γ²/4)` and integrates to `2π`.
//!
//! Spectra and photon means are for photons travelling in the `+k`
//! direction, with the qubit pair placed at `k0 x = ∓k0d/2`. Emission rates
//! follow the same one-direction convention (a single excited qubit has
//! `W(0) = Γ/2`).
//!
//! Photon means are returned in units of the mode coupling `g_k`.

pub mod error;
pub mod one_qubit;
pub mod params;
pub mod tags;
pub mod two_qubit;
mod util;

pub use error::ClosedFormError;
pub use one_qubit::{OneQubit, OneQubitTag};
pub use params::{Degeneracy, TwoQubitParams};
pub use tags::InitialStateTag;
pub use two_qubit::SpectrumTime;
pub use util::{decay_difference, exp_integral, phi};
