//! Brute-force check of the Markov theory.
//!
//! The waveguide is replaced by two discrete families of modes, moving in the
//! `+k` and `-k` directions, spread uniformly over a band around `Ω`. In the
//! single-excitation sector the state is a qubit amplitude `β_n` per qubit
//! plus one amplitude `γ` per mode, and the Schrödinger equation for these
//! amplitudes is integrated directly. Nothing is traced out and no Markov
//! approximation is made, so retardation between the qubits is kept.
//!
//! Units follow the rest of the workspace: `Γ` sets the time scale, `v_g = 1`
//! and qubit positions are `x_n = φ_n / Ω` for configured phases `φ_n`.

pub mod bath;
pub mod error;
pub mod fit;
pub mod spectrum;

pub use bath::{evolve_bath, single_excitation_amplitudes, BathConfig, BathRun, BathState};
pub use error::OracleError;
pub use fit::{extract_rate_and_shift, RateShift};
pub use spectrum::{oracle_spectrum, OracleSpectrum};
