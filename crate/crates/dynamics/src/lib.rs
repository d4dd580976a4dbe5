//! Numerical evolution of vacuum-averaged transition operators.
//!
//! The generator `Λ` from [`wgqed_core::build_generator`] is integrated on a
//! uniform time grid. Everything downstream (density matrices, two-time
//! correlators, emission spectra, emission rates and one-photon field means)
//! is read off that grid without interpolation: every time argument must be
//! a grid point.
//!
//! Frequencies are in units of `Γ`, times in `1/Γ`, the group velocity is 1
//! and spectra use the `v_g/2L = 1` convention of the closed forms.

pub mod correlator;
pub mod error;
pub mod evolve;
pub mod observables;
pub mod quadrature;
pub mod spectrum;

pub use correlator::{density_evolution, time_ordered_correlator, two_time_correlator};
pub use error::DynamicsError;
pub use evolve::{
    evolve_field, evolve_field_with, field_at, max_step, one_step_matrix, EvolveOptions, Stepper,
};
pub use observables::{
    emission_rate_numeric, emission_rate_series, photon_mean_numeric, photon_mean_pair, TimeSeries,
};
pub use quadrature::simpson;
pub use spectrum::{
    default_window, long_time, spectrum_quadrature, PhaseConvention, QuadratureOptions,
    SpectrumGrid,
};
