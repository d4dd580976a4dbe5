//! Fixed-step integration of `dC/dt = Λ C`, `C(0) = 1`.
//!
//! Row `(ij)` of `C(t)` holds the coefficients of `⟨P_ij(t)⟩`, so the field
//! is `C(t) = e^{tΛ}`. The classical fourth-order Runge-Kutta step of a
//! linear system is the fixed matrix `R = Σ_{k≤4} (hΛ)^k / k!`, applied once
//! per step.

use std::f64::consts::PI;

use wgqed_core::{
    CMatrix, GeneratorMatrix, OperatorBasis, TransitionCoefficients, TransitionOperatorField,
};

use crate::error::DynamicsError;

/// How a single time step is propagated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Stepper {
    /// Classical fourth-order Runge-Kutta.
    #[default]
    Rk4,
    /// Exact one-step propagator `e^{hΛ}`.
    Exponential,
}

/// Options for [`evolve_field_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvolveOptions {
    pub stepper: Stepper,
    /// Keep every `record_every`-th step; the field grid spacing is
    /// `record_every · dt`.
    pub record_every: usize,
    /// Single-particle basis the generator is expressed in.
    pub basis: OperatorBasis,
}

impl Default for EvolveOptions {
    fn default() -> Self {
        Self {
            stepper: Stepper::Rk4,
            record_every: 1,
            basis: OperatorBasis::Product,
        }
    }
}

/// Largest accepted step for `gen`.
///
/// The fastest free phase `ω_max = max |Im Λ_kk|` must be sampled with at
/// least 50 points per period and the fastest decay `γ_max = max |Re Λ_kk|`
/// with `h γ_max ≤ 0.1`. For two qubits this is `min(0.05/Γ, 0.02·2π/(2Ω))`.
pub fn max_step(gen: &GeneratorMatrix) -> f64 {
    let lambda = gen.lambda();
    let (mut w, mut g) = (0.0_f64, 0.0_f64);
    for k in 0..lambda.nrows() {
        w = w.max(lambda[(k, k)].im.abs());
        g = g.max(lambda[(k, k)].re.abs());
    }
    let by_phase = if w > 0.0 {
        0.02 * 2.0 * PI / w
    } else {
        f64::INFINITY
    };
    let by_decay = if g > 0.0 { 0.1 / g } else { f64::INFINITY };
    by_phase.min(by_decay)
}

/// Propagator over one step of length `dt`.
pub fn one_step_matrix(gen: &GeneratorMatrix, dt: f64, stepper: Stepper) -> CMatrix {
    let a = gen.lambda() * wgqed_core::c64(dt, 0.0);
    match stepper {
        Stepper::Exponential => a.exp(),
        Stepper::Rk4 => {
            let n = a.nrows();
            let id = CMatrix::identity(n, n);
            // Horner form of 1 + A + A²/2 + A³/6 + A⁴/24.
            let mut r = &id + &a * wgqed_core::c64(0.25, 0.0);
            r = &id + &a * r * wgqed_core::c64(1.0 / 3.0, 0.0);
            r = &id + &a * r * wgqed_core::c64(0.5, 0.0);
            &id + &a * r
        }
    }
}

/// Number of steps of size `dt` that exactly cover `[0, t_max]`.
pub(crate) fn step_count(t_max: f64, dt: f64) -> Result<usize, DynamicsError> {
    if !(dt.is_finite() && dt > 0.0) {
        return Err(DynamicsError::Grid(format!(
            "time step {dt} must be positive"
        )));
    }
    if !(t_max.is_finite() && t_max >= 0.0) {
        return Err(DynamicsError::Grid(format!(
            "final time {t_max} must be non-negative"
        )));
    }
    let x = t_max / dt;
    let n = x.round();
    if (x - n).abs() > 1e-6 {
        return Err(DynamicsError::Grid(format!(
            "final time {t_max} is not a multiple of dt = {dt}"
        )));
    }
    Ok(n as usize)
}

pub(crate) fn check_step(gen: &GeneratorMatrix, dt: f64) -> Result<(), DynamicsError> {
    let max = max_step(gen);
    if dt > max * (1.0 + 1e-12) {
        return Err(DynamicsError::StepTooLarge { dt, max });
    }
    Ok(())
}

/// Fourth-order Runge-Kutta field on `0, dt, …, t_max`.
pub fn evolve_field(
    gen: &GeneratorMatrix,
    t_max: f64,
    dt: f64,
) -> Result<TransitionOperatorField, DynamicsError> {
    evolve_field_with(gen, t_max, dt, EvolveOptions::default())
}

/// Field on the grid `0, s·dt, 2s·dt, …, t_max` with `s = record_every`.
pub fn evolve_field_with(
    gen: &GeneratorMatrix,
    t_max: f64,
    dt: f64,
    opts: EvolveOptions,
) -> Result<TransitionOperatorField, DynamicsError> {
    check_step(gen, dt)?;
    let steps = step_count(t_max, dt)?;
    let every = opts.record_every.max(1);
    if steps % every != 0 {
        return Err(DynamicsError::Grid(format!(
            "{steps} steps cannot be recorded every {every} steps"
        )));
    }
    let dim = gen.dim();
    let r = one_step_matrix(gen, dt, opts.stepper);
    let mut c = CMatrix::identity(dim * dim, dim * dim);
    let mut snaps = Vec::with_capacity(steps / every + 1);
    snaps.push(TransitionCoefficients::new(dim, opts.basis, c.clone())?);
    for k in 1..=steps {
        c = &r * &c;
        if k % every == 0 {
            if c.iter().any(|z| !(z.re.is_finite() && z.im.is_finite())) {
                return Err(DynamicsError::NonFinite(format!(
                    "field at t = {}",
                    k as f64 * dt
                )));
            }
            snaps.push(TransitionCoefficients::new(dim, opts.basis, c.clone())?);
        }
    }
    Ok(TransitionOperatorField::new(dt * every as f64, snaps)?)
}

/// `C(t) = e^{tΛ}` at an arbitrary time.
pub fn field_at(
    gen: &GeneratorMatrix,
    t: f64,
    basis: OperatorBasis,
) -> Result<TransitionCoefficients, DynamicsError> {
    if !(t.is_finite() && t >= 0.0) {
        return Err(DynamicsError::Grid(format!(
            "time {t} must be non-negative"
        )));
    }
    let c = (gen.lambda() * wgqed_core::c64(t, 0.0)).exp();
    if c.iter().any(|z| !(z.re.is_finite() && z.im.is_finite())) {
        return Err(DynamicsError::NonFinite(format!(
            "matrix exponential at t = {t}"
        )));
    }
    Ok(TransitionCoefficients::new(gen.dim(), basis, c)?)
}
