//! Emission rate and one-photon field means from a field.
//!
//! Both use the `+k` collective lowering operator
//! `J₋ = Σ_n e^{-i k0 x_n} σ₋ⁿ` with `k0 x_n` taken from the configured
//! phases.

use wgqed_core::{
    c64, spin_matrix, CMatrix, DensityMatrix, SpinOp, SystemConfig, TransitionOperatorField, C64,
};

use crate::error::DynamicsError;
use crate::quadrature::simpson;

const I: C64 = C64 { re: 0.0, im: 1.0 };

/// Values on a uniform time grid.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    pub times: Vec<f64>,
    pub values: Vec<f64>,
}

/// `J₋` for the configured register in the product basis.
pub fn collective_lowering(config: &SystemConfig) -> Result<CMatrix, DynamicsError> {
    let n = config.n_qubits;
    let d = config.dimension();
    let mut j = CMatrix::zeros(d, d);
    for (q, ph) in config.phases.iter().enumerate() {
        j += spin_matrix(SpinOp::Lower, q, n)? * c64(0.0, -ph).exp();
    }
    Ok(j)
}

fn check(
    field: &TransitionOperatorField,
    rho0: &DensityMatrix,
    config: &SystemConfig,
) -> Result<(), DynamicsError> {
    let d = config.dimension();
    for found in [field.dim(), rho0.dim()] {
        if found != d {
            return Err(wgqed_core::CoreError::DimensionMismatch { expected: d, found }.into());
        }
    }
    Ok(())
}

fn rate_at(
    field: &TransitionOperatorField,
    rho0: &CMatrix,
    k: usize,
    number: &CMatrix,
    gamma: f64,
) -> f64 {
    let rho = field.at_index(k).evolve_density(rho0);
    0.5 * gamma * (rho * number).trace().re
}

/// `W(t) = (Γ/2) Tr[ρ(t) J₊J₋]`.
pub fn emission_rate_numeric(
    field: &TransitionOperatorField,
    rho0: &DensityMatrix,
    t: f64,
    config: &SystemConfig,
) -> Result<f64, DynamicsError> {
    check(field, rho0, config)?;
    let jm = collective_lowering(config)?;
    let number = jm.adjoint() * jm;
    Ok(rate_at(
        field,
        rho0.matrix(),
        field.index_of(t)?,
        &number,
        config.gamma,
    ))
}

/// `W(t)` at every grid point of the field.
pub fn emission_rate_series(
    field: &TransitionOperatorField,
    rho0: &DensityMatrix,
    config: &SystemConfig,
) -> Result<TimeSeries, DynamicsError> {
    check(field, rho0, config)?;
    let jm = collective_lowering(config)?;
    let number = jm.adjoint() * jm;
    let values = (0..field.len())
        .map(|k| rate_at(field, rho0.matrix(), k, &number, config.gamma))
        .collect();
    Ok(TimeSeries {
        times: field.times(),
        values,
    })
}

/// `(⟨a_k(t)⟩, ⟨a_k†(t)⟩)` in units of the mode coupling, with
/// `⟨a_k(t)⟩ = -i e^{-iωt} ∫_0^t e^{iωτ} Tr[ρ(τ) J₋] dτ` and
/// `⟨a_k†(t)⟩ = i e^{iωt} ∫_0^t e^{-iωτ} Tr[ρ(τ) J₊] dτ`, each by Simpson's
/// rule on the field grid.
pub fn photon_mean_pair(
    field: &TransitionOperatorField,
    rho0: &DensityMatrix,
    w: f64,
    t: f64,
    config: &SystemConfig,
) -> Result<(C64, C64), DynamicsError> {
    check(field, rho0, config)?;
    let end = field.index_of(t)?;
    let jm = collective_lowering(config)?;
    let jp = jm.adjoint();
    let h = field.dt();
    let mut lower = Vec::with_capacity(end + 1);
    let mut raise = Vec::with_capacity(end + 1);
    for k in 0..=end {
        let rho = field.at_index(k).evolve_density(rho0.matrix());
        let phase = c64(0.0, w * k as f64 * h).exp();
        lower.push(phase * (&rho * &jm).trace());
        raise.push(phase.conj() * (&rho * &jp).trace());
    }
    let t = end as f64 * h;
    let a = -I * c64(0.0, -w * t).exp() * simpson(&lower, h);
    let ad = I * c64(0.0, w * t).exp() * simpson(&raise, h);
    if !(a.re.is_finite() && a.im.is_finite() && ad.re.is_finite() && ad.im.is_finite()) {
        return Err(DynamicsError::NonFinite(format!(
            "photon mean at omega = {w}"
        )));
    }
    Ok((a, ad))
}

/// `⟨a_k(t)⟩` in units of the mode coupling; see [`photon_mean_pair`].
pub fn photon_mean_numeric(
    field: &TransitionOperatorField,
    rho0: &DensityMatrix,
    w: f64,
    t: f64,
    config: &SystemConfig,
) -> Result<C64, DynamicsError> {
    Ok(photon_mean_pair(field, rho0, w, t, config)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evolve::evolve_field;
    use wgqed_core::{build_generator, density_from_pure, pairwise_rates, StateVector};

    fn setup() -> (SystemConfig, TransitionOperatorField) {
        let cfg = SystemConfig::one_qubit(20.0, 1.0).unwrap();
        let g = build_generator(&cfg, &pairwise_rates(&cfg)).unwrap();
        let f = evolve_field(&g, 2.0, 1e-3).unwrap();
        (cfg, f)
    }

    #[test]
    fn one_qubit_rate_is_half_decay() {
        let (cfg, f) = setup();
        let rho = density_from_pure(&StateVector::basis_state(2, 1)).unwrap();
        for t in [0.0, 0.5, 2.0] {
            let w = emission_rate_numeric(&f, &rho, t, &cfg).unwrap();
            assert!((w - 0.5 * (-t).exp()).abs() < 1e-9);
        }
        let s = emission_rate_series(&f, &rho, &cfg).unwrap();
        assert_eq!(s.values.len(), f.len());
    }

    #[test]
    fn no_mean_at_start_or_without_coherence() {
        let (cfg, f) = setup();
        let plus = StateVector::new(vec![c64(1.0, 0.0), c64(1.0, 0.0)])
            .unwrap()
            .normalize()
            .unwrap();
        let rho = density_from_pure(&plus).unwrap();
        assert_eq!(
            photon_mean_numeric(&f, &rho, 20.0, 0.0, &cfg).unwrap(),
            c64(0.0, 0.0)
        );
        let e = density_from_pure(&StateVector::basis_state(2, 1)).unwrap();
        assert_eq!(
            photon_mean_numeric(&f, &e, 20.0, 1.0, &cfg).unwrap().norm(),
            0.0
        );
    }

    #[test]
    fn one_qubit_mean_closed_form() {
        let (cfg, f) = setup();
        let plus = StateVector::new(vec![c64(1.0, 0.0), c64(1.0, 0.0)])
            .unwrap()
            .normalize()
            .unwrap();
        let rho = density_from_pure(&plus).unwrap();
        let (w, t) = (19.5, 1.5);
        let z = c64(-0.5, w - 20.0);
        let want = -I * c64(0.0, -w * t).exp() * ((z * t).exp() - 1.0) / z * 0.5;
        let (a, ad) = photon_mean_pair(&f, &rho, w, t, &cfg).unwrap();
        assert!((a - want).norm() < 1e-7, "{a} vs {want}");
        assert!((ad - a.conj()).norm() < 1e-12);
    }
}
