//! Density matrices and multi-time correlators read off a field.
//!
//! With `E_t` the Schrödinger-picture map dual to the Heisenberg map `Φ_t`
//! stored in the field, `⟨l|E_t(X)|m⟩ = Tr[X ⟨P_ml(t)⟩]`, the quantum
//! regression rule gives every time-ordered correlator from repeated
//! applications of `E`.

use wgqed_core::{
    c64, spin_matrix, CMatrix, DensityMatrix, OperatorBasis, SpinOp, TransitionOperatorField, C64,
};

use crate::error::DynamicsError;

fn check_dim(field: &TransitionOperatorField, rho0: &DensityMatrix) -> Result<(), DynamicsError> {
    if rho0.dim() != field.dim() {
        return Err(wgqed_core::CoreError::DimensionMismatch {
            expected: field.dim(),
            found: rho0.dim(),
        }
        .into());
    }
    Ok(())
}

fn check_product(field: &TransitionOperatorField) -> Result<(), DynamicsError> {
    match field.at_index(0).basis() {
        OperatorBasis::Product => Ok(()),
        other => Err(DynamicsError::Invalid(format!(
            "spin operators need a product-basis field, got {other:?}"
        ))),
    }
}

/// `ρ(t)` with `⟨l|ρ(t)|m⟩ = Σ_nq ⟨n|ρ(0)|q⟩ ⟨q|⟨P_ml(t)⟩|n⟩`.
///
/// `rho0` must be written in the field's basis and `t` must be a grid point.
/// The result is symmetrized and validated as a density matrix.
pub fn density_evolution(
    field: &TransitionOperatorField,
    rho0: &DensityMatrix,
    t: f64,
) -> Result<DensityMatrix, DynamicsError> {
    check_dim(field, rho0)?;
    let m = field.at(t)?.evolve_density(rho0.matrix());
    let sym = (&m + m.adjoint()).unscale(2.0);
    Ok(DensityMatrix::new_evolved(sym)?)
}

/// `⟨σ₊ⁿ(τ) σ₋ᵐ(τ′)⟩` for qubits `n`, `m` (0-based) at grid times.
///
/// For `τ ≥ τ′` this is `Tr[σ₊ⁿ E_{τ-τ′}(σ₋ᵐ ρ(τ′))]`, for `τ < τ′` it is
/// `Tr[σ₊ⁿ Φ_{τ′-τ}(σ₋ᵐ) ρ(τ)]`.
pub fn two_time_correlator(
    field: &TransitionOperatorField,
    rho0: &DensityMatrix,
    n: usize,
    m: usize,
    tau: f64,
    tau_prime: f64,
) -> Result<C64, DynamicsError> {
    check_dim(field, rho0)?;
    check_product(field)?;
    let q = rho0.n_qubits();
    let sp = spin_matrix(SpinOp::Raise, n, q)?;
    let sm = spin_matrix(SpinOp::Lower, m, q)?;
    let (a, b) = (field.index_of(tau)?, field.index_of(tau_prime)?);
    if a >= b {
        let rho = field.at_index(b).evolve_density(rho0.matrix());
        let inner = field.at_index(a - b).evolve_density(&(sm * rho));
        Ok((sp * inner).trace())
    } else {
        let rho = field.at_index(a).evolve_density(rho0.matrix());
        let lowered = field.at_index(b - a).heisenberg(&sm);
        Ok((sp * lowered * rho).trace())
    }
}

/// `⟨A₁(t₁) A₂(t₂) ⋯ A_k(t_k)⟩` for `t₁ ≥ t₂ ≥ ⋯ ≥ t_k ≥ 0`, reduced
/// recursively to `Tr[A₁ E_{t₁-t₂}(A₂ E_{t₂-t₃}(⋯ A_k E_{t_k}(ρ(0))))]`.
///
/// Operators are given in the field's basis.
pub fn time_ordered_correlator(
    field: &TransitionOperatorField,
    rho0: &DensityMatrix,
    factors: &[(CMatrix, f64)],
) -> Result<C64, DynamicsError> {
    check_dim(field, rho0)?;
    let d = field.dim();
    let mut idx = Vec::with_capacity(factors.len());
    for (op, t) in factors {
        if op.shape() != (d, d) {
            return Err(wgqed_core::CoreError::DimensionMismatch {
                expected: d,
                found: op.nrows(),
            }
            .into());
        }
        idx.push(field.index_of(*t)?);
    }
    if idx.windows(2).any(|w| w[0] < w[1]) {
        return Err(DynamicsError::Invalid(
            "correlator times must be non-increasing".into(),
        ));
    }
    let Some((&last, _)) = idx.split_last() else {
        return Ok(c64(1.0, 0.0));
    };
    let mut state = field.at_index(last).evolve_density(rho0.matrix());
    for k in (1..factors.len()).rev() {
        state = field
            .at_index(idx[k - 1] - idx[k])
            .evolve_density(&(&factors[k].0 * state));
    }
    Ok((&factors[0].0 * state).trace())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evolve::evolve_field;
    use wgqed_core::{
        build_generator, density_from_pure, pairwise_rates, StateVector, SystemConfig,
    };

    fn one_qubit_field() -> TransitionOperatorField {
        let cfg = SystemConfig::one_qubit(20.0, 1.0).unwrap();
        let g = build_generator(&cfg, &pairwise_rates(&cfg)).unwrap();
        evolve_field(&g, 1.0, 1e-3).unwrap()
    }

    fn excited() -> DensityMatrix {
        density_from_pure(&StateVector::basis_state(2, 1)).unwrap()
    }

    #[test]
    fn equal_time_correlator_is_population() {
        let f = one_qubit_field();
        let v = two_time_correlator(&f, &excited(), 0, 0, 0.0, 0.0).unwrap();
        assert!((v - c64(1.0, 0.0)).norm() < 1e-15);
        let v = two_time_correlator(&f, &excited(), 0, 0, 0.5, 0.5).unwrap();
        assert!((v.re - (-0.5f64).exp()).abs() < 1e-9);
    }

    #[test]
    fn two_factor_reduction_matches_correlator() {
        let f = one_qubit_field();
        let sp = spin_matrix(SpinOp::Raise, 0, 1).unwrap();
        let sm = spin_matrix(SpinOp::Lower, 0, 1).unwrap();
        let a = time_ordered_correlator(&f, &excited(), &[(sp, 0.7), (sm, 0.2)]).unwrap();
        let b = two_time_correlator(&f, &excited(), 0, 0, 0.7, 0.2).unwrap();
        assert!((a - b).norm() < 1e-15);
    }

    #[test]
    fn increasing_times_rejected() {
        let f = one_qubit_field();
        let id = CMatrix::identity(2, 2);
        assert!(time_ordered_correlator(&f, &excited(), &[(id.clone(), 0.1), (id, 0.2)]).is_err());
    }

    #[test]
    fn off_grid_time_rejected() {
        let f = one_qubit_field();
        assert!(density_evolution(&f, &excited(), 0.0005).is_err());
        assert!(two_time_correlator(&f, &excited(), 0, 0, 0.3, 2.0).is_err());
    }
}
