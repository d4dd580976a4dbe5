//! Total emission rate `W(t)` into the `+k` direction.

use wgqed_core::{c64, DensityMatrix};

use super::{coefficients_product, collective_lowering};
use crate::error::{check_time, ClosedFormError};
use crate::params::TwoQubitParams;
use crate::tags::InitialStateTag;
use crate::util::decay_difference;

fn symmetric(p: &TwoQubitParams, t: f64) -> f64 {
    0.5 * p.gamma_plus * (-p.gamma_plus * t).exp()
}

fn antisymmetric(p: &TwoQubitParams, t: f64) -> f64 {
    0.5 * p.gamma_minus * (-p.gamma_minus * t).exp()
}

/// Single excitation on one qubit; `sign = +1` for `eg`, `-1` for `ge`.
fn single(p: &TwoQubitParams, t: f64, sign: f64) -> f64 {
    let g = p.gamma;
    0.25 * p.gamma_plus * (-p.gamma_plus * t).exp()
        + 0.25 * p.gamma_minus * (-p.gamma_minus * t).exp()
        - sign * 0.5 * g * p.sin * (-g * t).exp() * (g * p.sin * t).sin()
}

/// Both qubits excited: the doubly excited level radiates at `Γ` and each
/// single-excitation channel radiates what it receives from it.
///
/// Written with [`decay_difference`], this reduces to
/// `(1 + 2Γt) Γ e^{-2Γt}` at `k0d = nπ` without a separate branch.
fn doubly_excited(p: &TwoQubitParams, t: f64) -> f64 {
    let g = p.gamma;
    let w_es = p.gamma_plus * decay_difference(p.gamma_plus, 2.0 * g, t);
    let w_ea = p.gamma_minus * decay_difference(p.gamma_minus, 2.0 * g, t);
    g * (-2.0 * g * t).exp() + 0.5 * p.gamma_plus * w_es + 0.5 * p.gamma_minus * w_ea
}

/// `W(t) = (Γ/2) Tr[ρ(t) J₊J₋]` for an arbitrary initial density matrix.
pub fn emission_rate_density(
    p: &TwoQubitParams,
    rho: &DensityMatrix,
    t: f64,
) -> Result<f64, ClosedFormError> {
    check_time(t)?;
    if rho.dim() != 4 {
        return Err(wgqed_core::CoreError::NotTwoQubits(rho.n_qubits()).into());
    }
    let jm = collective_lowering(p);
    let number = jm.adjoint() * &jm;
    let rho_t = coefficients_product(p, t)?.evolve_density(rho.matrix());
    Ok((rho_t * number * c64(0.5 * p.gamma, 0.0)).trace().re)
}

/// Emission rate for a named initial state.
pub fn emission_rate(
    p: &TwoQubitParams,
    tag: &InitialStateTag,
    t: f64,
) -> Result<f64, ClosedFormError> {
    check_time(t)?;
    Ok(match tag {
        InitialStateTag::E => doubly_excited(p, t),
        InitialStateTag::S => symmetric(p, t),
        InitialStateTag::A => antisymmetric(p, t),
        InitialStateTag::Eg => single(p, t, 1.0),
        InitialStateTag::Ge => single(p, t, -1.0),
        InitialStateTag::S1G2 => 0.5 * single(p, t, 1.0),
        InitialStateTag::S1E2 => 0.5 * doubly_excited(p, t) + 0.5 * single(p, t, -1.0),
        InitialStateTag::S1S2 => 0.25 * doubly_excited(p, t) + 0.5 * symmetric(p, t),
        InitialStateTag::Custom(rho) => emission_rate_density(p, rho, t)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn p(k0d: f64) -> TwoQubitParams {
        TwoQubitParams::new(20.0, 1.0, k0d).unwrap()
    }

    #[test]
    fn named_forms_match_density_form() {
        for k in [0.3, PI / 4.0, PI / 2.0, PI, 2.0 * PI, 2.0 * PI - 1e-4] {
            let q = p(k);
            for tag in InitialStateTag::NAMED {
                let rho = tag.density().unwrap();
                for t in [0.0, 0.4, 1.7, 5.0] {
                    let a = emission_rate(&q, &tag, t).unwrap();
                    let b = emission_rate_density(&q, &rho, t).unwrap();
                    assert!((a - b).abs() < 1e-12, "{tag} k={k} t={t}: {a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn generic_doubly_excited_form() {
        let q = p(0.8);
        let (c, g) = (q.cos, q.gamma);
        for t in [0.0, 0.5, 2.0] {
            let printed = 0.5 * q.gamma_plus.powi(2) / q.gamma_minus * (-q.gamma_plus * t).exp()
                + 0.5 * q.gamma_minus.powi(2) / q.gamma_plus * (-q.gamma_minus * t).exp()
                - 4.0 * g * c * c / (1.0 - c * c) * (-2.0 * g * t).exp();
            assert!((doubly_excited(&q, t) - printed).abs() < 1e-12);
        }
    }

    #[test]
    fn limit_values() {
        let q = p(2.0 * PI);
        assert!((emission_rate(&q, &InitialStateTag::E, 0.0).unwrap() - 1.0).abs() < 1e-15);
        for t in [0.3_f64, 1.0, 4.0] {
            let want = (1.0 + 2.0 * t) * (-2.0 * t).exp();
            assert!((emission_rate(&q, &InitialStateTag::E, t).unwrap() - want).abs() < 1e-14);
            assert!(emission_rate(&q, &InitialStateTag::A, t).unwrap().abs() < 1e-15);
        }
        for t in [0.0, 2.0] {
            assert_eq!(emission_rate(&p(PI), &InitialStateTag::S, t).unwrap(), 0.0);
        }
    }
}
