//! One-photon field means `⟨a_k(t)⟩ / g_k` for `k` in the `+k` direction.

use wgqed_core::{c64, DensityMatrix, C64};

use super::coefficients::coherence_entries;
use super::{collective_lowering, to_bell};
use crate::error::{check_time, ClosedFormError};
use crate::params::TwoQubitParams;
use crate::tags::InitialStateTag;
use crate::util::exp_integral;

const I: C64 = C64 { re: 0.0, im: 1.0 };

/// `⟨a_k(t)⟩ = -i e^{-iωt} ∫_0^t e^{iωτ} Tr[ρ(0) ⟨J₋(τ)⟩] dτ` for any initial
/// density matrix, integrating each exponential of the coefficients exactly.
pub fn photon_mean_density(
    p: &TwoQubitParams,
    rho: &DensityMatrix,
    w: f64,
    t: f64,
) -> Result<C64, ClosedFormError> {
    check_time(t)?;
    if rho.dim() != 4 {
        return Err(wgqed_core::CoreError::NotTwoQubits(rho.n_qubits()).into());
    }
    let jm = to_bell(&collective_lowering(p));
    let rho = to_bell(rho.matrix());
    let mut acc = c64(0.0, 0.0);
    // J₋ only connects states differing by one excitation, so every
    // contributing row is a coherence.
    for entry in coherence_entries(p) {
        let weight = jm[(entry.row.0, entry.row.1)] * rho[(entry.col.1, entry.col.0)];
        if weight == c64(0.0, 0.0) {
            continue;
        }
        for term in &entry.terms {
            acc += weight * term.amp * exp_integral(term.rate + I * w, t);
        }
    }
    Ok(-I * c64(0.0, -w * t).exp() * acc)
}

/// Field mean for a named initial state. Zero for every state without a
/// coherence between neighbouring excitation numbers.
pub fn photon_mean(
    p: &TwoQubitParams,
    tag: &InitialStateTag,
    w: f64,
    t: f64,
) -> Result<C64, ClosedFormError> {
    check_time(t)?;
    let (ch, sh) = p.half_angle();
    let (dp, dm) = (p.delta_plus(w), p.delta_minus(w));
    let (hp, hm, g) = (0.5 * p.gamma_plus, 0.5 * p.gamma_minus, p.gamma);
    let f = |re: f64, im: f64| exp_integral(c64(re, im), t);
    let phase = c64(0.0, -w * t).exp();
    let fwd = c64(0.0, p.k0d).exp();
    // Emission from |S⟩ and |A⟩ prepared by the decay of |E⟩.
    let cascade_s = || {
        -I * 0.5 * phase * ch / c64(1.0, -p.sin)
            * ((1.0 + p.cos) * f(-hp, dp) - fwd * f(-hp - g, dm))
    };
    Ok(match tag {
        InitialStateTag::E
        | InitialStateTag::S
        | InitialStateTag::A
        | InitialStateTag::Eg
        | InitialStateTag::Ge => c64(0.0, 0.0),
        InitialStateTag::S1G2 => -I * 0.5 * phase * (ch * f(-hp, dp) + I * sh * f(-hm, dm)),
        InitialStateTag::S1E2 => {
            cascade_s()
                + 0.5 * phase * sh / c64(1.0, p.sin)
                    * ((1.0 - p.cos) * f(-hm, dm) + fwd * f(-hm - g, dp))
        }
        InitialStateTag::S1S2 => cascade_s() - I * 0.5 * phase * ch * f(-hp, dp),
        InitialStateTag::Custom(rho) => photon_mean_density(p, rho, w, t)?,
    })
}
