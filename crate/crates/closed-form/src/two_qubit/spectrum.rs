//! Emission spectra `S(ω, t)` for photons travelling in the `+k` direction.

use wgqed_core::{c64, C64};

use super::SpectrumTime;
use crate::error::{check_time, ClosedFormError};
use crate::params::{Degeneracy, TwoQubitParams};
use crate::tags::InitialStateTag;
use crate::util::{exp_integral, exp_integral_inf};

const I: C64 = C64 { re: 0.0, im: 1.0 };

/// `∫_0^t e^{zτ} dτ`, or its long-time limit.
fn integral(z: C64, time: SpectrumTime) -> C64 {
    match time {
        SpectrumTime::Finite(t) => exp_integral(z, t),
        SpectrumTime::Infinite => exp_integral_inf(z),
    }
}

/// `e^{zt}`, which vanishes in the long-time limit for decaying `z`.
fn decay(z: C64, time: SpectrumTime) -> C64 {
    match time {
        SpectrumTime::Finite(t) => (z * t).exp(),
        SpectrumTime::Infinite => c64(0.0, 0.0),
    }
}

fn check(time: SpectrumTime) -> Result<(), ClosedFormError> {
    match time {
        SpectrumTime::Finite(t) => check_time(t),
        SpectrumTime::Infinite => Ok(()),
    }
}

fn lorentz_channel(rate: f64, delta: f64, time: SpectrumTime) -> f64 {
    rate * integral(c64(-0.5 * rate, delta), time).norm_sqr()
}

/// Symmetric Bell state, `Γ₊ |∫ e^{(iδ₊-Γ₊/2)τ}|²`.
///
/// The single-excitation spectra are evaluated at `k0d = nπ` inside the
/// degenerate window, so the dark channel gives exactly zero there.
pub fn spectrum_symmetric(
    p: &TwoQubitParams,
    w: f64,
    time: SpectrumTime,
) -> Result<f64, ClosedFormError> {
    check(time)?;
    let p = &p.at_degenerate_limit();
    Ok(lorentz_channel(p.gamma_plus, p.delta_plus(w), time))
}

/// Antisymmetric Bell state, `Γ₋ |∫ e^{(iδ₋-Γ₋/2)τ}|²`.
pub fn spectrum_antisymmetric(
    p: &TwoQubitParams,
    w: f64,
    time: SpectrumTime,
) -> Result<f64, ClosedFormError> {
    check(time)?;
    let p = &p.at_degenerate_limit();
    Ok(lorentz_channel(p.gamma_minus, p.delta_minus(w), time))
}

/// Cross term between the symmetric and antisymmetric channels.
fn interference(p: &TwoQubitParams, w: f64, time: SpectrumTime) -> f64 {
    let p = &p.at_degenerate_limit();
    let (dp, dm) = (p.delta_plus(w), p.delta_minus(w));
    let hp = 0.5 * p.gamma_plus;
    let hm = 0.5 * p.gamma_minus;
    let first = -integral(c64(-hm, -dm), time) * integral(c64(-hp, dp), time);
    let second = -integral(c64(-hp, -dp), time) * integral(c64(-hm, dm), time);
    (I * (0.5 * p.gamma * p.sin) * (first - second)).re
}

/// First qubit excited, `|eg⟩ = (|S⟩ - |A⟩)/√2`.
pub fn spectrum_eg(p: &TwoQubitParams, w: f64, time: SpectrumTime) -> Result<f64, ClosedFormError> {
    let base = 0.5 * (spectrum_symmetric(p, w, time)? + spectrum_antisymmetric(p, w, time)?);
    Ok(base + interference(p, w, time))
}

/// Second qubit excited, `|ge⟩ = (|S⟩ + |A⟩)/√2`.
pub fn spectrum_ge(p: &TwoQubitParams, w: f64, time: SpectrumTime) -> Result<f64, ClosedFormError> {
    let base = 0.5 * (spectrum_symmetric(p, w, time)? + spectrum_antisymmetric(p, w, time)?);
    Ok(base - interference(p, w, time))
}

/// Both qubits excited. Uses the limit form near `k0d = nπ`.
pub fn spectrum_doubly_excited(
    p: &TwoQubitParams,
    w: f64,
    time: SpectrumTime,
) -> Result<f64, ClosedFormError> {
    match p.degeneracy() {
        Degeneracy::None => spectrum_doubly_excited_generic(p, w, time),
        Degeneracy::Even | Degeneracy::Odd => {
            spectrum_doubly_excited_limit(p.omega, p.gamma, w, time)
        }
    }
}

/// Both qubits excited, generic `k0d`. Not valid when `Γ₊` or `Γ₋` is zero.
pub fn spectrum_doubly_excited_generic(
    p: &TwoQubitParams,
    w: f64,
    time: SpectrumTime,
) -> Result<f64, ClosedFormError> {
    check(time)?;
    if p.gamma_plus == 0.0 || p.gamma_minus == 0.0 {
        return Err(ClosedFormError::Unsupported(
            "generic doubly-excited spectrum with a vanishing collective rate".to_string(),
        ));
    }
    let g = p.gamma;
    let (gp, gm) = (p.gamma_plus, p.gamma_minus);
    let (dp, dm) = (p.delta_plus(w), p.delta_minus(w));
    let ex = |z: C64| decay(z, time);
    let one = c64(1.0, 0.0);
    let s = p.sin;
    let fwd = c64(0.0, p.k0d).exp();
    let back = fwd.conj();
    let plus_is = c64(1.0, s);
    let minus_is = c64(1.0, -s);
    let idp = c64(0.0, dp);
    let idm = c64(0.0, dm);

    let mut r = c64(
        gp / gm * lorentz_channel(gp, dp, time) + gm / gp * lorentz_channel(gm, dm, time),
        0.0,
    );
    let bracket = back / (gp * plus_is * (idm - 0.5 * gm))
        - back / (gm * minus_is * (idp - 0.5 * gp))
        + fwd / (gm * plus_is * (idp - 0.5 * gm - g))
        - fwd / (gp * minus_is * (idm - 0.5 * gp - g));
    r += (gp * gp + gm * gm) / (2.0 * g) * (ex(c64(-2.0 * g, 0.0)) - one) * bracket;
    r += fwd / (gp * minus_is)
        * (ex(-(idm + 0.5 * gm)) - one)
        * (gm * gm + gp * gp * ex(idm - 0.5 * gp - g))
        / ((idm + 0.5 * gm) * (idm - 0.5 * gp - g));
    r -= fwd / (gm * plus_is)
        * (ex(-(idp + 0.5 * gp)) - one)
        * (gp * gp + gm * gm * ex(idp - 0.5 * gm - g))
        / ((idp + 0.5 * gp) * (idp - 0.5 * gm - g));
    r += back / (gm * minus_is)
        * (ex(-(idp + 0.5 * gm + g)) - one)
        * (gm * gm + gp * gp * ex(idp - 0.5 * gp))
        / ((idp - 0.5 * gp) * (idp + 0.5 * gm + g));
    r -= back / (gp * plus_is)
        * (ex(-(idm + 0.5 * gp + g)) - one)
        * (gp * gp + gm * gm * ex(idm - 0.5 * gm))
        / ((idm - 0.5 * gm) * (idm + 0.5 * gp + g));
    Ok(r.re)
}

/// Both qubits excited at `k0d = nπ`, where one collective channel is dark
/// and the other decays at `2Γ`. Detuning is measured from `Ω`.
pub fn spectrum_doubly_excited_limit(
    omega: f64,
    gamma: f64,
    w: f64,
    time: SpectrumTime,
) -> Result<f64, ClosedFormError> {
    check(time)?;
    let d = w - omega;
    // The expression has a removable singularity at zero detuning.
    if d.abs() < 1e-6 {
        let h = 1e-5;
        return Ok(0.5 * (limit_form(gamma, d + h, time) + limit_form(gamma, d - h, time)));
    }
    Ok(limit_form(gamma, d, time))
}

fn limit_form(g: f64, d: f64, time: SpectrumTime) -> f64 {
    let ex = |z: C64| decay(z, time);
    let one = c64(1.0, 0.0);
    let id = c64(0.0, d);
    let t_ex2 = match time {
        SpectrumTime::Finite(t) => t * (-2.0 * g * t).exp(),
        SpectrumTime::Infinite => 0.0,
    };
    let e2 = ex(c64(-2.0 * g, 0.0));
    let mut r = 4.0 * g * (ex(-(id + g)) - one) * (ex(id - g) - one) / (d * d + g * g);
    r += 2.0 * g * g * g / (id * (id - g) * (id - g) * (id - 2.0 * g));
    r += 2.0 * g * e2 / ((id - g) * (id - g));
    r -= 2.0 * g * (ex(-(id + 2.0 * g)) - one) / (id * (id + 2.0 * g));
    r -= 2.0 * g * ex(id - 2.0 * g) / (id * (id - 2.0 * g));
    r -= 4.0 * g * g / ((id - g) * (id - g)) * (ex(-(id + g)) - one) / (id + g);
    r += 4.0 * g * g / (id - g) * (ex(id - g) - e2) / ((id + g) * (id + g));
    r += c64(4.0 * g * g * t_ex2 / (d * d + g * g), 0.0);
    r.re
}

/// Spectrum for a named initial state.
///
/// States with a ground-state admixture radiate like their excited part:
/// `s1g2` gives half the `eg` spectrum, `s1e2` averages the doubly excited
/// and `ge` spectra, and `s1s2` combines a quarter of the doubly excited
/// spectrum with half the symmetric one.
pub fn spectrum(
    p: &TwoQubitParams,
    tag: &InitialStateTag,
    w: f64,
    time: SpectrumTime,
) -> Result<f64, ClosedFormError> {
    Ok(match tag {
        InitialStateTag::E => spectrum_doubly_excited(p, w, time)?,
        InitialStateTag::S => spectrum_symmetric(p, w, time)?,
        InitialStateTag::A => spectrum_antisymmetric(p, w, time)?,
        InitialStateTag::Eg => spectrum_eg(p, w, time)?,
        InitialStateTag::Ge => spectrum_ge(p, w, time)?,
        InitialStateTag::S1G2 => 0.5 * spectrum_eg(p, w, time)?,
        InitialStateTag::S1E2 => {
            0.5 * spectrum_doubly_excited(p, w, time)? + 0.5 * spectrum_ge(p, w, time)?
        }
        InitialStateTag::S1S2 => {
            0.25 * spectrum_doubly_excited(p, w, time)? + 0.5 * spectrum_symmetric(p, w, time)?
        }
        InitialStateTag::Custom(_) => {
            return Err(ClosedFormError::Unsupported(
                "spectrum of a custom density matrix (use the quadrature engine)".to_string(),
            ))
        }
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
    fn bright_symmetric_peak() {
        let v = spectrum_symmetric(&p(2.0 * PI), 20.0, SpectrumTime::Infinite).unwrap();
        assert!((v - 2.0).abs() < 1e-12);
    }

    #[test]
    fn dark_symmetric_is_zero() {
        for w in [15.0, 20.0, 20.5, 25.0] {
            assert_eq!(
                spectrum_symmetric(&p(PI), w, SpectrumTime::Infinite).unwrap(),
                0.0
            );
            assert_eq!(
                spectrum_symmetric(&p(PI), w, SpectrumTime::Finite(3.0)).unwrap(),
                0.0
            );
        }
    }

    #[test]
    fn eg_dip_at_quarter_wavelength() {
        let v = spectrum_eg(&p(PI / 2.0), 20.0, SpectrumTime::Infinite).unwrap();
        assert!(v.abs() < 1e-12, "{v}");
    }

    #[test]
    fn zero_time_gives_zero() {
        for tag in InitialStateTag::NAMED {
            for k in [0.4, PI, 2.0 * PI] {
                let v = spectrum(&p(k), &tag, 20.3, SpectrumTime::Finite(0.0)).unwrap();
                assert!(v.abs() < 1e-12, "{tag} {k}: {v}");
            }
        }
    }

    #[test]
    fn long_time_limit_of_doubly_excited() {
        let q = p(0.9);
        for w in [18.0, 19.6, 20.0, 20.4, 23.0] {
            let fin = spectrum_doubly_excited(&q, w, SpectrumTime::Finite(200.0)).unwrap();
            let inf = spectrum_doubly_excited(&q, w, SpectrumTime::Infinite).unwrap();
            assert!((fin - inf).abs() < 1e-9, "{w}: {fin} vs {inf}");
        }
        for w in [18.0, 20.0, 20.3] {
            let fin =
                spectrum_doubly_excited_limit(20.0, 1.0, w, SpectrumTime::Finite(40.0)).unwrap();
            let inf = spectrum_doubly_excited_limit(20.0, 1.0, w, SpectrumTime::Infinite).unwrap();
            assert!((fin - inf).abs() < 1e-9);
        }
    }

    #[test]
    fn custom_state_unsupported() {
        let tag = InitialStateTag::Custom(wgqed_core::DensityMatrix::maximally_mixed(4));
        assert!(matches!(
            spectrum(&p(1.0), &tag, 20.0, SpectrumTime::Infinite),
            Err(ClosedFormError::Unsupported(_))
        ));
    }
}
