//! A single qubit decaying into the waveguide.

use std::fmt;

use wgqed_core::{
    c64, density_from_pure, CMatrix, CoreError, DensityMatrix, OperatorBasis, StateVector,
    TransitionCoefficients, TransitionOperatorField, C64,
};

use crate::error::{check_time, ClosedFormError};
use crate::util::exp_integral;

/// Named one-qubit states: `e`, `g`, and `s = (|e⟩ + |g⟩)/√2`.
#[derive(Debug, Clone, PartialEq)]
pub enum OneQubitTag {
    E,
    G,
    S,
    Custom(DensityMatrix),
}

impl OneQubitTag {
    pub const NAMED: [OneQubitTag; 3] = [OneQubitTag::E, OneQubitTag::G, OneQubitTag::S];

    pub fn parse(s: &str) -> Result<Self, ClosedFormError> {
        Ok(match s {
            "e" => Self::E,
            "g" => Self::G,
            "s" => Self::S,
            other => return Err(ClosedFormError::InvalidTag(other.to_string())),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::E => "e",
            Self::G => "g",
            Self::S => "s",
            Self::Custom(_) => "custom",
        }
    }

    pub fn state(&self) -> Option<StateVector> {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        Some(match self {
            Self::G => StateVector::basis_state(2, 0),
            Self::E => StateVector::basis_state(2, 1),
            Self::S => StateVector::new(vec![c64(h, 0.0), c64(h, 0.0)]).expect("normalized"),
            Self::Custom(_) => return None,
        })
    }

    pub fn density(&self) -> Result<DensityMatrix, ClosedFormError> {
        match self {
            Self::Custom(rho) if rho.dim() == 2 => Ok(rho.clone()),
            Self::Custom(rho) => Err(CoreError::DimensionMismatch {
                expected: 2,
                found: rho.dim(),
            }
            .into()),
            named => Ok(density_from_pure(&named.state().expect("named tag"))?),
        }
    }
}

impl fmt::Display for OneQubitTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Closed forms for one qubit with frequency `Ω` and decay rate `Γ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OneQubit {
    pub omega: f64,
    pub gamma: f64,
}

impl OneQubit {
    pub fn new(omega: f64, gamma: f64) -> Result<Self, ClosedFormError> {
        if !(omega.is_finite() && omega > 0.0 && gamma.is_finite() && gamma > 0.0) {
            return Err(CoreError::InvalidConfig(format!(
                "need omega > 0 and gamma > 0, got {omega}, {gamma}"
            ))
            .into());
        }
        Ok(Self { omega, gamma })
    }

    /// `⟨P_ij(t)⟩` in the `(g, e)` basis.
    pub fn coefficients(&self, t: f64) -> Result<TransitionCoefficients, ClosedFormError> {
        check_time(t)?;
        let decay = (-self.gamma * t).exp();
        let coherence = (c64(-0.5 * self.gamma, self.omega) * t).exp();
        // rows and columns ordered gg, ge, eg, ee
        let mut c = CMatrix::zeros(4, 4);
        c[(0, 0)] = c64(1.0, 0.0);
        c[(0, 3)] = c64(-(-self.gamma * t).exp_m1(), 0.0);
        c[(1, 1)] = coherence.conj();
        c[(2, 2)] = coherence;
        c[(3, 3)] = c64(decay, 0.0);
        Ok(TransitionCoefficients::new(2, OperatorBasis::Product, c)?)
    }

    /// Coefficients on the grid `0, dt, …, steps·dt`.
    pub fn field(&self, dt: f64, steps: usize) -> Result<TransitionOperatorField, ClosedFormError> {
        let snaps = (0..=steps)
            .map(|k| self.coefficients(k as f64 * dt))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(TransitionOperatorField::new(dt, snaps)?)
    }

    /// Probability of finding the named state `to` at time `t`.
    ///
    /// Named pairs use the explicit formulas; a custom initial state goes
    /// through the transition-operator coefficients.
    pub fn probability(
        &self,
        from: &OneQubitTag,
        to: &OneQubitTag,
        t: f64,
    ) -> Result<f64, ClosedFormError> {
        check_time(t)?;
        let target = to
            .state()
            .ok_or_else(|| ClosedFormError::InvalidTag("custom final state".to_string()))?;
        let d = (-self.gamma * t).exp();
        let h = (-0.5 * self.gamma * t).exp();
        let rabi = (self.omega * t).cos();
        use OneQubitTag::*;
        Ok(match (from, to) {
            (E, E) => d,
            (E, G) => -(-self.gamma * t).exp_m1(),
            (E, S) => 0.5,
            (G, E) => 0.0,
            (G, G) => 1.0,
            (G, S) => 0.5,
            (S, S) => 0.5 * (1.0 + h * rabi),
            (S, E) => 0.5 * d,
            (S, G) => 1.0 - 0.5 * d,
            (Custom(rho), _) => {
                let rho = OneQubitTag::Custom(rho.clone()).density()?;
                self.coefficients(t)?
                    .probability(rho.matrix(), target.amplitudes())
            }
            (_, Custom(_)) => unreachable!("rejected above"),
        })
    }

    /// Finite-time spectrum `Γ |∫_0^t e^{(iδ-Γ/2)τ} dτ|² ρ_ee`.
    pub fn spectrum(
        &self,
        w: f64,
        t: f64,
        excited_population: f64,
    ) -> Result<f64, ClosedFormError> {
        check_time(t)?;
        let f = exp_integral(c64(-0.5 * self.gamma, w - self.omega), t);
        Ok(self.gamma * f.norm_sqr() * excited_population)
    }

    /// Lorentzian `Γ / (δ² + Γ²/4)` times `ρ_ee`.
    pub fn spectral_density(&self, w: f64, excited_population: f64) -> f64 {
        let d = w - self.omega;
        self.gamma / (d * d + 0.25 * self.gamma * self.gamma) * excited_population
    }

    /// `W(t) = (Γ/2) e^{-Γt} ρ_ee`.
    pub fn emission_rate(&self, t: f64, excited_population: f64) -> Result<f64, ClosedFormError> {
        check_time(t)?;
        Ok(0.5 * self.gamma * (-self.gamma * t).exp() * excited_population)
    }

    /// `(⟨a_k(t)⟩, ⟨a_k†(t)⟩)` in units of the mode coupling, given
    /// `ρ_eg = ⟨e|ρ(0)|g⟩`.
    pub fn photon_means(&self, w: f64, t: f64, rho_eg: C64) -> Result<(C64, C64), ClosedFormError> {
        check_time(t)?;
        let f = exp_integral(c64(-0.5 * self.gamma, w - self.omega), t);
        let a = c64(0.0, -1.0) * c64(0.0, -w * t).exp() * f * rho_eg;
        Ok((a, a.conj()))
    }
}
