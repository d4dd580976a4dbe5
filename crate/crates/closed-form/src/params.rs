use wgqed_core::tolerances::DEGENERATE_COS;
use wgqed_core::{CoreError, SystemConfig};

use crate::error::ClosedFormError;

/// Position of `k0d` relative to the points where one collective rate vanishes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degeneracy {
    /// `cos k0d` is not within tolerance of `±1`.
    None,
    /// `k0d ≈ 2nπ`: `Γ₋ → 0`, `|A⟩` is dark.
    Even,
    /// `k0d ≈ (2n+1)π`: `Γ₊ → 0`, `|S⟩` is dark.
    Odd,
}

/// Collective frequencies and rates of a qubit pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoQubitParams {
    pub omega: f64,
    pub gamma: f64,
    pub k0d: f64,
    pub cos: f64,
    pub sin: f64,
    /// `Ω₊ = Ω + (Γ/2) sin k0d`.
    pub omega_plus: f64,
    /// `Ω₋ = Ω - (Γ/2) sin k0d`.
    pub omega_minus: f64,
    /// `Γ₊ = Γ (1 + cos k0d)`.
    pub gamma_plus: f64,
    /// `Γ₋ = Γ (1 - cos k0d)`.
    pub gamma_minus: f64,
}

impl TwoQubitParams {
    pub fn new(omega: f64, gamma: f64, k0d: f64) -> Result<Self, ClosedFormError> {
        if !(omega.is_finite() && omega > 0.0) {
            return Err(
                CoreError::InvalidConfig(format!("omega must be positive, got {omega}")).into(),
            );
        }
        if !(gamma.is_finite() && gamma > 0.0) {
            return Err(
                CoreError::InvalidConfig(format!("gamma must be positive, got {gamma}")).into(),
            );
        }
        if !k0d.is_finite() {
            return Err(CoreError::InvalidConfig(format!("k0d must be finite, got {k0d}")).into());
        }
        let (sin, cos) = k0d.sin_cos();
        Ok(Self {
            omega,
            gamma,
            k0d,
            cos,
            sin,
            omega_plus: omega + 0.5 * gamma * sin,
            omega_minus: omega - 0.5 * gamma * sin,
            gamma_plus: gamma * (1.0 + cos),
            gamma_minus: gamma * (1.0 - cos),
        })
    }

    /// Parameters of a two-qubit configuration.
    pub fn from_config(cfg: &SystemConfig) -> Result<Self, ClosedFormError> {
        if cfg.n_qubits != 2 {
            return Err(CoreError::NotTwoQubits(cfg.n_qubits).into());
        }
        Self::new(cfg.omega, cfg.gamma, cfg.k0d()?)
    }

    /// `δ₊ = ω - Ω₊`.
    pub fn delta_plus(&self, w: f64) -> f64 {
        w - self.omega_plus
    }

    /// `δ₋ = ω - Ω₋`.
    pub fn delta_minus(&self, w: f64) -> f64 {
        w - self.omega_minus
    }

    pub fn degeneracy(&self) -> Degeneracy {
        if (1.0 - self.cos).abs() < DEGENERATE_COS {
            Degeneracy::Even
        } else if (1.0 + self.cos).abs() < DEGENERATE_COS {
            Degeneracy::Odd
        } else {
            Degeneracy::None
        }
    }

    /// Parameters evaluated exactly at the nearest `k0d = nπ` when inside
    /// the degenerate window, unchanged otherwise.
    pub fn at_degenerate_limit(&self) -> Self {
        let cos = match self.degeneracy() {
            Degeneracy::None => return *self,
            Degeneracy::Even => 1.0,
            Degeneracy::Odd => -1.0,
        };
        Self {
            k0d: (self.k0d / std::f64::consts::PI).round() * std::f64::consts::PI,
            cos,
            sin: 0.0,
            omega_plus: self.omega,
            omega_minus: self.omega,
            gamma_plus: self.gamma * (1.0 + cos),
            gamma_minus: self.gamma * (1.0 - cos),
            ..*self
        }
    }

    /// `cos(k0d/2)` and `sin(k0d/2)`, the single-photon amplitudes of the
    /// symmetric and antisymmetric channels for the `+k` direction.
    pub fn half_angle(&self) -> (f64, f64) {
        let (s, c) = (0.5 * self.k0d).sin_cos();
        (c, s)
    }

    /// Smallest nonzero decay rate among all two-qubit channels.
    pub fn slowest_rate(&self) -> f64 {
        [
            self.gamma_plus,
            self.gamma_minus,
            self.gamma,
            2.0 * self.gamma,
        ]
        .into_iter()
        .filter(|r| *r > 0.0)
        .fold(f64::INFINITY, f64::min)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn rates_and_shifts() {
        let p = TwoQubitParams::new(20.0, 1.0, PI / 2.0).unwrap();
        assert!((p.gamma_plus - 1.0).abs() < 1e-15);
        assert!((p.gamma_minus - 1.0).abs() < 1e-15);
        assert!((p.omega_plus - 20.5).abs() < 1e-14);
        assert!((p.omega_minus - 19.5).abs() < 1e-14);
        assert!((p.delta_plus(21.0) - 0.5).abs() < 1e-14);
    }

    #[test]
    #[allow(clippy::approx_constant)]
    fn degeneracy_classes() {
        let deg = |k| TwoQubitParams::new(20.0, 1.0, k).unwrap().degeneracy();
        assert_eq!(deg(0.0), Degeneracy::Even);
        assert_eq!(deg(2.0 * PI), Degeneracy::Even);
        assert_eq!(deg(PI), Degeneracy::Odd);
        assert_eq!(deg(3.0 * PI + 1e-4), Degeneracy::Odd);
        assert_eq!(deg(PI - 1e-2), Degeneracy::None);
        assert_eq!(deg(PI / 4.0), Degeneracy::None);
        let snapped = TwoQubitParams::new(20.0, 1.0, 3.1416)
            .unwrap()
            .at_degenerate_limit();
        assert_eq!(
            (snapped.gamma_plus, snapped.gamma_minus, snapped.sin),
            (0.0, 2.0, 0.0)
        );
        assert_eq!(snapped.omega_plus, 20.0);
        let generic = TwoQubitParams::new(20.0, 1.0, 1.0).unwrap();
        assert_eq!(generic.at_degenerate_limit(), generic);
    }

    #[test]
    fn exact_dark_points_give_zero_rates() {
        assert_eq!(TwoQubitParams::new(20.0, 1.0, PI).unwrap().gamma_plus, 0.0);
        assert_eq!(
            TwoQubitParams::new(20.0, 1.0, 2.0 * PI)
                .unwrap()
                .gamma_minus,
            0.0
        );
    }

    #[test]
    fn slowest_rate_skips_dark_channel() {
        let p = TwoQubitParams::new(20.0, 1.0, PI).unwrap();
        assert_eq!(p.slowest_rate(), 1.0);
        let q = TwoQubitParams::new(20.0, 1.0, PI / 4.0).unwrap();
        assert!((q.slowest_rate() - (1.0 - (PI / 4.0).cos())).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(TwoQubitParams::new(0.0, 1.0, 1.0).is_err());
        assert!(TwoQubitParams::new(20.0, -1.0, 1.0).is_err());
        assert!(TwoQubitParams::new(20.0, 1.0, f64::NAN).is_err());
    }
}
