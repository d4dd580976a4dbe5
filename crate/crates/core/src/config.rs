use serde::{Deserialize, Serialize};

use crate::error::CoreError;

/// Physical parameters of the qubit array.
///
/// `phases[n]` is the dimensionless position `k0 x_n` of qubit `n`, with
/// `k0 = Ω / v_g` and `v_g = 1`. For a pair the constructor
/// [`SystemConfig::two_qubit`] places the qubits at `x = ∓d/2`, so the first
/// qubit sits upstream of the second for right-moving photons.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SystemConfig {
    pub n_qubits: usize,
    /// Renormalized qubit frequency Ω, in units of Γ.
    pub omega: f64,
    /// Single-qubit decay rate Γ. The time unit is `1/Γ`.
    pub gamma: f64,
    /// Dimensionless positions `k0 x_n`.
    pub phases: Vec<f64>,
}

impl SystemConfig {
    /// Validated constructor.
    pub fn new(
        n_qubits: usize,
        omega: f64,
        gamma: f64,
        phases: Vec<f64>,
    ) -> Result<Self, CoreError> {
        let cfg = Self {
            n_qubits,
            omega,
            gamma,
            phases,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// A single qubit at the origin.
    pub fn one_qubit(omega: f64, gamma: f64) -> Result<Self, CoreError> {
        Self::new(1, omega, gamma, vec![0.0])
    }

    /// Two qubits separated by the phase `k0d`, at `k0 x = (-k0d/2, +k0d/2)`.
    pub fn two_qubit(omega: f64, gamma: f64, k0d: f64) -> Result<Self, CoreError> {
        Self::new(2, omega, gamma, vec![-0.5 * k0d, 0.5 * k0d])
    }

    /// `n` equally spaced qubits, neighbouring phase difference `spacing`,
    /// centred on the origin.
    pub fn chain(n: usize, omega: f64, gamma: f64, spacing: f64) -> Result<Self, CoreError> {
        let centre = 0.5 * (n.saturating_sub(1)) as f64;
        let phases = (0..n).map(|i| (i as f64 - centre) * spacing).collect();
        Self::new(n, omega, gamma, phases)
    }

    pub fn validate(&self) -> Result<(), CoreError> {
        if self.n_qubits == 0 {
            return Err(CoreError::InvalidConfig(
                "n_qubits must be at least 1".into(),
            ));
        }
        if !(self.gamma.is_finite() && self.gamma > 0.0) {
            return Err(CoreError::InvalidConfig(format!(
                "gamma must be positive and finite, got {}",
                self.gamma
            )));
        }
        if !(self.omega.is_finite() && self.omega > 0.0) {
            return Err(CoreError::InvalidConfig(format!(
                "omega must be positive and finite, got {}",
                self.omega
            )));
        }
        if self.phases.len() != self.n_qubits {
            return Err(CoreError::InvalidConfig(format!(
                "expected {} phases, got {}",
                self.n_qubits,
                self.phases.len()
            )));
        }
        if let Some(p) = self.phases.iter().find(|p| !p.is_finite()) {
            return Err(CoreError::InvalidConfig(format!("phase {p} is not finite")));
        }
        Ok(())
    }

    /// Hilbert-space dimension `2^N`.
    pub fn dimension(&self) -> usize {
        1 << self.n_qubits
    }

    /// Pair phase `k0 d = k0 (x_2 - x_1)` for two qubits.
    pub fn k0d(&self) -> Result<f64, CoreError> {
        if self.n_qubits != 2 {
            return Err(CoreError::NotTwoQubits(self.n_qubits));
        }
        Ok(self.phases[1] - self.phases[0])
    }

    /// Physical positions `x_n = phase_n / k0` with `k0 = Ω` (v_g = 1).
    pub fn positions(&self) -> Vec<f64> {
        self.phases.iter().map(|p| p / self.omega).collect()
    }
}
