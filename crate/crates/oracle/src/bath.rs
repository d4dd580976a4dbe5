//! Single-excitation amplitudes coupled to a discretized two-branch bath.

use std::f64::consts::PI;

use wgqed_core::{c64, StateVector, SystemConfig, C64};

use crate::error::OracleError;

const I: C64 = C64 { re: 0.0, im: 1.0 };

/// Discretized photon band.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BathConfig {
    /// Half-width `B` of the band `Ω ± B`, in units of `Γ`.
    pub band_halfwidth: f64,
    /// Mode spacing `δω` within each branch.
    pub mode_spacing: f64,
    /// Multiplies the golden-rule coupling; 0 decouples the qubits.
    pub coupling_scale: f64,
}

impl Default for BathConfig {
    fn default() -> Self {
        Self {
            band_halfwidth: 100.0,
            mode_spacing: 0.02,
            coupling_scale: 1.0,
        }
    }
}

impl BathConfig {
    /// Modes per branch.
    pub fn modes(&self) -> usize {
        (2.0 * self.band_halfwidth / self.mode_spacing).round() as usize
    }

    /// Detunings `ω_j - Ω` at the mode centres.
    pub fn detunings(&self) -> Vec<f64> {
        (0..self.modes())
            .map(|j| -self.band_halfwidth + (j as f64 + 0.5) * self.mode_spacing)
            .collect()
    }

    /// Time after which the discrete band rephases, `2π/δω`.
    pub fn recurrence_time(&self) -> f64 {
        2.0 * PI / self.mode_spacing
    }

    /// Per-mode coupling `g = √(Γ δω / 4π)`, so that the golden-rule rate
    /// summed over both branches is `Γ`.
    pub fn coupling(&self, gamma: f64) -> f64 {
        self.coupling_scale * (gamma * self.mode_spacing / (4.0 * PI)).sqrt()
    }

    pub fn validate(&self) -> Result<(), OracleError> {
        let ok = |x: f64| x.is_finite() && x > 0.0;
        if !ok(self.band_halfwidth)
            || !ok(self.mode_spacing)
            || self.mode_spacing > self.band_halfwidth
        {
            return Err(OracleError::Bath(format!(
                "need 0 < spacing <= half-width, got {} and {}",
                self.mode_spacing, self.band_halfwidth
            )));
        }
        if !(self.coupling_scale.is_finite() && self.coupling_scale >= 0.0) {
            return Err(OracleError::Bath(format!(
                "coupling scale {} must be >= 0",
                self.coupling_scale
            )));
        }
        Ok(())
    }
}

/// Amplitudes at one instant, in the interaction picture.
#[derive(Debug, Clone, PartialEq)]
pub struct BathState {
    /// `β_n`, one per qubit, rotating frame at `Ω`.
    pub qubit_amplitudes: Vec<C64>,
    /// `γ`, the `+k` branch first, then `-k`, each ordered by frequency.
    pub mode_amplitudes: Vec<C64>,
    pub time: f64,
}

impl BathState {
    pub fn norm_sqr(&self) -> f64 {
        self.qubit_amplitudes
            .iter()
            .chain(&self.mode_amplitudes)
            .map(|z| z.norm_sqr())
            .sum()
    }

    /// Photon number in each branch, `(+k, -k)`.
    pub fn branch_occupation(&self) -> (f64, f64) {
        let m = self.mode_amplitudes.len() / 2;
        let sum = |s: &[C64]| s.iter().map(|z| z.norm_sqr()).sum::<f64>();
        (
            sum(&self.mode_amplitudes[..m]),
            sum(&self.mode_amplitudes[m..]),
        )
    }
}

/// Output of [`evolve_bath`].
#[derive(Debug, Clone)]
pub struct BathRun {
    pub times: Vec<f64>,
    /// `β_n(t)` at every step.
    pub qubit_amplitudes: Vec<Vec<C64>>,
    pub final_state: BathState,
    /// Largest `|Σ|β|² + Σ|γ|² - 1|` seen at the checkpoints.
    pub max_norm_drift: f64,
    pub bath: BathConfig,
    /// Qubit frequency `Ω`, the centre of the band.
    pub omega: f64,
    /// Qubit positions used for the couplings.
    pub positions: Vec<f64>,
}

impl BathRun {
    /// `⟨v|β(t)⟩` for a single-excitation vector `v` over the qubits.
    pub fn projected(&self, v: &[C64]) -> Vec<C64> {
        self.qubit_amplitudes
            .iter()
            .map(|b| b.iter().zip(v).map(|(x, y)| y.conj() * x).sum())
            .collect()
    }

    /// Largest qubit separation `max |x_n - x_m|`, the retardation delay.
    pub fn max_delay(&self) -> f64 {
        let lo = self.positions.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = self
            .positions
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max);
        hi - lo
    }
}

/// Qubit amplitudes `β_n` of a product-basis state with exactly one
/// excitation.
pub fn single_excitation_amplitudes(state: &StateVector) -> Result<Vec<C64>, OracleError> {
    let n = state.n_qubits();
    let amps = state.amplitudes();
    let mut outside = 0.0;
    let mut beta = vec![c64(0.0, 0.0); n];
    for (idx, a) in amps.iter().enumerate() {
        if idx.count_ones() == 1 {
            // qubit 0 is the most significant bit
            let q = n - 1 - idx.trailing_zeros() as usize;
            beta[q] = *a;
        } else {
            outside += a.norm_sqr();
        }
    }
    if outside > 1e-12 {
        return Err(OracleError::NotSingleExcitation { weight: outside });
    }
    Ok(beta)
}

/// Integrate the amplitude equations
///
/// ```text
/// dβ_n/dt = -i Σ_{b,j} conj(c_bjn) e^{-iΔ_j t} γ_bj
/// dγ_bj/dt = -i Σ_n c_bjn e^{iΔ_j t} β_n,        c_bjn = g e^{-i k_b x_n}
/// ```
///
/// with `k_± = ±(Ω + Δ_j)`, by classical fourth-order Runge-Kutta.
pub fn evolve_bath(
    config: &SystemConfig,
    bath: &BathConfig,
    initial: &StateVector,
    t_max: f64,
    dt: f64,
) -> Result<BathRun, OracleError> {
    config.validate()?;
    bath.validate()?;
    if initial.dim() != config.dimension() {
        return Err(wgqed_core::CoreError::DimensionMismatch {
            expected: config.dimension(),
            found: initial.dim(),
        }
        .into());
    }
    let max = 0.1 / bath.band_halfwidth;
    if !(dt.is_finite() && dt > 0.0) || dt > max * (1.0 + 1e-12) {
        return Err(OracleError::StepTooLarge { dt, max });
    }
    let recurrence = bath.recurrence_time();
    if !(t_max.is_finite() && t_max >= 0.0) || t_max >= recurrence {
        return Err(OracleError::Recurrence { t_max, recurrence });
    }
    let mut beta = single_excitation_amplitudes(initial)?;
    let n = beta.len();
    let det = bath.detunings();
    let m = det.len();
    let positions: Vec<f64> = config.phases.iter().map(|p| p / config.omega).collect();
    let g = bath.coupling(config.gamma);
    // c[(b*m + j)*n + q]
    let mut cpl = vec![c64(0.0, 0.0); 2 * m * n];
    for b in 0..2 {
        let sign = if b == 0 { 1.0 } else { -1.0 };
        for j in 0..m {
            let k = sign * (config.omega + det[j]);
            for q in 0..n {
                cpl[(b * m + j) * n + q] = g * c64(0.0, -k * positions[q]).exp();
            }
        }
    }

    let steps = (t_max / dt).round() as usize;
    let mut gam = vec![c64(0.0, 0.0); 2 * m];
    let half_rot: Vec<C64> = det.iter().map(|d| c64(0.0, 0.5 * d * dt).exp()).collect();
    let mut ph: Vec<C64> = vec![c64(1.0, 0.0); m];
    let mut ph_half = vec![c64(0.0, 0.0); m];
    let mut ph_full = vec![c64(0.0, 0.0); m];

    // Right-hand sides without the common factor -i, which is folded into
    // the stage weights below.
    let deriv = |ph: &[C64], b_in: &[C64], g_in: &[C64], db: &mut [C64], dg: &mut [C64]| {
        db.iter_mut().for_each(|z| *z = c64(0.0, 0.0));
        for br in 0..2 {
            let rows = cpl[br * m * n..(br + 1) * m * n].chunks_exact(n);
            let gs = &g_in[br * m..(br + 1) * m];
            let ds = &mut dg[br * m..(br + 1) * m];
            for (((row, e), g), d) in rows.zip(ph).zip(gs).zip(ds.iter_mut()) {
                let mut drive = c64(0.0, 0.0);
                for (c, b) in row.iter().zip(b_in) {
                    drive += c * b;
                }
                *d = e * drive;
                let back = e.conj() * g;
                for (acc, c) in db.iter_mut().zip(row) {
                    *acc += c.conj() * back;
                }
            }
        }
    };

    let mut kb = [
        vec![c64(0.0, 0.0); n],
        vec![c64(0.0, 0.0); n],
        vec![c64(0.0, 0.0); n],
        vec![c64(0.0, 0.0); n],
    ];
    let mut kg = [
        vec![c64(0.0, 0.0); 2 * m],
        vec![c64(0.0, 0.0); 2 * m],
        vec![c64(0.0, 0.0); 2 * m],
        vec![c64(0.0, 0.0); 2 * m],
    ];
    let mut bt = vec![c64(0.0, 0.0); n];
    let mut gt = vec![c64(0.0, 0.0); 2 * m];

    let mut times = Vec::with_capacity(steps + 1);
    let mut record = Vec::with_capacity(steps + 1);
    times.push(0.0);
    record.push(beta.clone());
    let norm0: f64 = beta.iter().map(|z| z.norm_sqr()).sum();
    let mut drift = 0.0_f64;

    for s in 0..steps {
        let t = s as f64 * dt;
        if s % 512 == 0 {
            for j in 0..m {
                ph[j] = c64(0.0, det[j] * t).exp();
            }
        }
        for j in 0..m {
            ph_half[j] = ph[j] * half_rot[j];
            ph_full[j] = ph_half[j] * half_rot[j];
        }
        let (k1b, rest) = kb.split_at_mut(1);
        let (k2b, rest) = rest.split_at_mut(1);
        let (k3b, k4b) = rest.split_at_mut(1);
        let (k1g, rest) = kg.split_at_mut(1);
        let (k2g, rest) = rest.split_at_mut(1);
        let (k3g, k4g) = rest.split_at_mut(1);
        let h = -I * dt;
        let hh = -I * (0.5 * dt);

        deriv(&ph, &beta, &gam, &mut k1b[0], &mut k1g[0]);
        for q in 0..n {
            bt[q] = beta[q] + hh * k1b[0][q];
        }
        for i in 0..2 * m {
            gt[i] = gam[i] + hh * k1g[0][i];
        }
        deriv(&ph_half, &bt, &gt, &mut k2b[0], &mut k2g[0]);
        for q in 0..n {
            bt[q] = beta[q] + hh * k2b[0][q];
        }
        for i in 0..2 * m {
            gt[i] = gam[i] + hh * k2g[0][i];
        }
        deriv(&ph_half, &bt, &gt, &mut k3b[0], &mut k3g[0]);
        for q in 0..n {
            bt[q] = beta[q] + h * k3b[0][q];
        }
        for i in 0..2 * m {
            gt[i] = gam[i] + h * k3g[0][i];
        }
        deriv(&ph_full, &bt, &gt, &mut k4b[0], &mut k4g[0]);
        let w = -I * (dt / 6.0);
        for q in 0..n {
            beta[q] += (k1b[0][q] + (k2b[0][q] + k3b[0][q]) * 2.0 + k4b[0][q]) * w;
        }
        for i in 0..2 * m {
            gam[i] += (k1g[0][i] + (k2g[0][i] + k3g[0][i]) * 2.0 + k4g[0][i]) * w;
        }
        std::mem::swap(&mut ph, &mut ph_full);

        let t_next = (s + 1) as f64 * dt;
        if beta.iter().any(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(OracleError::NonFinite(t_next));
        }
        times.push(t_next);
        record.push(beta.clone());
        if (s + 1) % 256 == 0 || s + 1 == steps {
            let norm: f64 = beta.iter().chain(&gam).map(|z| z.norm_sqr()).sum();
            drift = drift.max((norm - norm0).abs());
        }
    }

    let final_state = BathState {
        qubit_amplitudes: beta,
        mode_amplitudes: gam,
        time: steps as f64 * dt,
    };
    Ok(BathRun {
        times,
        qubit_amplitudes: record,
        final_state,
        max_norm_drift: drift,
        bath: *bath,
        omega: config.omega,
        positions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> BathConfig {
        BathConfig {
            band_halfwidth: 20.0,
            mode_spacing: 0.05,
            coupling_scale: 1.0,
        }
    }

    #[test]
    fn bath_geometry() {
        let b = BathConfig::default();
        assert_eq!(b.modes(), 10_000);
        let d = b.detunings();
        assert!((d[0] + 99.99).abs() < 1e-12 && (d[9999] - 99.99).abs() < 1e-9);
        assert!((2.0 * 2.0 * PI * b.coupling(1.0).powi(2) / b.mode_spacing - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_input() {
        let cfg = SystemConfig::two_qubit(20.0, 1.0, 1.0).unwrap();
        let ee = StateVector::basis_state(4, 3);
        assert!(matches!(
            evolve_bath(&cfg, &small(), &ee, 1.0, 1e-3),
            Err(OracleError::NotSingleExcitation { .. })
        ));
        let ge = StateVector::basis_state(4, 1);
        assert!(matches!(
            evolve_bath(&cfg, &small(), &ge, 1.0, 0.01),
            Err(OracleError::StepTooLarge { .. })
        ));
        assert!(matches!(
            evolve_bath(&cfg, &small(), &ge, 200.0, 1e-3),
            Err(OracleError::Recurrence { .. })
        ));
    }

    #[test]
    fn amplitude_mapping() {
        let ge = StateVector::basis_state(4, 1);
        assert_eq!(
            single_excitation_amplitudes(&ge).unwrap(),
            vec![c64(0.0, 0.0), c64(1.0, 0.0)]
        );
        let eg = StateVector::basis_state(4, 2);
        assert_eq!(
            single_excitation_amplitudes(&eg).unwrap(),
            vec![c64(1.0, 0.0), c64(0.0, 0.0)]
        );
    }

    #[test]
    fn zero_coupling_is_static() {
        let cfg = SystemConfig::one_qubit(20.0, 1.0).unwrap();
        let bath = BathConfig {
            coupling_scale: 0.0,
            ..small()
        };
        let run = evolve_bath(&cfg, &bath, &StateVector::basis_state(2, 1), 1.0, 1e-3).unwrap();
        assert!(run.qubit_amplitudes.iter().all(|b| b[0] == c64(1.0, 0.0)));
        assert!(run
            .final_state
            .mode_amplitudes
            .iter()
            .all(|z| z.norm() == 0.0));
    }

    #[test]
    fn norm_is_conserved() {
        let cfg = SystemConfig::two_qubit(20.0, 1.0, 0.8).unwrap();
        let run = evolve_bath(&cfg, &small(), &StateVector::basis_state(4, 2), 2.0, 2e-3).unwrap();
        assert!(run.max_norm_drift < 1e-6, "{}", run.max_norm_drift);
        assert!((run.final_state.norm_sqr() - 1.0).abs() < 1e-6);
    }
}
