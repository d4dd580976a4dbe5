//! Photon spectrum as the mode occupation left behind by the decay.

use std::f64::consts::PI;

use crate::bath::BathRun;

/// Spectra on the mode frequencies, in the `v_g/2L = 1` convention.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleSpectrum {
    pub omegas: Vec<f64>,
    /// `(4π/δω) |γ_{+k}|²`: the `+k` direction alone, comparable with the
    /// one-direction closed forms.
    pub forward: Vec<f64>,
    /// `(4π/δω) |γ_{-k}|²`.
    pub backward: Vec<f64>,
    /// `(2π/δω) (|γ_{+k}|² + |γ_{-k}|²)`, summed over both branches.
    pub total: Vec<f64>,
    /// `Σ |γ|²` over all modes.
    pub photon_number: f64,
}

/// Spectrum from the final state of a run.
///
/// The run should last at least ten lifetimes of its slowest decay channel
/// so that the qubits have emptied into the modes; [`crate::evolve_bath`]
/// already keeps it below the recurrence time.
pub fn oracle_spectrum(run: &BathRun) -> OracleSpectrum {
    let det = run.bath.detunings();
    let m = det.len();
    let dw = run.bath.mode_spacing;
    let amps = &run.final_state.mode_amplitudes;
    let fwd: Vec<f64> = amps[..m].iter().map(|z| z.norm_sqr()).collect();
    let bwd: Vec<f64> = amps[m..].iter().map(|z| z.norm_sqr()).collect();
    OracleSpectrum {
        omegas: det.iter().map(|d| run.omega + d).collect(),
        forward: fwd.iter().map(|p| 4.0 * PI / dw * p).collect(),
        backward: bwd.iter().map(|p| 4.0 * PI / dw * p).collect(),
        total: fwd
            .iter()
            .zip(&bwd)
            .map(|(a, b)| 2.0 * PI / dw * (a + b))
            .collect(),
        photon_number: fwd.iter().chain(&bwd).sum(),
    }
}

impl OracleSpectrum {
    /// `(1/2π) Σ S δω` for one of the spectra.
    pub fn normalization(&self, values: &[f64]) -> f64 {
        let dw = if self.omegas.len() > 1 {
            self.omegas[1] - self.omegas[0]
        } else {
            0.0
        };
        values.iter().sum::<f64>() * dw / (2.0 * PI)
    }

    /// Frequencies of strict local maxima above `fraction` of the largest
    /// value.
    pub fn peaks(&self, values: &[f64], fraction: f64) -> Vec<f64> {
        let top = values.iter().copied().fold(0.0, f64::max);
        (1..values.len().saturating_sub(1))
            .filter(|&i| {
                values[i] > values[i - 1]
                    && values[i] >= values[i + 1]
                    && values[i] >= fraction * top
            })
            .map(|i| self.omegas[i])
            .collect()
    }

    /// Full width at half maximum of the largest peak, by linear
    /// interpolation between modes.
    pub fn fwhm(&self, values: &[f64]) -> f64 {
        let (ip, top) =
            values.iter().enumerate().fold(
                (0, f64::MIN),
                |b, (i, v)| if *v > b.1 { (i, *v) } else { b },
            );
        let half = 0.5 * top;
        let cross = |range: &mut dyn Iterator<Item = usize>, step: isize| -> f64 {
            for i in range {
                let j = (i as isize + step) as usize;
                if values[j] < half {
                    let f = (values[i] - half) / (values[i] - values[j]);
                    return self.omegas[i] + f * (self.omegas[j] - self.omegas[i]);
                }
            }
            f64::NAN
        };
        let right = cross(&mut (ip..values.len() - 1), 1);
        let left = cross(&mut (1..=ip).rev(), -1);
        right - left
    }
}
