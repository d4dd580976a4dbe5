//! Decay rate and frequency shift from an amplitude time series.

use wgqed_core::C64;

use crate::bath::BathRun;
use crate::error::OracleError;

/// Smallest `|a|²` kept in a fit; below it the series is rounding noise.
const FLOOR: f64 = 1e-10;

/// Result of [`extract_rate_and_shift`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateShift {
    /// Population decay rate, `-d ln|a|²/dt`.
    pub rate: f64,
    /// Frequency shift from `Ω`, `-d arg(a)/dt` in the frame rotating at `Ω`.
    pub shift: f64,
    /// First and last time used.
    pub window: (f64, f64),
}

fn slope(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx) = (0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        sxy += (a - mx) * (b - my);
        sxx += (a - mx) * (a - mx);
    }
    sxy / sxx
}

/// Least-squares fit of `ln|a|²` and of the unwrapped phase of `a` against
/// time, over samples with `t ≥ start` up to the first sample below the
/// noise floor. The series must lose at least a decade of `|a|²` inside the
/// window.
pub fn extract_rate_and_shift(
    times: &[f64],
    amps: &[C64],
    start: f64,
) -> Result<RateShift, OracleError> {
    let mut t = Vec::new();
    let mut logs = Vec::new();
    let mut phase = Vec::new();
    let mut last = None::<f64>;
    let mut offset = 0.0;
    for (&ti, a) in times.iter().zip(amps) {
        if ti < start {
            continue;
        }
        let p = a.norm_sqr();
        if p < FLOOR {
            break;
        }
        let arg = a.arg();
        if let Some(prev) = last {
            let jump = arg + offset - prev;
            offset -= (jump / (2.0 * std::f64::consts::PI)).round() * 2.0 * std::f64::consts::PI;
        }
        let unwrapped = arg + offset;
        last = Some(unwrapped);
        t.push(ti);
        logs.push(p.ln());
        phase.push(unwrapped);
    }
    if t.len() < 3 {
        return Err(OracleError::NotDecaying { ratio: 1.0 });
    }
    let ratio = (logs[logs.len() - 1] - logs[0]).exp();
    if ratio > 0.1 {
        return Err(OracleError::NotDecaying { ratio });
    }
    Ok(RateShift {
        rate: -slope(&t, &logs),
        shift: -slope(&t, &phase),
        window: (t[0], t[t.len() - 1]),
    })
}

impl BathRun {
    /// Fit the amplitude along `v`, skipping the retardation transient
    /// `t < 2 max|x_n - x_m|`.
    pub fn fit(&self, v: &[C64]) -> Result<RateShift, OracleError> {
        extract_rate_and_shift(&self.times, &self.projected(v), 2.0 * self.max_delay())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use wgqed_core::c64;

    #[test]
    fn recovers_synthetic_rate_and_shift() {
        let times: Vec<f64> = (0..=4000).map(|k| k as f64 * 1e-3).collect();
        let amps: Vec<C64> = times
            .iter()
            .map(|t| (c64(-0.6, -3.5) * *t).exp() * 0.8)
            .collect();
        let f = extract_rate_and_shift(&times, &amps, 0.5).unwrap();
        assert!((f.rate - 1.2).abs() < 1e-9);
        assert!((f.shift - 3.5).abs() < 1e-9);
        assert!((f.window.0 - 0.5).abs() < 1e-12);
    }

    #[test]
    fn constant_series_is_rejected() {
        let times: Vec<f64> = (0..100).map(|k| k as f64 * 0.1).collect();
        let amps = vec![c64(1.0, 0.0); 100];
        assert!(matches!(
            extract_rate_and_shift(&times, &amps, 0.0),
            Err(OracleError::NotDecaying { .. })
        ));
    }
}
