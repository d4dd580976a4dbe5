//! Emission spectrum by double trapezoidal quadrature of the two-time
//! correlator kernel.
//!
//! For observation time `t` the spectrum is
//!
//! ```text
//! S(ω, t) = Γ ∫_0^t ∫_0^t e^{iω(τ′-τ)} Σ_nm e^{ik(x_n - x_m)} ⟨σ₊ⁿ(τ) σ₋ᵐ(τ′)⟩ dτ dτ′
//! ```
//!
//! split into the triangles `τ ≥ τ′` and `τ < τ′`, each with its own
//! trapezoid weights. On a grid of `M` steps the kernel depends on the pair
//! of grid indices only through the lag `p` and through `ρ` at the earlier
//! time, so both triangles reduce to per-lag sums
//!
//! ```text
//! Z_a^{nm}(p) = Tr[Φ_p(σ₊ⁿ) σ₋ᵐ R_a(p)]      Z_b^{nm}(p) = Tr[Φ_p(σ₋ᵐ) R_b(p) σ₊ⁿ]
//! ```
//!
//! where `R_a(p)`, `R_b(p)` are weighted sums of `ρ(jh)` over `j ≤ M - p`
//! obtained from prefix sums. The work is `O(M D²)` for the kernel and
//! `O(M)` per frequency.

use std::f64::consts::PI;

use rayon::prelude::*;
use wgqed_core::{
    build_generator, c64, pairwise_rates, spin_matrix, CMatrix, CVector, DensityMatrix, SpinOp,
    SystemConfig, C64,
};

use crate::error::DynamicsError;
use crate::evolve::{check_step, one_step_matrix, step_count, Stepper};

/// Wave number used in the interference factors `e^{ik(x_n - x_m)}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PhaseConvention {
    /// `k = k0 = Ω`, the value used by the closed forms.
    #[default]
    Resonant,
    /// `k = ω`, so the phase `k(x_n - x_m)` follows the observed frequency.
    Dispersive,
}

impl PhaseConvention {
    pub fn name(self) -> &'static str {
        match self {
            Self::Resonant => "resonant",
            Self::Dispersive => "dispersive",
        }
    }
}

/// Grid and integration settings for [`spectrum_quadrature`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureOptions {
    pub dt: f64,
    pub stepper: Stepper,
    pub phase: PhaseConvention,
}

impl Default for QuadratureOptions {
    fn default() -> Self {
        Self {
            dt: 1e-3,
            stepper: Stepper::Rk4,
            phase: PhaseConvention::Resonant,
        }
    }
}

/// Spectrum sampled on a frequency grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumGrid {
    pub omegas: Vec<f64>,
    pub values: Vec<f64>,
}

/// Values below this are treated as quadrature noise rather than a
/// negative spectrum.
pub const NOISE_FLOOR: f64 = -1e-6;

/// Largest imaginary part tolerated in a quadrature spectrum value.
pub const IMAGINARY_RESIDUE: f64 = 1e-8;

impl SpectrumGrid {
    /// Checks increasing frequencies, finite values and the noise floor.
    pub fn validate(&self) -> Result<(), DynamicsError> {
        if self.omegas.len() != self.values.len() {
            return Err(DynamicsError::Invalid(
                "frequency and value counts differ".into(),
            ));
        }
        check_omegas(&self.omegas)?;
        for (w, v) in self.omegas.iter().zip(&self.values) {
            if !v.is_finite() {
                return Err(DynamicsError::NonFinite(format!("spectrum at omega = {w}")));
            }
            if *v < NOISE_FLOOR {
                return Err(DynamicsError::Invalid(format!(
                    "spectrum {v:.3e} at omega = {w} is negative"
                )));
            }
        }
        Ok(())
    }

    /// `(ω, S)` of the largest value.
    pub fn peak(&self) -> Option<(f64, f64)> {
        self.omegas
            .iter()
            .zip(&self.values)
            .map(|(w, v)| (*w, *v))
            .fold(None, |best, cur| match best {
                Some((_, b)) if b >= cur.1 => best,
                _ => Some(cur),
            })
    }

    /// `(1/2π) ∫ S dω` over the sampled window by the trapezoid rule.
    pub fn normalization(&self) -> f64 {
        let mut acc = 0.0;
        for k in 1..self.omegas.len() {
            acc +=
                0.5 * (self.values[k] + self.values[k - 1]) * (self.omegas[k] - self.omegas[k - 1]);
        }
        acc / (2.0 * PI)
    }
}

fn check_omegas(omegas: &[f64]) -> Result<(), DynamicsError> {
    if omegas.iter().any(|w| !w.is_finite()) {
        return Err(DynamicsError::Invalid("frequencies must be finite".into()));
    }
    if omegas.windows(2).any(|w| w[1] <= w[0]) {
        return Err(DynamicsError::Invalid(
            "frequencies must be strictly increasing".into(),
        ));
    }
    Ok(())
}

/// `Ω - 30Γ … Ω + 30Γ` in 4001 points.
pub fn default_window(config: &SystemConfig) -> Vec<f64> {
    let n = 4001;
    let lo = config.omega - 30.0 * config.gamma;
    let step = 60.0 * config.gamma / (n - 1) as f64;
    (0..n).map(|k| lo + k as f64 * step).collect()
}

/// Observation time standing in for `t → ∞`: twelve lifetimes of the
/// slowest non-oscillating decay channel, ignoring channels slower than
/// `1e-6 Γ` (dark states).
pub fn long_time(config: &SystemConfig) -> Result<f64, DynamicsError> {
    let gen = build_generator(config, &pairwise_rates(config))?;
    let slowest = gen
        .eigenvalues()
        .into_iter()
        .filter(|z| {
            z.im.abs() < 1e-8 * config.omega.max(config.gamma) && -z.re > 1e-6 * config.gamma
        })
        .map(|z| -z.re)
        .fold(f64::INFINITY, f64::min);
    if slowest.is_finite() {
        Ok(12.0 / slowest)
    } else {
        Ok(12.0 / config.gamma)
    }
}

/// Per-lag kernel sums for one qubit pair.
struct PairKernel {
    /// `x_n - x_m` expressed as a phase at `k0`.
    phase: f64,
    za: Vec<C64>,
    zb: Vec<C64>,
}

/// `ρ` from the transposed row-major vector `r[m·D + l] = ρ[l, m]`.
fn from_transposed(r: &CVector, d: usize) -> CMatrix {
    CMatrix::from_fn(d, d, |l, m| r[m * d + l])
}

fn kernels(
    config: &SystemConfig,
    rho0: &DensityMatrix,
    t: f64,
    opts: &QuadratureOptions,
) -> Result<(usize, Vec<PairKernel>), DynamicsError> {
    let d = config.dimension();
    if rho0.dim() != d {
        return Err(wgqed_core::CoreError::DimensionMismatch {
            expected: d,
            found: rho0.dim(),
        }
        .into());
    }
    let gen = build_generator(config, &pairwise_rates(config))?;
    check_step(&gen, opts.dt)?;
    let m_steps = step_count(t, opts.dt)?;
    let step = one_step_matrix(&gen, opts.dt, opts.stepper);
    let step_t = step.transpose();
    let n = config.n_qubits;

    // ρ(jh) as transposed vectors, and running sums of them.
    let mut r = CVector::from_fn(d * d, |k, _| rho0.matrix()[(k % d, k / d)]);
    let mut rhos = Vec::with_capacity(m_steps + 1);
    let mut prefix = Vec::with_capacity(m_steps + 1);
    let mut acc = CVector::zeros(d * d);
    for j in 0..=m_steps {
        if j > 0 {
            r = &step * &r;
        }
        acc += &r;
        rhos.push(r.clone());
        prefix.push(acc.clone());
    }
    if rhos[m_steps]
        .iter()
        .any(|z| !(z.re.is_finite() && z.im.is_finite()))
    {
        return Err(DynamicsError::NonFinite("density evolution".into()));
    }

    let raise: Vec<CMatrix> = (0..n)
        .map(|q| spin_matrix(SpinOp::Raise, q, n))
        .collect::<Result<_, _>>()?;
    let lower: Vec<CMatrix> = raise.iter().map(|m| m.adjoint()).collect();
    let mut heis: Vec<CVector> = raise.iter().map(wgqed_core::generator::vectorize).collect();

    let mut out: Vec<PairKernel> = (0..n * n)
        .map(|k| PairKernel {
            phase: config.phases[k / n] - config.phases[k % n],
            za: vec![c64(0.0, 0.0); m_steps + 1],
            zb: vec![c64(0.0, 0.0); m_steps + 1],
        })
        .collect();
    let h2 = opts.dt * opts.dt;
    for p in 0..=m_steps {
        if p > 0 {
            for x in heis.iter_mut() {
                *x = &step_t * &*x;
            }
        }
        let last = m_steps - p;
        let (ra, rb) = if p == 0 {
            // Diagonal τ = τ′: each triangle takes half the square's weight.
            let s = &prefix[m_steps];
            let ra = (s - &rhos[0]) * c64(0.5, 0.0) - &rhos[m_steps] * c64(0.25, 0.0);
            let rb = (s - &rhos[m_steps]) * c64(0.5, 0.0) - &rhos[0] * c64(0.25, 0.0);
            (ra, rb)
        } else if last == 0 {
            let r = &rhos[0] * c64(0.25, 0.0);
            (r.clone(), r)
        } else {
            let r = &prefix[last] - (&rhos[0] + &rhos[last]) * c64(0.5, 0.0);
            (r.clone(), r)
        };
        let ra = from_transposed(&ra, d);
        let rb = from_transposed(&rb, d);
        let xs: Vec<CMatrix> = heis
            .iter()
            .map(|v| wgqed_core::generator::unvectorize(v, d))
            .collect();
        for a in 0..n {
            for b in 0..n {
                let k = &mut out[a * n + b];
                k.za[p] = (&xs[a] * &lower[b] * &ra).trace() * h2;
                k.zb[p] = (xs[b].adjoint() * &rb * &raise[a]).trace() * h2;
            }
        }
    }
    if out.iter().any(|k| {
        k.za.iter()
            .chain(&k.zb)
            .any(|z| !(z.re.is_finite() && z.im.is_finite()))
    }) {
        return Err(DynamicsError::NonFinite("correlator kernel".into()));
    }
    Ok((m_steps, out))
}

/// `Σ_p (e^{-iωph} a_p + e^{iωph} b_p)`.
fn transform(a: &[C64], b: &[C64], w: f64, h: f64) -> C64 {
    let rot = c64(0.0, -w * h).exp();
    let mut cur = c64(1.0, 0.0);
    let mut acc = c64(0.0, 0.0);
    for p in 0..a.len() {
        if p % 256 == 0 {
            cur = c64(0.0, -w * h * p as f64).exp();
        }
        acc += cur * a[p] + cur.conj() * b[p];
        cur *= rot;
    }
    acc
}

/// Quadrature spectrum `S(ω, t)` for an arbitrary initial state.
///
/// `t` must be a multiple of `opts.dt` and `omegas` strictly increasing.
/// The real part is returned; an imaginary part above
/// [`IMAGINARY_RESIDUE`] is reported as an error.
pub fn spectrum_quadrature(
    config: &SystemConfig,
    rho0: &DensityMatrix,
    omegas: &[f64],
    t: f64,
    opts: QuadratureOptions,
) -> Result<SpectrumGrid, DynamicsError> {
    config.validate()?;
    check_omegas(omegas)?;
    let (m_steps, mut pairs) = kernels(config, rho0, t, &opts)?;
    if m_steps == 0 {
        return Ok(SpectrumGrid {
            omegas: omegas.to_vec(),
            values: vec![0.0; omegas.len()],
        });
    }
    if opts.phase == PhaseConvention::Resonant {
        // The interference factors do not depend on ω: fold them in once.
        let mut za = vec![c64(0.0, 0.0); m_steps + 1];
        let mut zb = vec![c64(0.0, 0.0); m_steps + 1];
        for k in &pairs {
            let f = c64(0.0, k.phase).exp();
            for p in 0..=m_steps {
                za[p] += f * k.za[p];
                zb[p] += f * k.zb[p];
            }
        }
        pairs = vec![PairKernel { phase: 0.0, za, zb }];
    }
    let scale = match opts.phase {
        PhaseConvention::Resonant => 0.0,
        PhaseConvention::Dispersive => 1.0 / config.omega,
    };
    let values: Vec<Result<f64, DynamicsError>> = omegas
        .par_iter()
        .map(|&w| {
            let mut s = c64(0.0, 0.0);
            for k in &pairs {
                let f = c64(0.0, k.phase * w * scale).exp();
                s += f * transform(&k.za, &k.zb, w, opts.dt);
            }
            s *= config.gamma;
            if !(s.re.is_finite() && s.im.is_finite()) {
                return Err(DynamicsError::NonFinite(format!("spectrum at omega = {w}")));
            }
            if s.im.abs() > IMAGINARY_RESIDUE {
                return Err(DynamicsError::ImaginaryResidue {
                    omega: w,
                    residue: s.im.abs(),
                });
            }
            Ok(s.re)
        })
        .collect();
    Ok(SpectrumGrid {
        omegas: omegas.to_vec(),
        values: values.into_iter().collect::<Result<_, _>>()?,
    })
}
