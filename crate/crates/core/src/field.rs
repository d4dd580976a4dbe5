//! Expansion coefficients of vacuum-averaged transition operators.
//!
//! `⟨P_ij(t)⟩ = Σ_mn c^(ij)_mn(t) |m⟩⟨n|`. At a single time the coefficients
//! form a `D² × D²` matrix with row `(ij)` and column `(mn)`, both row-major.

use crate::error::CoreError;
use crate::{c64, max_abs_diff, CMatrix, C64};

/// Which single-particle basis the dyads refer to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorBasis {
    Product,
    /// Two-qubit `(G, E, S, A)` basis.
    Bell,
}

/// Coefficients `c^(ij)_mn` at one instant.
#[derive(Debug, Clone, PartialEq)]
pub struct TransitionCoefficients {
    dim: usize,
    basis: OperatorBasis,
    c: CMatrix,
}

impl TransitionCoefficients {
    pub fn new(dim: usize, basis: OperatorBasis, c: CMatrix) -> Result<Self, CoreError> {
        if c.shape() != (dim * dim, dim * dim) {
            return Err(CoreError::DimensionMismatch {
                expected: dim * dim,
                found: c.nrows(),
            });
        }
        Ok(Self { dim, basis, c })
    }

    /// `⟨P_ij(0)⟩ = |i⟩⟨j|`.
    pub fn identity(dim: usize, basis: OperatorBasis) -> Self {
        Self {
            dim,
            basis,
            c: CMatrix::identity(dim * dim, dim * dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> OperatorBasis {
        self.basis
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.c
    }

    /// `c^(ij)_mn`.
    pub fn coefficient(&self, i: usize, j: usize, m: usize, n: usize) -> C64 {
        self.c[(i * self.dim + j, m * self.dim + n)]
    }

    /// `⟨P_ij⟩` as a `D × D` operator.
    pub fn element(&self, i: usize, j: usize) -> CMatrix {
        let d = self.dim;
        let row = i * d + j;
        CMatrix::from_fn(d, d, |m, n| self.c[(row, m * d + n)])
    }

    /// Heisenberg image `Φ_t(X) = Σ_ij X_ij ⟨P_ij(t)⟩`.
    pub fn heisenberg(&self, x: &CMatrix) -> CMatrix {
        let d = self.dim;
        let mut out = CMatrix::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                let w = x[(i, j)];
                if w == c64(0.0, 0.0) {
                    continue;
                }
                let row = i * d + j;
                for m in 0..d {
                    for n in 0..d {
                        out[(m, n)] += w * self.c[(row, m * d + n)];
                    }
                }
            }
        }
        out
    }

    /// Schrödinger-picture state, `⟨l|ρ(t)|m⟩ = Tr[ρ(0) ⟨P_ml(t)⟩]`.
    pub fn evolve_density(&self, rho0: &CMatrix) -> CMatrix {
        let d = self.dim;
        CMatrix::from_fn(d, d, |l, m| {
            let row = m * d + l;
            let mut acc = c64(0.0, 0.0);
            for a in 0..d {
                for b in 0..d {
                    // Tr[ρ0 M] = Σ_ab ρ0[b,a] M[a,b]
                    acc += rho0[(b, a)] * self.c[(row, a * d + b)];
                }
            }
            acc
        })
    }

    /// `Tr[ρ(0) ⟨P_ff(t)⟩]` for a final state `|f⟩` given in this basis.
    pub fn probability(&self, rho0: &CMatrix, f: &crate::CVector) -> f64 {
        let proj = f * f.adjoint();
        let p = self.heisenberg(&proj);
        (rho0 * p).trace().re
    }

    /// Re-express in the basis whose vectors are the columns of `u`.
    pub fn change_basis(&self, u: &CMatrix, target: OperatorBasis) -> Self {
        let d = self.dim;
        let ud = u.adjoint();
        let mut c = CMatrix::zeros(d * d, d * d);
        for a in 0..d {
            for b in 0..d {
                let dyad = u.column(a) * u.column(b).adjoint();
                let m = &ud * self.heisenberg(&dyad) * u;
                for k in 0..d {
                    for l in 0..d {
                        c[(a * d + b, k * d + l)] = m[(k, l)];
                    }
                }
            }
        }
        Self {
            dim: d,
            basis: target,
            c,
        }
    }

    /// `max |Σ_i ⟨P_ii⟩ - 1|`, zero when completeness holds.
    pub fn completeness_residual(&self) -> f64 {
        let d = self.dim;
        let mut sum = CMatrix::zeros(d, d);
        for i in 0..d {
            sum += self.element(i, i);
        }
        max_abs_diff(&sum, &CMatrix::identity(d, d))
    }

    /// `max |⟨P_ji⟩ - ⟨P_ij⟩†|` over all pairs.
    pub fn hermiticity_residual(&self) -> f64 {
        let d = self.dim;
        let mut worst = 0.0_f64;
        for i in 0..d {
            for j in i..d {
                worst = worst.max(max_abs_diff(
                    &self.element(j, i),
                    &self.element(i, j).adjoint(),
                ));
            }
        }
        worst
    }
}

/// Coefficients sampled on a uniform time grid starting at zero.
#[derive(Debug, Clone)]
pub struct TransitionOperatorField {
    dt: f64,
    snapshots: Vec<TransitionCoefficients>,
}

impl TransitionOperatorField {
    pub fn new(dt: f64, snapshots: Vec<TransitionCoefficients>) -> Result<Self, CoreError> {
        if !(dt.is_finite() && dt > 0.0) {
            return Err(CoreError::InvalidConfig(format!(
                "time step {dt} must be positive"
            )));
        }
        if snapshots.is_empty() {
            return Err(CoreError::InvalidConfig(
                "field needs at least one time point".into(),
            ));
        }
        Ok(Self { dt, snapshots })
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn len(&self) -> usize {
        self.snapshots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.snapshots.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.snapshots[0].dim()
    }

    pub fn t_max(&self) -> f64 {
        self.dt * (self.len() - 1) as f64
    }

    pub fn time(&self, k: usize) -> f64 {
        self.dt * k as f64
    }

    pub fn times(&self) -> Vec<f64> {
        (0..self.len()).map(|k| self.time(k)).collect()
    }

    pub fn snapshots(&self) -> &[TransitionCoefficients] {
        &self.snapshots
    }

    /// Grid index of `t`; errors if `t` is not on the grid.
    pub fn index_of(&self, t: f64) -> Result<usize, CoreError> {
        let x = t / self.dt;
        let k = x.round();
        if !(t >= 0.0) || (x - k).abs() > 1e-6 || k as usize >= self.len() {
            return Err(CoreError::OffGrid(t));
        }
        Ok(k as usize)
    }

    /// Coefficients at grid time `t`.
    pub fn at(&self, t: f64) -> Result<&TransitionCoefficients, CoreError> {
        Ok(&self.snapshots[self.index_of(t)?])
    }

    pub fn at_index(&self, k: usize) -> &TransitionCoefficients {
        &self.snapshots[k]
    }
}
