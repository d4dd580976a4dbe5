//! Vacuum-averaged Heisenberg generator for transition operators.
//!
//! For an operator `X` of the spin system the Markov-reduced equation of
//! motion averaged over the photon vacuum is `dX/dt = F(X)` with
//!
//! ```text
//! F(X) = i Σ_n (Ω/2) [σz_n, X]
//!      + Σ_nm (Γ_nm/2) (2 σ+_m X σ-_n - K_nm X - X K_nm)
//!      + i Σ_nm α_nm (X K_nm - K_nm X),          K_nm = σ+_m σ-_n
//! ```
//!
//! Operators are flattened row-major, `vec(X)[k*D + l] = X[k, l]`. The
//! superoperator matrix `F` satisfies `vec(F(X)) = F · vec(X)`. The structure
//! constants `λ^(ij)_kl` of `d⟨P_ij⟩/dt = Σ_kl λ^(ij)_kl ⟨P_kl⟩` are the
//! entries of `Λ = Fᵀ`, indexed by row `(ij)` and column `(kl)`.

use nalgebra::DMatrix;
use serde::Serialize;

use crate::basis::product_label;
use crate::config::SystemConfig;
use crate::error::CoreError;
use crate::spin::{spin_matrix, SpinOp};
use crate::{c64, tolerances, CMatrix, CVector, C64};

/// Pairwise decay rates and collective frequency shifts.
#[derive(Debug, Clone, PartialEq)]
pub struct RateMatrices {
    /// `Γ_nm = Γ cos(k0 |x_n - x_m|)`.
    pub gamma_nm: DMatrix<f64>,
    /// `α_nm = -(Γ/2) sin(k0 |x_n - x_m|)` off the diagonal, zero on it.
    pub alpha_nm: DMatrix<f64>,
}

/// Rates for the configured geometry.
///
/// The self-shift `α_nn` is taken as already absorbed into Ω.
pub fn pairwise_rates(config: &SystemConfig) -> RateMatrices {
    let n = config.n_qubits;
    let g = config.gamma;
    let p = &config.phases;
    let gamma_nm = DMatrix::from_fn(n, n, |a, b| g * (p[a] - p[b]).abs().cos());
    let alpha_nm = DMatrix::from_fn(n, n, |a, b| {
        if a == b {
            0.0
        } else {
            -0.5 * g * (p[a] - p[b]).abs().sin()
        }
    });
    RateMatrices { gamma_nm, alpha_nm }
}

/// Matrix form of the generator on the `D²`-dimensional operator space.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorMatrix {
    dim: usize,
    /// `Λ`, row `(ij)`, column `(kl)`.
    lambda: CMatrix,
}

impl GeneratorMatrix {
    /// Wrap a precomputed `Λ` (row `(ij)`, column `(kl)`).
    pub fn from_lambda(dim: usize, lambda: CMatrix) -> Result<Self, CoreError> {
        if lambda.shape() != (dim * dim, dim * dim) {
            return Err(CoreError::DimensionMismatch {
                expected: dim * dim,
                found: lambda.nrows(),
            });
        }
        Ok(Self { dim, lambda })
    }

    /// Level count `D` of the underlying Hilbert space.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Structure constants `λ^(ij)_kl`.
    pub fn lambda(&self) -> &CMatrix {
        &self.lambda
    }

    /// `λ^(ij)_kl` as a single entry.
    pub fn coefficient(&self, i: usize, j: usize, k: usize, l: usize) -> C64 {
        self.lambda[(i * self.dim + j, k * self.dim + l)]
    }

    /// Superoperator acting on row-major vectorized operators.
    pub fn superoperator(&self) -> CMatrix {
        self.lambda.transpose()
    }

    /// `F(X)` for an operator `X`.
    pub fn apply(&self, x: &CMatrix) -> CMatrix {
        let v = vectorize(x);
        let out = self.lambda.tr_mul(&v);
        unvectorize(&out, self.dim)
    }

    /// Re-express the structure constants in another orthonormal basis whose
    /// vectors are the columns of `u` (given in the current basis).
    ///
    /// The result describes the transition operators `|b_i⟩⟨b_j|` expanded
    /// over the dyads `|b_k⟩⟨b_l|`.
    pub fn in_basis(&self, u: &CMatrix) -> Result<Self, CoreError> {
        let d = self.dim;
        if u.shape() != (d, d) {
            return Err(CoreError::DimensionMismatch {
                expected: d,
                found: u.nrows(),
            });
        }
        let ud = u.adjoint();
        let mut lambda = CMatrix::zeros(d * d, d * d);
        for i in 0..d {
            for j in 0..d {
                let dyad = u.column(i) * u.column(j).adjoint();
                let f = &ud * self.apply(&dyad) * u;
                for k in 0..d {
                    for l in 0..d {
                        lambda[(i * d + j, k * d + l)] = f[(k, l)];
                    }
                }
            }
        }
        Ok(Self { dim: d, lambda })
    }

    /// `max |F(1)|`, zero for a trace-preserving evolution.
    pub fn identity_residual(&self) -> f64 {
        let id = CMatrix::identity(self.dim, self.dim);
        crate::max_abs(&self.apply(&id))
    }

    /// Eigenvalues of `Λ`, read off the diagonal of its complex Schur form.
    pub fn eigenvalues(&self) -> Vec<C64> {
        let t = self.lambda.clone().schur().unpack().1;
        (0..t.nrows()).map(|i| t[(i, i)]).collect()
    }

    /// Largest real part among the eigenvalues; must not exceed
    /// [`tolerances::GENERATOR_EIGEN_REAL`] for a dissipative generator.
    pub fn spectral_abscissa(&self) -> f64 {
        self.eigenvalues()
            .iter()
            .map(|z| z.re)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn is_dissipative(&self) -> bool {
        self.spectral_abscissa() <= tolerances::GENERATOR_EIGEN_REAL
    }

    /// JSON export with `[re, im]` entries and the operator-basis ordering.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Export<'a> {
            dimension: usize,
            ordering: &'a str,
            operator_basis: Vec<String>,
            lambda: Vec<Vec<[f64; 2]>>,
        }
        let d = self.dim;
        let n = d.trailing_zeros() as usize;
        let operator_basis = (0..d * d)
            .map(|r| format!("|{}><{}|", product_label(r / d, n), product_label(r % d, n)))
            .collect();
        let lambda = (0..d * d)
            .map(|r| {
                (0..d * d)
                    .map(|c| {
                        let z = self.lambda[(r, c)];
                        [z.re, z.im]
                    })
                    .collect()
            })
            .collect();
        let e = Export {
            dimension: d,
            ordering: "row (ij) = transition operator P_ij, column (kl) = dyad |k><l|, both row-major index k*D+l",
            operator_basis,
            lambda,
        };
        serde_json::to_string_pretty(&e).expect("plain data serializes")
    }
}

/// Row-major flattening of a square matrix.
pub fn vectorize(x: &CMatrix) -> CVector {
    let d = x.nrows();
    CVector::from_fn(d * d, |r, _| x[(r / d, r % d)])
}

/// Inverse of [`vectorize`].
pub fn unvectorize(v: &CVector, d: usize) -> CMatrix {
    CMatrix::from_fn(d, d, |k, l| v[k * d + l])
}

/// Build `Λ` for the configured register.
pub fn build_generator(
    config: &SystemConfig,
    rates: &RateMatrices,
) -> Result<GeneratorMatrix, CoreError> {
    let n = config.n_qubits;
    if rates.gamma_nm.shape() != (n, n) || rates.alpha_nm.shape() != (n, n) {
        return Err(CoreError::DimensionMismatch {
            expected: n,
            found: rates.gamma_nm.nrows(),
        });
    }
    let d = config.dimension();
    let sm: Vec<CMatrix> = (0..n)
        .map(|q| spin_matrix(SpinOp::Lower, q, n))
        .collect::<Result<_, _>>()?;
    let sp: Vec<CMatrix> = sm.iter().map(|m| m.adjoint()).collect();
    let sz: Vec<CMatrix> = (0..n)
        .map(|q| spin_matrix(SpinOp::Z, q, n))
        .collect::<Result<_, _>>()?;

    let i = c64(0.0, 1.0);
    let half_omega = 0.5 * config.omega;
    let apply = |x: &CMatrix| -> CMatrix {
        let mut r = CMatrix::zeros(d, d);
        for q in 0..n {
            r += (&sz[q] * x - x * &sz[q]) * (i * half_omega);
        }
        for a in 0..n {
            for b in 0..n {
                let k = &sp[b] * &sm[a];
                let g = rates.gamma_nm[(a, b)];
                if g != 0.0 {
                    r +=
                        (&sp[b] * x * &sm[a] * c64(2.0, 0.0) - &k * x - x * &k) * c64(0.5 * g, 0.0);
                }
                let al = rates.alpha_nm[(a, b)];
                if al != 0.0 {
                    r += (x * &k - &k * x) * (i * al);
                }
            }
        }
        r
    };

    let mut lambda = CMatrix::zeros(d * d, d * d);
    for a in 0..d {
        for b in 0..d {
            let mut x = CMatrix::zeros(d, d);
            x[(a, b)] = c64(1.0, 0.0);
            let f = apply(&x);
            for k in 0..d {
                for l in 0..d {
                    lambda[(a * d + b, k * d + l)] = f[(k, l)];
                }
            }
        }
    }
    Ok(GeneratorMatrix { dim: d, lambda })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rates_at_quarter_wavelength() {
        let cfg = SystemConfig::two_qubit(20.0, 1.0, std::f64::consts::FRAC_PI_2).unwrap();
        let r = pairwise_rates(&cfg);
        assert!(r.gamma_nm[(0, 1)].abs() < 1e-15);
        assert!((r.alpha_nm[(0, 1)] + 0.5).abs() < 1e-15);
        assert_eq!(r.alpha_nm[(0, 0)], 0.0);
        assert_eq!(r.gamma_nm[(1, 1)], 1.0);
    }

    #[test]
    fn rates_at_full_wavelength() {
        let cfg = SystemConfig::two_qubit(20.0, 1.0, 2.0 * std::f64::consts::PI).unwrap();
        let r = pairwise_rates(&cfg);
        assert!((r.gamma_nm[(0, 1)] - 1.0).abs() < 1e-15);
        assert!(r.alpha_nm[(0, 1)].abs() < 1e-15);
    }

    #[test]
    fn one_qubit_rows() {
        let cfg = SystemConfig::one_qubit(20.0, 1.0).unwrap();
        let g = build_generator(&cfg, &pairwise_rates(&cfg)).unwrap();
        let (gi, ei) = (0, 1);
        // d⟨P_ee⟩/dt = -Γ ⟨P_ee⟩
        assert!((g.coefficient(ei, ei, ei, ei) - c64(-1.0, 0.0)).norm() < 1e-14);
        // d⟨P_gg⟩/dt = +Γ ⟨P_ee⟩
        assert!((g.coefficient(gi, gi, ei, ei) - c64(1.0, 0.0)).norm() < 1e-14);
        // d⟨P_eg⟩/dt = (iΩ - Γ/2) ⟨P_eg⟩
        assert!((g.coefficient(ei, gi, ei, gi) - c64(-0.5, 20.0)).norm() < 1e-14);
    }

    #[test]
    fn vectorize_round_trip() {
        let x = CMatrix::from_fn(3, 3, |a, b| c64(a as f64, b as f64));
        assert_eq!(unvectorize(&vectorize(&x), 3), x);
    }

    #[test]
    fn json_export_shape() {
        let cfg = SystemConfig::one_qubit(20.0, 1.0).unwrap();
        let g = build_generator(&cfg, &pairwise_rates(&cfg)).unwrap();
        let v: serde_json::Value = serde_json::from_str(&g.to_json()).unwrap();
        assert_eq!(v["dimension"], 2);
        assert_eq!(v["lambda"].as_array().unwrap().len(), 4);
        assert_eq!(v["operator_basis"][1], "|g><e|");
    }
}
