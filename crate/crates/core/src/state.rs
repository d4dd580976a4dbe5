use nalgebra::SymmetricEigen;

use crate::error::CoreError;
use crate::{c64, max_abs_diff, tolerances, CMatrix, CVector, C64};

/// Pure state of the spin system in the product basis.
///
/// The amplitudes are not required to be normalized (spin operators produce
/// unnormalized vectors); [`StateVector::is_normalized`] reports whether they
/// are.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amps: CVector,
}

impl StateVector {
    /// Build from amplitudes. The length must be a power of two.
    pub fn new(amplitudes: Vec<C64>) -> Result<Self, CoreError> {
        let len = amplitudes.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(CoreError::DimensionMismatch {
                expected: len.next_power_of_two().max(2),
                found: len,
            });
        }
        Ok(Self {
            amps: CVector::from_vec(amplitudes),
        })
    }

    /// Build and require unit norm.
    pub fn normalized(amplitudes: Vec<C64>) -> Result<Self, CoreError> {
        let s = Self::new(amplitudes)?;
        let n = s.norm();
        if n == 0.0 {
            return Err(CoreError::ZeroVector);
        }
        if (n - 1.0).abs() > tolerances::NORM {
            return Err(CoreError::NotNormalized(n));
        }
        Ok(s)
    }

    pub(crate) fn from_column(amps: CVector) -> Self {
        Self { amps }
    }

    /// Product basis state `|index⟩` in dimension `dim`.
    pub fn basis_state(dim: usize, index: usize) -> Self {
        let mut amps = CVector::zeros(dim);
        amps[index] = c64(1.0, 0.0);
        Self { amps }
    }

    /// Product state from per-qubit `(amp_g, amp_e)` pairs, qubit 1 first.
    pub fn product(qubits: &[(C64, C64)]) -> Self {
        let mut amps = CVector::from_element(1, c64(1.0, 0.0));
        for &(g, e) in qubits {
            let q = CVector::from_vec(vec![g, e]);
            amps = amps.kronecker(&q);
        }
        Self { amps }
    }

    pub fn amplitudes(&self) -> &CVector {
        &self.amps
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn n_qubits(&self) -> usize {
        self.dim().trailing_zeros() as usize
    }

    pub fn norm(&self) -> f64 {
        self.amps.norm()
    }

    pub fn is_normalized(&self) -> bool {
        (self.norm() - 1.0).abs() <= tolerances::NORM
    }

    /// Rescale to unit norm.
    pub fn normalize(&self) -> Result<Self, CoreError> {
        let n = self.norm();
        if n == 0.0 {
            return Err(CoreError::ZeroVector);
        }
        Ok(Self {
            amps: self.amps.unscale(n),
        })
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &StateVector) -> C64 {
        self.amps.dotc(&other.amps)
    }
}

/// Hermitian, unit-trace, positive semidefinite operator on `2^N` levels.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    m: CMatrix,
}

impl DensityMatrix {
    /// Validated constructor.
    pub fn new(m: CMatrix) -> Result<Self, CoreError> {
        validate_density(&m, tolerances::TRACE, tolerances::MIN_EIGENVALUE)?;
        Ok(Self { m })
    }

    /// Constructor for numerically evolved states, checked against the
    /// looser [`tolerances::EVOLVED_TRACE`] and
    /// [`tolerances::EVOLVED_MIN_EIGENVALUE`] bounds.
    pub fn new_evolved(m: CMatrix) -> Result<Self, CoreError> {
        validate_density(
            &m,
            tolerances::EVOLVED_TRACE,
            tolerances::EVOLVED_MIN_EIGENVALUE,
        )?;
        Ok(Self { m })
    }

    /// Skip validation. Used for matrices that are physical by construction,
    /// e.g. after a unitary change of basis.
    pub(crate) fn new_unchecked(m: CMatrix) -> Self {
        Self { m }
    }

    /// `1/D` on a `D`-level space.
    pub fn maximally_mixed(dim: usize) -> Self {
        Self {
            m: CMatrix::identity(dim, dim).unscale(dim as f64),
        }
    }

    /// Convex combination of density matrices of equal dimension.
    pub fn mixture(parts: &[(f64, &DensityMatrix)]) -> Result<Self, CoreError> {
        let dim = parts
            .first()
            .map(|(_, r)| r.dim())
            .ok_or_else(|| CoreError::NotPhysical("empty mixture".into()))?;
        let mut m = CMatrix::zeros(dim, dim);
        for (w, r) in parts {
            if r.dim() != dim {
                return Err(CoreError::DimensionMismatch {
                    expected: dim,
                    found: r.dim(),
                });
            }
            m += r.matrix().scale(*w);
        }
        Self::new(m)
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.m
    }

    pub fn into_matrix(self) -> CMatrix {
        self.m
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn n_qubits(&self) -> usize {
        self.dim().trailing_zeros() as usize
    }

    pub fn trace(&self) -> C64 {
        self.m.trace()
    }

    /// `⟨i|ρ|j⟩`.
    pub fn element(&self, i: usize, j: usize) -> C64 {
        self.m[(i, j)]
    }

    pub fn min_eigenvalue(&self) -> f64 {
        min_hermitian_eigenvalue(&self.m)
    }

    /// `⟨ψ|ρ|ψ⟩`.
    pub fn expectation_state(&self, psi: &StateVector) -> f64 {
        psi.amplitudes().dotc(&(&self.m * psi.amplitudes())).re
    }
}

fn min_hermitian_eigenvalue(m: &CMatrix) -> f64 {
    // Symmetrize first so rounding-level anti-Hermitian parts do not leak in.
    let h = (m + m.adjoint()).unscale(2.0);
    SymmetricEigen::new(h)
        .eigenvalues
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min)
}

fn validate_density(m: &CMatrix, trace_tol: f64, min_eigenvalue: f64) -> Result<(), CoreError> {
    let (r, c) = m.shape();
    if r != c || r < 2 || !r.is_power_of_two() {
        return Err(CoreError::NotPhysical(format!(
            "shape {r}x{c} is not 2^N x 2^N"
        )));
    }
    if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(CoreError::NotPhysical("non-finite entry".into()));
    }
    let herm = max_abs_diff(m, &m.adjoint());
    if herm > tolerances::HERMITIAN {
        return Err(CoreError::NotPhysical(format!(
            "not Hermitian (deviation {herm:.3e})"
        )));
    }
    let tr = m.trace();
    if (tr - c64(1.0, 0.0)).norm() > trace_tol {
        return Err(CoreError::NotPhysical(format!(
            "trace is {:.12}, not 1",
            tr.re
        )));
    }
    let min_ev = min_hermitian_eigenvalue(m);
    if min_ev < min_eigenvalue {
        return Err(CoreError::NotPhysical(format!(
            "negative eigenvalue {min_ev:.3e}"
        )));
    }
    Ok(())
}

/// Projector `|ψ⟩⟨ψ|` of a normalized pure state.
pub fn density_from_pure(state: &StateVector) -> Result<DensityMatrix, CoreError> {
    let n = state.norm();
    if n == 0.0 {
        return Err(CoreError::ZeroVector);
    }
    if (n - 1.0).abs() > tolerances::NORM {
        return Err(CoreError::NotNormalized(n));
    }
    let v = state.amplitudes();
    Ok(DensityMatrix::new_unchecked(v * v.adjoint()))
}
