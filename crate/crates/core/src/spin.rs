use crate::basis::{excited, qubit_mask};
use crate::error::CoreError;
use crate::state::StateVector;
use crate::{c64, CMatrix};

/// Single-qubit spin operators `σ₊`, `σ₋`, `σ_z` (with `σ_z = |e⟩⟨e| - |g⟩⟨g|`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpinOp {
    Raise,
    Lower,
    Z,
}

/// Matrix of `op` acting on qubit `q` (0-based) of an `n`-qubit register.
pub fn spin_matrix(op: SpinOp, q: usize, n: usize) -> Result<CMatrix, CoreError> {
    if q >= n {
        return Err(CoreError::QubitOutOfRange {
            index: q,
            n_qubits: n,
        });
    }
    let dim = 1 << n;
    let mask = qubit_mask(q, n);
    let mut m = CMatrix::zeros(dim, dim);
    for b in 0..dim {
        let up = excited(b, q, n);
        match op {
            SpinOp::Raise if !up => m[(b | mask, b)] = c64(1.0, 0.0),
            SpinOp::Lower if up => m[(b & !mask, b)] = c64(1.0, 0.0),
            SpinOp::Z => m[(b, b)] = c64(if up { 1.0 } else { -1.0 }, 0.0),
            _ => {}
        }
    }
    Ok(m)
}

/// `σ₋` for every qubit, in qubit order.
pub fn lowering_operators(n: usize) -> Vec<CMatrix> {
    (0..n)
        .map(|q| spin_matrix(SpinOp::Lower, q, n).expect("index in range"))
        .collect()
}

/// Apply `op` on qubit `q` to a product-basis state.
pub fn apply_spin_operator(
    op: SpinOp,
    q: usize,
    state: &StateVector,
) -> Result<StateVector, CoreError> {
    let n = state.n_qubits();
    let m = spin_matrix(op, q, n)?;
    Ok(StateVector::from_column(m * state.amplitudes()))
}
