use serde::{Deserialize, Serialize};

use crate::bell::BellLabel;
use crate::config::SystemConfig;
use crate::error::CoreError;

/// Ordered product basis, plus the Bell basis when there are two qubits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisSet {
    pub n_qubits: usize,
    pub dimension: usize,
    /// Product labels such as `"ge"`, one character per qubit, qubit 1 first.
    pub labels: Vec<String>,
    /// `[G, E, S, A]` for two qubits, otherwise `None`.
    pub bell: Option<[BellLabel; 4]>,
}

impl BasisSet {
    /// Index of a product label, e.g. `"eg"` → 2.
    pub fn index_of(&self, label: &str) -> Result<usize, CoreError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| CoreError::UnknownLabel(label.to_string()))
    }
}

/// Product-state label of basis index `index` for `n` qubits.
pub fn product_label(index: usize, n: usize) -> String {
    (0..n)
        .map(|q| if excited(index, q, n) { 'e' } else { 'g' })
        .collect()
}

/// Whether qubit `q` (0-based, qubit 1 is most significant) is excited in
/// basis state `index`.
#[inline]
pub fn excited(index: usize, q: usize, n: usize) -> bool {
    (index >> (n - 1 - q)) & 1 == 1
}

/// Bit mask selecting qubit `q` in a basis index.
#[inline]
pub fn qubit_mask(q: usize, n: usize) -> usize {
    1 << (n - 1 - q)
}

/// Number of excited qubits in basis state `index`.
#[inline]
pub fn excitation_number(index: usize) -> u32 {
    index.count_ones()
}

pub fn build_basis(config: &SystemConfig) -> BasisSet {
    let n = config.n_qubits;
    let dimension = 1 << n;
    BasisSet {
        n_qubits: n,
        dimension,
        labels: (0..dimension).map(|i| product_label(i, n)).collect(),
        bell: (n == 2).then_some(BellLabel::ALL),
    }
}
