//! JSON representation of states.
//!
//! Complex numbers are written as `[re, im]`. Every file carries a `basis`
//! array naming the coordinate order: product labels such as
//! `["gg","ge","eg","ee"]`, or `["G","E","S","A"]` for two-qubit Bell
//! coordinates. Bell-coordinate input is converted to the product basis on
//! read.
//!
//! ```json
//! { "basis": ["g", "e"], "amplitudes": [[0.7071, 0.0], [0.7071, 0.0]] }
//! { "basis": ["g", "e"], "entries": [[[0.5, 0], [0.5, 0]], [[0.5, 0], [0.5, 0]]] }
//! ```

use serde::{Deserialize, Serialize};

use crate::basis::product_label;
use crate::bell::{bell_matrix, BellLabel};
use crate::error::CoreError;
use crate::state::{DensityMatrix, StateVector};
use crate::{c64, CMatrix, CVector, C64};

#[derive(Debug, Serialize, Deserialize)]
struct StateFile {
    basis: Vec<String>,
    amplitudes: Vec<[f64; 2]>,
}

#[derive(Debug, Serialize, Deserialize)]
struct DensityFile {
    basis: Vec<String>,
    entries: Vec<Vec<[f64; 2]>>,
}

/// Coordinate system a JSON file is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JsonBasis {
    Product,
    Bell,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Coordinates {
    Product,
    Bell,
}

fn classify(labels: &[String]) -> Result<(Coordinates, usize), CoreError> {
    let dim = labels.len();
    if dim < 2 || !dim.is_power_of_two() {
        return Err(CoreError::Schema(format!(
            "basis has {dim} labels, expected a power of two"
        )));
    }
    let n = dim.trailing_zeros() as usize;
    let bell: Vec<String> = BellLabel::ALL
        .iter()
        .map(|b| b.name().to_string())
        .collect();
    if n == 2 && labels == bell.as_slice() {
        return Ok((Coordinates::Bell, dim));
    }
    for (i, l) in labels.iter().enumerate() {
        if *l != product_label(i, n) {
            return Err(CoreError::UnknownLabel(l.clone()));
        }
    }
    Ok((Coordinates::Product, dim))
}

fn labels_for(dim: usize, basis: JsonBasis) -> Vec<String> {
    match basis {
        JsonBasis::Bell if dim == 4 => BellLabel::ALL
            .iter()
            .map(|b| b.name().to_string())
            .collect(),
        _ => {
            let n = dim.trailing_zeros() as usize;
            (0..dim).map(|i| product_label(i, n)).collect()
        }
    }
}

fn pair(z: C64) -> [f64; 2] {
    [z.re, z.im]
}

impl StateVector {
    /// Serialize in the product basis, or in Bell coordinates for two qubits.
    pub fn to_json(&self, basis: JsonBasis) -> String {
        let v = match basis {
            JsonBasis::Bell if self.dim() == 4 => bell_matrix().adjoint() * self.amplitudes(),
            _ => self.amplitudes().clone(),
        };
        let f = StateFile {
            basis: labels_for(self.dim(), basis),
            amplitudes: v.iter().copied().map(pair).collect(),
        };
        serde_json::to_string_pretty(&f).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, CoreError> {
        let f: StateFile = serde_json::from_str(text)?;
        let (coords, dim) = classify(&f.basis)?;
        if f.amplitudes.len() != dim {
            return Err(CoreError::DimensionMismatch {
                expected: dim,
                found: f.amplitudes.len(),
            });
        }
        let v = CVector::from_iterator(dim, f.amplitudes.iter().map(|p| c64(p[0], p[1])));
        let v = match coords {
            Coordinates::Bell => bell_matrix() * v,
            Coordinates::Product => v,
        };
        StateVector::new(v.iter().copied().collect())
    }
}

impl DensityMatrix {
    pub fn to_json(&self, basis: JsonBasis) -> String {
        let m = match basis {
            JsonBasis::Bell if self.dim() == 4 => {
                let u = bell_matrix();
                u.adjoint() * self.matrix() * u
            }
            _ => self.matrix().clone(),
        };
        let f = DensityFile {
            basis: labels_for(self.dim(), basis),
            entries: m
                .row_iter()
                .map(|r| r.iter().copied().map(pair).collect())
                .collect(),
        };
        serde_json::to_string_pretty(&f).expect("plain data serializes")
    }

    /// Parse and validate (Hermitian, unit trace, positive semidefinite).
    pub fn from_json(text: &str) -> Result<Self, CoreError> {
        let f: DensityFile = serde_json::from_str(text)?;
        let (coords, dim) = classify(&f.basis)?;
        if f.entries.len() != dim || f.entries.iter().any(|r| r.len() != dim) {
            return Err(CoreError::Schema(format!(
                "entries must be a {dim}x{dim} array"
            )));
        }
        let m = CMatrix::from_fn(dim, dim, |i, j| {
            let p = f.entries[i][j];
            c64(p[0], p[1])
        });
        let m = match coords {
            Coordinates::Bell => {
                let u = bell_matrix();
                &u * m * u.adjoint()
            }
            Coordinates::Product => m,
        };
        DensityMatrix::new(m)
    }
}
