//! Initial states from tags or JSON files.

use std::path::Path;

use wgqed_closed_form::{InitialStateTag, OneQubitTag};
use wgqed_core::basis::product_label;
use wgqed_core::{density_from_pure, DensityMatrix, StateVector};

use crate::error::CliError;

/// Named form of an initial state, when it has one.
#[derive(Debug, Clone, PartialEq)]
pub enum Named {
    One(OneQubitTag),
    Two(InitialStateTag),
    None,
}

/// A validated initial state.
#[derive(Debug, Clone)]
pub struct Initial {
    /// Tag, product label or file path as given on the command line.
    pub label: String,
    pub density: DensityMatrix,
    /// The state vector when the input was pure.
    pub state: Option<StateVector>,
    pub named: Named,
}

impl Initial {
    fn from_state(label: &str, state: StateVector, named: Named) -> Result<Self, CliError> {
        let density =
            density_from_pure(&state).map_err(|e| CliError::usage("--initial", e.to_string()))?;
        Ok(Self {
            label: label.to_string(),
            density,
            state: Some(state),
            named,
        })
    }

    /// Tag accepted by the one-qubit closed forms.
    pub fn one_qubit_tag(&self) -> OneQubitTag {
        match &self.named {
            Named::One(tag) => tag.clone(),
            _ => OneQubitTag::Custom(self.density.clone()),
        }
    }

    /// Tag accepted by the two-qubit closed forms.
    pub fn two_qubit_tag(&self) -> InitialStateTag {
        match &self.named {
            Named::Two(tag) => tag.clone(),
            _ => InitialStateTag::Custom(self.density.clone()),
        }
    }
}

fn product_index(label: &str, n: usize) -> Option<usize> {
    if label.len() != n || !label.chars().all(|c| c == 'g' || c == 'e') {
        return None;
    }
    (0..1usize << n).find(|&i| product_label(i, n) == label)
}

/// Resolves `--initial` for an `n`-qubit register.
pub fn parse_initial(spec: &str, n: usize) -> Result<Initial, CliError> {
    if n == 1 {
        if let Ok(tag) = OneQubitTag::parse(spec) {
            let state = tag.state().expect("named tag");
            return Initial::from_state(spec, state, Named::One(tag));
        }
    }
    if n == 2 {
        if let Ok(tag) = InitialStateTag::parse(spec) {
            let state = tag.state().expect("named tag");
            return Initial::from_state(spec, state, Named::Two(tag));
        }
    }
    if let Some(i) = product_index(spec, n) {
        return Initial::from_state(spec, StateVector::basis_state(1 << n, i), Named::None);
    }
    let path = Path::new(spec);
    if !path.is_file() {
        return Err(CliError::usage(
            "--initial",
            format!("'{spec}' is neither a state tag for {n} qubit(s) nor a readable file"),
        ));
    }
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::usage("--initial", format!("{spec}: {e}")))?;
    parse_initial_json(spec, &text, n)
}

/// Parses a state file: `amplitudes` for a pure state, `entries` for a
/// density matrix.
pub fn parse_initial_json(label: &str, text: &str, n: usize) -> Result<Initial, CliError> {
    let bad = |e: wgqed_core::CoreError| CliError::usage("--initial", format!("{label}: {e}"));
    let value: serde_json::Value = serde_json::from_str(text)
        .map_err(|e| CliError::usage("--initial", format!("{label}: {e}")))?;
    let initial = if value.get("amplitudes").is_some() {
        Initial::from_state(
            label,
            StateVector::from_json(text).map_err(bad)?,
            Named::None,
        )?
    } else {
        Initial {
            label: label.to_string(),
            density: DensityMatrix::from_json(text).map_err(bad)?,
            state: None,
            named: Named::None,
        }
    };
    let dim = 1usize << n;
    if initial.density.dim() != dim {
        return Err(CliError::usage(
            "--initial",
            format!(
                "{label}: dimension {} does not match --n {n}",
                initial.density.dim()
            ),
        ));
    }
    Ok(initial)
}
