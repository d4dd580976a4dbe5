use std::fmt;

use wgqed_core::{c64, density_from_pure, BellLabel, DensityMatrix, StateVector, C64};

use crate::error::ClosedFormError;

/// Named two-qubit initial states.
///
/// `eg` has the first qubit excited. `s1g2` is `(|g⟩+|e⟩)/√2 ⊗ |g⟩`,
/// `s1e2` is `(|g⟩+|e⟩)/√2 ⊗ |e⟩` and `s1s2` puts both qubits in
/// `(|g⟩+|e⟩)/√2`.
#[derive(Debug, Clone, PartialEq)]
pub enum InitialStateTag {
    E,
    S,
    A,
    Eg,
    Ge,
    S1G2,
    S1E2,
    S1S2,
    Custom(DensityMatrix),
}

impl InitialStateTag {
    /// All named tags, in a fixed order.
    pub const NAMED: [InitialStateTag; 8] = [
        InitialStateTag::E,
        InitialStateTag::S,
        InitialStateTag::A,
        InitialStateTag::Eg,
        InitialStateTag::Ge,
        InitialStateTag::S1G2,
        InitialStateTag::S1E2,
        InitialStateTag::S1S2,
    ];

    pub fn parse(s: &str) -> Result<Self, ClosedFormError> {
        Ok(match s {
            "E" => Self::E,
            "S" => Self::S,
            "A" => Self::A,
            "eg" => Self::Eg,
            "ge" => Self::Ge,
            "s1g2" => Self::S1G2,
            "s1e2" => Self::S1E2,
            "s1s2" => Self::S1S2,
            other => return Err(ClosedFormError::InvalidTag(other.to_string())),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::E => "E",
            Self::S => "S",
            Self::A => "A",
            Self::Eg => "eg",
            Self::Ge => "ge",
            Self::S1G2 => "s1g2",
            Self::S1E2 => "s1e2",
            Self::S1S2 => "s1s2",
            Self::Custom(_) => "custom",
        }
    }

    /// Pure state of a named tag in the product basis.
    pub fn state(&self) -> Option<StateVector> {
        let one = c64(1.0, 0.0);
        let zero = c64(0.0, 0.0);
        let h = c64(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let g: (C64, C64) = (one, zero);
        let e: (C64, C64) = (zero, one);
        let s: (C64, C64) = (h, h);
        Some(match self {
            Self::E => BellLabel::E.state(),
            Self::S => BellLabel::S.state(),
            Self::A => BellLabel::A.state(),
            Self::Eg => StateVector::product(&[e, g]),
            Self::Ge => StateVector::product(&[g, e]),
            Self::S1G2 => StateVector::product(&[s, g]),
            Self::S1E2 => StateVector::product(&[s, e]),
            Self::S1S2 => StateVector::product(&[s, s]),
            Self::Custom(_) => return None,
        })
    }

    /// Density matrix in the product basis.
    pub fn density(&self) -> Result<DensityMatrix, ClosedFormError> {
        match self {
            Self::Custom(rho) => {
                if rho.dim() != 4 {
                    return Err(wgqed_core::CoreError::NotTwoQubits(rho.n_qubits()).into());
                }
                Ok(rho.clone())
            }
            named => Ok(density_from_pure(&named.state().expect("named tag"))?),
        }
    }
}

impl fmt::Display for InitialStateTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use wgqed_core::{bell_matrix, max_abs_diff};

    fn bell_coords(tag: &InitialStateTag) -> wgqed_core::CMatrix {
        let u = bell_matrix();
        u.adjoint() * tag.density().unwrap().matrix() * u
    }

    #[test]
    fn parse_round_trip() {
        for tag in InitialStateTag::NAMED {
            assert_eq!(InitialStateTag::parse(tag.name()).unwrap(), tag);
        }
        assert!(matches!(
            InitialStateTag::parse("X"),
            Err(ClosedFormError::InvalidTag(_))
        ));
    }

    #[test]
    fn eg_splits_into_symmetric_minus_antisymmetric() {
        let m = bell_coords(&InitialStateTag::Eg);
        assert!((m[(2, 2)].re - 0.5).abs() < 1e-15);
        assert!((m[(3, 3)].re - 0.5).abs() < 1e-15);
        assert!((m[(2, 3)].re + 0.5).abs() < 1e-15);
    }

    #[test]
    fn s1g2_has_ground_coherences() {
        let m = bell_coords(&InitialStateTag::S1G2);
        let r = 0.5 * std::f64::consts::FRAC_1_SQRT_2;
        assert!((m[(0, 0)].re - 0.5).abs() < 1e-15);
        assert!((m[(2, 0)].re - r).abs() < 1e-15);
        assert!((m[(3, 0)].re + r).abs() < 1e-15);
    }

    #[test]
    fn custom_passes_through() {
        let rho = DensityMatrix::maximally_mixed(4);
        let tag = InitialStateTag::Custom(rho.clone());
        assert!(max_abs_diff(tag.density().unwrap().matrix(), rho.matrix()) < 1e-15);
        assert!(tag.state().is_none());
        assert!(InitialStateTag::Custom(DensityMatrix::maximally_mixed(2))
            .density()
            .is_err());
    }
}
