use wgqed_core::{
    bell_matrix, c64, CMatrix, OperatorBasis, TransitionCoefficients, TransitionOperatorField, C64,
};

use super::{A, E, G, S};
use crate::error::{check_time, ClosedFormError};
use crate::params::TwoQubitParams;
use crate::util::decay_difference;

/// One exponential `amp · e^{rate t}`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct ExpTerm {
    pub amp: C64,
    pub rate: C64,
}

impl ExpTerm {
    fn at(&self, t: f64) -> C64 {
        self.amp * (self.rate * t).exp()
    }
}

/// A coherence coefficient `c^(ij)_kl(t)` as a sum of exponentials.
pub(crate) struct CoherenceEntry {
    pub row: (usize, usize),
    pub col: (usize, usize),
    pub terms: Vec<ExpTerm>,
}

impl CoherenceEntry {
    pub fn at(&self, t: f64) -> C64 {
        self.terms.iter().map(|x| x.at(t)).sum()
    }

    fn conj(&self) -> Self {
        Self {
            row: (self.row.1, self.row.0),
            col: (self.col.1, self.col.0),
            terms: self
                .terms
                .iter()
                .map(|x| ExpTerm {
                    amp: x.amp.conj(),
                    rate: x.rate.conj(),
                })
                .collect(),
        }
    }
}

/// Every nonzero off-diagonal coefficient, including the conjugate rows.
pub(crate) fn coherence_entries(p: &TwoQubitParams) -> Vec<CoherenceEntry> {
    let g = p.gamma;
    let rate = |re: f64, im: f64| c64(re, im);
    let r_ge = rate(-g, -2.0 * p.omega);
    let r_gs = rate(-0.5 * p.gamma_plus, -p.omega_plus);
    let r_se = rate(-0.5 * p.gamma_plus - g, -p.omega_minus);
    let r_ga = rate(-0.5 * p.gamma_minus, -p.omega_minus);
    let r_ae = rate(-0.5 * p.gamma_minus - g, -p.omega_plus);
    let r_as = rate(-g, -g * p.sin);

    let one = c64(1.0, 0.0);
    let single = |row, r| CoherenceEntry {
        row,
        col: row,
        terms: vec![ExpTerm { amp: one, rate: r }],
    };
    // Feeding of |G⟩⟨S| by |S⟩⟨E| and of |G⟩⟨A| by |A⟩⟨E|.
    let k_s = -c64(1.0 + p.cos, 0.0) / c64(1.0, -p.sin);
    let k_a = c64(1.0 - p.cos, 0.0) / c64(1.0, p.sin);
    let upper = vec![
        single((G, E), r_ge),
        single((G, S), r_gs),
        CoherenceEntry {
            row: (G, S),
            col: (S, E),
            terms: vec![
                ExpTerm {
                    amp: k_s,
                    rate: r_se,
                },
                ExpTerm {
                    amp: -k_s,
                    rate: r_gs,
                },
            ],
        },
        single((G, A), r_ga),
        CoherenceEntry {
            row: (G, A),
            col: (A, E),
            terms: vec![
                ExpTerm {
                    amp: k_a,
                    rate: r_ae,
                },
                ExpTerm {
                    amp: -k_a,
                    rate: r_ga,
                },
            ],
        },
        single((S, E), r_se),
        single((A, E), r_ae),
        single((A, S), r_as),
    ];
    let lower: Vec<_> = upper.iter().map(CoherenceEntry::conj).collect();
    upper.into_iter().chain(lower).collect()
}

/// `⟨P_ij(t)⟩` coefficients in the Bell basis.
///
/// The population feeding terms are written with [`decay_difference`], so
/// the same expressions stay finite and accurate as `k0d` approaches a
/// multiple of `π`, where they reduce to `Γ± t e^{-Γ± t}`.
pub fn coefficients(p: &TwoQubitParams, t: f64) -> Result<TransitionCoefficients, ClosedFormError> {
    check_time(t)?;
    let idx = |i: usize, j: usize| 4 * i + j;
    let mut c = CMatrix::zeros(16, 16);
    let re = |x: f64| c64(x, 0.0);

    let ee = (-2.0 * p.gamma * t).exp();
    let w_es = p.gamma_plus * decay_difference(p.gamma_plus, 2.0 * p.gamma, t);
    let w_ea = p.gamma_minus * decay_difference(p.gamma_minus, 2.0 * p.gamma, t);
    let lost_s = -(-p.gamma_plus * t).exp_m1();
    let lost_a = -(-p.gamma_minus * t).exp_m1();
    let lost_e = -(-2.0 * p.gamma * t).exp_m1();

    c[(idx(G, G), idx(G, G))] = re(1.0);
    c[(idx(G, G), idx(S, S))] = re(lost_s);
    c[(idx(G, G), idx(A, A))] = re(lost_a);
    c[(idx(G, G), idx(E, E))] = re(lost_e - w_es - w_ea);
    c[(idx(E, E), idx(E, E))] = re(ee);
    c[(idx(S, S), idx(S, S))] = re(1.0 - lost_s);
    c[(idx(S, S), idx(E, E))] = re(w_es);
    c[(idx(A, A), idx(A, A))] = re(1.0 - lost_a);
    c[(idx(A, A), idx(E, E))] = re(w_ea);

    for entry in coherence_entries(p) {
        c[(idx(entry.row.0, entry.row.1), idx(entry.col.0, entry.col.1))] = entry.at(t);
    }
    Ok(TransitionCoefficients::new(4, OperatorBasis::Bell, c)?)
}

/// The same coefficients re-expressed over product-basis dyads.
pub fn coefficients_product(
    p: &TwoQubitParams,
    t: f64,
) -> Result<TransitionCoefficients, ClosedFormError> {
    Ok(coefficients(p, t)?.change_basis(&bell_matrix().adjoint(), OperatorBasis::Product))
}

/// Bell-basis coefficients on the grid `0, dt, …, steps·dt`.
pub fn field(
    p: &TwoQubitParams,
    dt: f64,
    steps: usize,
) -> Result<TransitionOperatorField, ClosedFormError> {
    let snaps = (0..=steps)
        .map(|k| coefficients(p, k as f64 * dt))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(TransitionOperatorField::new(dt, snaps)?)
}
