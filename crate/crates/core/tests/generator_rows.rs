//! Bell-basis generator against the hand-derived population and coherence
//! equations for two qubits.

use std::f64::consts::PI;

use wgqed_core::{
    bell_matrix, build_generator, c64, pairwise_rates, CMatrix, GeneratorMatrix, SystemConfig, C64,
};

const G: usize = 0;
const E: usize = 1;
const S: usize = 2;
const A: usize = 3;

const OMEGA: f64 = 20.0;
const GAMMA: f64 = 1.0;

fn bell_generator(k0d: f64) -> GeneratorMatrix {
    let cfg = SystemConfig::two_qubit(OMEGA, GAMMA, k0d).unwrap();
    let gen = build_generator(&cfg, &pairwise_rates(&cfg)).unwrap();
    gen.in_basis(&bell_matrix()).unwrap()
}

/// Expected rows: `(i, j)` → list of `((k, l), λ)`, every other entry zero.
type Row = ((usize, usize), Vec<((usize, usize), C64)>);

fn expected_rows(k0d: f64) -> Vec<Row> {
    let (c, s) = (k0d.cos(), k0d.sin());
    let g = GAMMA;
    let re = |x: f64| c64(x, 0.0);
    vec![
        (
            (G, G),
            vec![((S, S), re(g * (1.0 + c))), ((A, A), re(g * (1.0 - c)))],
        ),
        ((E, E), vec![((E, E), re(-2.0 * g))]),
        (
            (S, S),
            vec![((E, E), re(g * (1.0 + c))), ((S, S), re(-g * (1.0 + c)))],
        ),
        (
            (A, A),
            vec![((E, E), re(g * (1.0 - c))), ((A, A), re(-g * (1.0 - c)))],
        ),
        ((G, E), vec![((G, E), c64(-g, -2.0 * OMEGA))]),
        ((A, S), vec![((A, S), c64(-g, -g * s))]),
        (
            (A, E),
            vec![((A, E), c64(-0.5 * g * (3.0 - c), -(OMEGA + 0.5 * g * s)))],
        ),
        (
            (S, E),
            vec![((S, E), c64(-0.5 * g * (3.0 + c), -(OMEGA - 0.5 * g * s)))],
        ),
        (
            (G, A),
            vec![
                ((G, A), c64(-0.5 * g * (1.0 - c), -(OMEGA - 0.5 * g * s))),
                ((A, E), re(-g * (1.0 - c))),
            ],
        ),
        (
            (G, S),
            vec![
                ((G, S), c64(-0.5 * g * (1.0 + c), -(OMEGA + 0.5 * g * s))),
                ((S, E), re(g * (1.0 + c))),
            ],
        ),
    ]
}

fn phases() -> [f64; 5] {
    [0.3, PI / 4.0, PI / 2.0, PI, 2.0 * PI]
}

#[test]
fn ten_rows_match_entrywise() {
    for k0d in phases() {
        let gen = bell_generator(k0d);
        for ((i, j), entries) in expected_rows(k0d) {
            for k in 0..4 {
                for l in 0..4 {
                    let want = entries
                        .iter()
                        .find(|(kl, _)| *kl == (k, l))
                        .map(|(_, v)| *v)
                        .unwrap_or(c64(0.0, 0.0));
                    let got = gen.coefficient(i, j, k, l);
                    assert!(
                        (got - want).norm() < 1e-12,
                        "k0d={k0d} row P_{i}{j} col {k}{l}: got {got}, want {want}"
                    );
                }
            }
        }
    }
}

#[test]
fn conjugate_rows_follow_from_hermiticity() {
    for k0d in phases() {
        let gen = bell_generator(k0d);
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    for l in 0..4 {
                        let a = gen.coefficient(j, i, l, k);
                        let b = gen.coefficient(i, j, k, l).conj();
                        assert!((a - b).norm() < 1e-12);
                    }
                }
            }
        }
    }
}

#[test]
fn populations_decouple_from_coherences() {
    for k0d in phases() {
        let gen = bell_generator(k0d);
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    for l in 0..4 {
                        if (i == j) != (k == l) {
                            assert!(gen.coefficient(i, j, k, l).norm() < 1e-12);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn one_qubit_matches_three_equations() {
    let cfg = SystemConfig::one_qubit(OMEGA, GAMMA).unwrap();
    let gen = build_generator(&cfg, &pairwise_rates(&cfg)).unwrap();
    let lam: &CMatrix = gen.lambda();
    // rows (ij) = gg, ge, eg, ee ; columns the same ordering
    let want = [
        [c64(0.0, 0.0), c64(0.0, 0.0), c64(0.0, 0.0), c64(GAMMA, 0.0)],
        [
            c64(0.0, 0.0),
            c64(-0.5 * GAMMA, -OMEGA),
            c64(0.0, 0.0),
            c64(0.0, 0.0),
        ],
        [
            c64(0.0, 0.0),
            c64(0.0, 0.0),
            c64(-0.5 * GAMMA, OMEGA),
            c64(0.0, 0.0),
        ],
        [
            c64(0.0, 0.0),
            c64(0.0, 0.0),
            c64(0.0, 0.0),
            c64(-GAMMA, 0.0),
        ],
    ];
    for r in 0..4 {
        for c in 0..4 {
            assert!((lam[(r, c)] - want[r][c]).norm() < 1e-13, "({r},{c})");
        }
    }
}

#[test]
fn spectrum_is_dissipative() {
    for k0d in phases() {
        let gen = bell_generator(k0d);
        assert!(
            gen.is_dissipative(),
            "k0d={k0d}: abscissa {}",
            gen.spectral_abscissa()
        );
        // The identity is always stationary; dark points add more.
        let zeros = gen.eigenvalues().iter().filter(|z| z.norm() < 1e-9).count();
        assert!(zeros >= 1);
    }
}
