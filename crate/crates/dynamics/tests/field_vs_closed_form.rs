use std::f64::consts::PI;

use wgqed_closed_form::two_qubit::coefficients_product;
use wgqed_closed_form::{InitialStateTag, OneQubit, TwoQubitParams};
use wgqed_core::{
    build_generator, c64, max_abs_diff, pairwise_rates, BellLabel, CMatrix, GeneratorMatrix,
    OperatorBasis, SystemConfig,
};
use wgqed_dynamics::{
    density_evolution, evolve_field, evolve_field_with, field_at, EvolveOptions, Stepper,
};

const K0D: [f64; 7] = [0.3, PI / 4.0, PI / 2.0, 2.9, PI - 1e-3, PI, 2.0 * PI];

fn generator(cfg: &SystemConfig) -> GeneratorMatrix {
    build_generator(cfg, &pairwise_rates(cfg)).unwrap()
}

fn fine() -> EvolveOptions {
    EvolveOptions {
        record_every: 100,
        ..Default::default()
    }
}

#[test]
fn one_qubit_field_matches_closed_form() {
    let cfg = SystemConfig::one_qubit(20.0, 1.0).unwrap();
    let q = OneQubit::new(20.0, 1.0).unwrap();
    let f = evolve_field_with(&generator(&cfg), 5.0, 1e-4, fine()).unwrap();
    let mut worst = 0.0_f64;
    for (k, snap) in f.snapshots().iter().enumerate() {
        let want = q.coefficients(f.time(k)).unwrap();
        worst = worst.max(max_abs_diff(snap.matrix(), want.matrix()));
    }
    assert!(worst < 1e-8, "max deviation {worst:.3e}");
}

#[test]
fn two_qubit_field_matches_closed_form() {
    for k0d in K0D {
        let cfg = SystemConfig::two_qubit(20.0, 1.0, k0d).unwrap();
        let p = TwoQubitParams::new(20.0, 1.0, k0d).unwrap();
        let f = evolve_field_with(&generator(&cfg), 5.0, 1e-4, fine()).unwrap();
        let mut worst = 0.0_f64;
        for (k, snap) in f.snapshots().iter().enumerate() {
            let want = coefficients_product(&p, f.time(k)).unwrap();
            worst = worst.max(max_abs_diff(snap.matrix(), want.matrix()));
        }
        assert!(worst < 1e-6, "k0d = {k0d}: max deviation {worst:.3e}");
    }
}

#[test]
fn runge_kutta_agrees_with_exponential() {
    for k0d in [0.3, PI / 2.0, PI] {
        let cfg = SystemConfig::two_qubit(20.0, 1.0, k0d).unwrap();
        let g = generator(&cfg);
        let rk = evolve_field_with(&g, 5.0, 1e-4, fine()).unwrap();
        let ex = evolve_field_with(
            &g,
            5.0,
            1e-4,
            EvolveOptions {
                stepper: Stepper::Exponential,
                ..fine()
            },
        )
        .unwrap();
        for t in [0.37, 1.0, 2.5, 5.0] {
            let direct = field_at(&g, t, OperatorBasis::Product).unwrap();
            let a = rk.at(t).unwrap().matrix();
            let b = ex.at(t).unwrap().matrix();
            assert!(
                max_abs_diff(a, direct.matrix()) < 1e-8,
                "rk4 k0d = {k0d}, t = {t}"
            );
            assert!(
                max_abs_diff(b, direct.matrix()) < 1e-8,
                "exp k0d = {k0d}, t = {t}"
            );
        }
    }
}

#[test]
fn field_invariants_on_default_grid() {
    let cfg = SystemConfig::two_qubit(20.0, 1.0, 0.3).unwrap();
    let f = evolve_field(&generator(&cfg), 3.0, 1e-3).unwrap();
    assert_eq!(f.at(0.0).unwrap().matrix(), &CMatrix::identity(16, 16));
    for snap in f.snapshots() {
        assert!(snap.completeness_residual() < 1e-8);
        assert!(snap.hermiticity_residual() < 1e-8);
    }
}

#[test]
fn density_from_excited_qubit() {
    let cfg = SystemConfig::one_qubit(20.0, 1.0).unwrap();
    let f = evolve_field(&generator(&cfg), 4.0, 1e-3).unwrap();
    let rho = wgqed_closed_form::OneQubitTag::E.density().unwrap();
    assert_eq!(density_evolution(&f, &rho, 0.0).unwrap(), rho);
    for t in [0.5, 1.0, 4.0] {
        let r = density_evolution(&f, &rho, t).unwrap();
        assert!((r.element(1, 1).re - (-t).exp()).abs() < 1e-9);
        assert!(r.element(0, 1).norm() < 1e-15);
    }
}

#[test]
fn dark_symmetric_state_is_frozen() {
    let cfg = SystemConfig::two_qubit(20.0, 1.0, PI).unwrap();
    let f = evolve_field(&generator(&cfg), 5.0, 1e-3).unwrap();
    let rho = InitialStateTag::S.density().unwrap();
    for t in [1.0, 2.5, 5.0] {
        let r = density_evolution(&f, &rho, t).unwrap();
        assert!(max_abs_diff(r.matrix(), rho.matrix()) < 1e-9, "t = {t}");
    }
}

#[test]
fn trace_and_positivity_on_grid() {
    for k0d in [0.3, PI / 2.0, 2.0 * PI] {
        let cfg = SystemConfig::two_qubit(20.0, 1.0, k0d).unwrap();
        let f = evolve_field(&generator(&cfg), 5.0, 1e-3).unwrap();
        for tag in InitialStateTag::NAMED {
            let rho = tag.density().unwrap();
            for t in f.times().into_iter().step_by(50) {
                let r = density_evolution(&f, &rho, t).unwrap();
                assert!((r.trace() - c64(1.0, 0.0)).norm() < 1e-9);
                assert!(r.min_eigenvalue() >= -1e-8);
            }
        }
    }
}

#[test]
fn bell_populations_from_field() {
    // W_{ge→eg} = ½ e^{-Γt} (1 - cos Γt) at k0d = π/2.
    let cfg = SystemConfig::two_qubit(20.0, 1.0, PI / 2.0).unwrap();
    let f = evolve_field_with(&generator(&cfg), 5.0, 1e-4, fine()).unwrap();
    let rho = InitialStateTag::Ge.density().unwrap();
    let eg = wgqed_core::StateVector::basis_state(4, 2);
    for t in [0.5, 1.0, 3.0, 5.0] {
        let w = f.at(t).unwrap().probability(rho.matrix(), eg.amplitudes());
        let want = 0.5 * (-t).exp() * (1.0 - t.cos());
        assert!((w - want).abs() < 1e-9, "t = {t}: {w} vs {want}");
    }
    let s = BellLabel::S.state();
    let w = f.at(5.0).unwrap().probability(rho.matrix(), s.amplitudes());
    assert!((w - 0.5 * (-5.0f64).exp()).abs() < 1e-9);
}
