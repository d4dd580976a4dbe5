use std::f64::consts::PI;

use wgqed_closed_form::{OneQubit, OneQubitTag};
use wgqed_core::{c64, DensityMatrix};

fn q() -> OneQubit {
    OneQubit::new(20.0, 1.0).unwrap()
}

fn w(from: OneQubitTag, to: OneQubitTag, t: f64) -> f64 {
    q().probability(&from, &to, t).unwrap()
}

#[test]
fn excited_and_ground() {
    for t in [0.0, 0.5, 1.0, 3.0] {
        assert!((w(OneQubitTag::E, OneQubitTag::E, t) - (-t).exp()).abs() < 1e-12);
        assert!((w(OneQubitTag::E, OneQubitTag::G, t) - (1.0 - (-t).exp())).abs() < 1e-12);
        assert_eq!(w(OneQubitTag::G, OneQubitTag::E, t), 0.0);
        assert_eq!(w(OneQubitTag::G, OneQubitTag::G, t), 1.0);
    }
    assert!((w(OneQubitTag::E, OneQubitTag::E, 1.0) - 0.367879).abs() < 1e-6);
}

#[test]
fn superposition_state() {
    for t in [0.0, 0.25, 1.0, 2.2] {
        let s = w(OneQubitTag::S, OneQubitTag::S, t);
        assert!((s - 0.5 * (1.0 + (-0.5 * t).exp() * (20.0 * t).cos())).abs() < 1e-12);
        let e = w(OneQubitTag::S, OneQubitTag::E, t);
        let g = w(OneQubitTag::S, OneQubitTag::G, t);
        assert!((e - 0.5 * (-t).exp()).abs() < 1e-12);
        assert!((e + g - 1.0).abs() < 1e-12);
    }
    assert_eq!(w(OneQubitTag::S, OneQubitTag::S, 0.0), 1.0);
}

#[test]
fn custom_initial_state_matches_named() {
    let rho = OneQubitTag::S.density().unwrap();
    let custom = OneQubitTag::Custom(rho);
    for t in [0.3, 1.7] {
        for to in OneQubitTag::NAMED {
            let a = q().probability(&custom, &to, t).unwrap();
            let b = q().probability(&OneQubitTag::S, &to, t).unwrap();
            assert!((a - b).abs() < 1e-12);
        }
    }
    let mixed = OneQubitTag::Custom(DensityMatrix::maximally_mixed(2));
    assert!(
        (q().probability(&mixed, &OneQubitTag::E, 1.0).unwrap() - 0.5 * (-1.0f64).exp()).abs()
            < 1e-12
    );
}

#[test]
fn lorentzian_normalization() {
    let qb = q();
    let n = 200_000;
    let h = PI / n as f64;
    let mut acc = 0.0;
    for k in 0..n {
        let th = -0.5 * PI + (k as f64 + 0.5) * h;
        acc += qb.spectral_density(20.0 + th.tan(), 1.0) / th.cos().powi(2);
    }
    assert!((acc * h / (2.0 * PI) - 1.0).abs() < 1e-9);
    assert!((qb.spectral_density(20.0, 1.0) - 4.0).abs() < 1e-15);
}

#[test]
fn long_time_spectrum() {
    let qb = q();
    for d in [-3.0, -0.5, 0.0, 0.2, 4.0] {
        // |e^{zt} - 1|² differs from 1 by 2e^{-Γt/2}cos(δt) + e^{-Γt}.
        let t = 12.0_f64;
        let fin = qb.spectrum(20.0 + d, t, 1.0).unwrap();
        let inf = qb.spectral_density(20.0 + d, 1.0);
        let envelope = 2.0 * (-0.5 * t).exp() + (-t).exp();
        assert!((fin - inf).abs() <= envelope * inf + 1e-15, "{d}");
        assert_eq!(qb.spectrum(20.0 + d, 0.0, 1.0).unwrap(), 0.0);
    }
}

#[test]
fn field_means_are_conjugate() {
    let (a, ad) = q().photon_means(19.2, 1.5, c64(0.5, 0.0)).unwrap();
    assert_eq!(ad, a.conj());
    assert!(a.norm() > 0.0);
}
