use std::f64::consts::PI;

use wgqed_closed_form::two_qubit::spectrum;
use wgqed_closed_form::{InitialStateTag, SpectrumTime, TwoQubitParams};
use wgqed_core::{density_from_pure, StateVector, SystemConfig};
use wgqed_dynamics::{
    default_window, spectrum_quadrature, PhaseConvention, QuadratureOptions, SpectrumGrid,
};

fn window(cfg: &SystemConfig, stride: usize) -> Vec<f64> {
    let mut w: Vec<f64> = default_window(cfg).into_iter().step_by(stride).collect();
    w.sort_by(f64::total_cmp);
    w
}

fn quadrature(k0d: f64, tag: &InitialStateTag, omegas: &[f64], t: f64, dt: f64) -> SpectrumGrid {
    let cfg = SystemConfig::two_qubit(20.0, 1.0, k0d).unwrap();
    let opts = QuadratureOptions {
        dt,
        ..Default::default()
    };
    let s = spectrum_quadrature(&cfg, &tag.density().unwrap(), omegas, t, opts).unwrap();
    s.validate().unwrap();
    s
}

/// Largest relative deviation at the peak and largest absolute deviation
/// elsewhere.
fn compare(k0d: f64, tag: &InitialStateTag, t: f64, omegas: &[f64]) -> (f64, f64) {
    let p = TwoQubitParams::new(20.0, 1.0, k0d).unwrap();
    let num = quadrature(k0d, tag, omegas, t, 1e-3);
    let exact: Vec<f64> = omegas
        .iter()
        .map(|&w| spectrum(&p, tag, w, SpectrumTime::Finite(t)).unwrap())
        .collect();
    let (ipk, peak) =
        exact.iter().enumerate().fold(
            (0, f64::MIN),
            |b, (i, v)| if *v > b.1 { (i, *v) } else { b },
        );
    let rel = (num.values[ipk] - peak).abs() / peak;
    let abs = num
        .values
        .iter()
        .zip(&exact)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    (rel, abs)
}

fn with_peaks(cfg: &SystemConfig, p: &TwoQubitParams) -> Vec<f64> {
    let mut w = window(cfg, 40);
    w.extend([p.omega_plus, p.omega_minus, cfg.omega]);
    w.sort_by(f64::total_cmp);
    w.dedup();
    w
}

#[test]
fn single_excitation_spectra_match() {
    for k0d in [0.3, PI / 4.0, PI / 2.0, 2.9] {
        let cfg = SystemConfig::two_qubit(20.0, 1.0, k0d).unwrap();
        let p = TwoQubitParams::new(20.0, 1.0, k0d).unwrap();
        let omegas = with_peaks(&cfg, &p);
        for tag in [
            InitialStateTag::S,
            InitialStateTag::A,
            InitialStateTag::Eg,
            InitialStateTag::Ge,
        ] {
            let (rel, abs) = compare(k0d, &tag, 8.0, &omegas);
            assert!(rel < 1e-4, "{tag} k0d = {k0d}: peak deviation {rel:.3e}");
            assert!(
                abs < 1e-4,
                "{tag} k0d = {k0d}: absolute deviation {abs:.3e}"
            );
        }
    }
}

#[test]
fn doubly_excited_spectra_match() {
    for k0d in [PI / 4.0, PI / 2.0, PI, 2.0 * PI] {
        let cfg = SystemConfig::two_qubit(20.0, 1.0, k0d).unwrap();
        let p = TwoQubitParams::new(20.0, 1.0, k0d).unwrap();
        let omegas = with_peaks(&cfg, &p);
        let (rel, abs) = compare(k0d, &InitialStateTag::E, 8.0, &omegas);
        assert!(rel < 1e-3, "k0d = {k0d}: peak deviation {rel:.3e}");
        assert!(abs < 1e-4, "k0d = {k0d}: absolute deviation {abs:.3e}");
    }
}

#[test]
fn superposition_spectra_match() {
    for tag in [
        InitialStateTag::S1G2,
        InitialStateTag::S1E2,
        InitialStateTag::S1S2,
    ] {
        let cfg = SystemConfig::two_qubit(20.0, 1.0, 0.7).unwrap();
        let p = TwoQubitParams::new(20.0, 1.0, 0.7).unwrap();
        let (rel, abs) = compare(0.7, &tag, 6.0, &with_peaks(&cfg, &p));
        assert!(rel < 1e-3 && abs < 1e-4, "{tag}: {rel:.3e} {abs:.3e}");
    }
}

#[test]
fn dark_state_emits_nothing() {
    let cfg = SystemConfig::two_qubit(20.0, 1.0, PI).unwrap();
    let s = quadrature(PI, &InitialStateTag::S, &window(&cfg, 10), 10.0, 1e-3);
    assert!(s.values.iter().all(|v| v.abs() < 1e-9));
    let cfg = SystemConfig::two_qubit(20.0, 1.0, 2.0 * PI).unwrap();
    let a = quadrature(2.0 * PI, &InitialStateTag::A, &window(&cfg, 10), 10.0, 1e-3);
    assert!(a.values.iter().all(|v| v.abs() < 1e-9));
}

#[test]
fn ground_state_emits_nothing() {
    let cfg = SystemConfig::two_qubit(20.0, 1.0, 0.4).unwrap();
    let rho = density_from_pure(&StateVector::basis_state(4, 0)).unwrap();
    let s = spectrum_quadrature(
        &cfg,
        &rho,
        &window(&cfg, 50),
        5.0,
        QuadratureOptions::default(),
    )
    .unwrap();
    assert!(s.values.iter().all(|v| *v == 0.0));
}

#[test]
fn halving_the_step_barely_moves_the_peak() {
    let cfg = SystemConfig::two_qubit(20.0, 1.0, PI / 2.0).unwrap();
    let omegas = [cfg.omega - 0.5, cfg.omega, cfg.omega + 0.5];
    let coarse = quadrature(PI / 2.0, &InitialStateTag::E, &omegas, 12.0, 2e-3);
    let fine = quadrature(PI / 2.0, &InitialStateTag::E, &omegas, 12.0, 1e-3);
    let (_, peak) = fine.peak().unwrap();
    let change = coarse
        .values
        .iter()
        .zip(&fine.values)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    assert!(change / peak < 1e-3, "{change:.3e}");
}

#[test]
fn dispersive_phase_agrees_on_resonance_only() {
    let cfg = SystemConfig::two_qubit(20.0, 1.0, PI / 2.0).unwrap();
    let rho = InitialStateTag::Eg.density().unwrap();
    let omegas = [cfg.omega, cfg.omega + 5.0];
    let res = spectrum_quadrature(&cfg, &rho, &omegas, 6.0, QuadratureOptions::default()).unwrap();
    let opts = QuadratureOptions {
        phase: PhaseConvention::Dispersive,
        ..Default::default()
    };
    let dis = spectrum_quadrature(&cfg, &rho, &omegas, 6.0, opts).unwrap();
    assert!((res.values[0] - dis.values[0]).abs() < 1e-12);
    assert!((res.values[1] - dis.values[1]).abs() > 1e-4);
}

#[test]
fn maximally_mixed_state_is_supported() {
    let cfg = SystemConfig::two_qubit(20.0, 1.0, 0.9).unwrap();
    let rho = wgqed_core::DensityMatrix::maximally_mixed(4);
    let p = TwoQubitParams::new(20.0, 1.0, 0.9).unwrap();
    let omegas = with_peaks(&cfg, &p);
    let s = spectrum_quadrature(&cfg, &rho, &omegas, 6.0, QuadratureOptions::default()).unwrap();
    // The mixture of the four Bell states radiates their average spectrum.
    for (w, v) in omegas.iter().zip(&s.values) {
        let avg: f64 = [InitialStateTag::E, InitialStateTag::S, InitialStateTag::A]
            .iter()
            .map(|t| spectrum(&p, t, *w, SpectrumTime::Finite(6.0)).unwrap())
            .sum::<f64>()
            / 4.0;
        assert!((v - avg).abs() < 1e-4, "{w}: {v} vs {avg}");
    }
}
