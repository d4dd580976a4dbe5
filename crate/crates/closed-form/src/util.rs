use wgqed_core::{c64, C64};

/// `φ(x) = (1 - e^{-x}) / x`, continuous at `x = 0` where it equals 1.
pub fn phi(x: f64) -> f64 {
    if x.abs() < 1e-10 {
        1.0 - 0.5 * x
    } else {
        -(-x).exp_m1() / x
    }
}

/// `(e^{-a t} - e^{-b t}) / (b - a)`, evaluated without cancellation when
/// `a ≈ b` (the limit is `t e^{-a t}`).
pub fn decay_difference(a: f64, b: f64, t: f64) -> f64 {
    (-a * t).exp() * t * phi((b - a) * t)
}

/// `∫_0^t e^{z τ} dτ = (e^{z t} - 1) / z`, continuous at `z = 0`.
pub fn exp_integral(z: C64, t: f64) -> C64 {
    let zt = z * t;
    if zt.norm() < 1e-8 {
        c64(t, 0.0) * (c64(1.0, 0.0) + zt * 0.5 + zt * zt / 6.0)
    } else {
        (zt.exp() - c64(1.0, 0.0)) / z
    }
}

/// `t → ∞` limit of [`exp_integral`] for `Re z ≤ 0`.
///
/// A channel with `Re z = 0` never decays; its oscillating contribution has
/// no limit and is dropped, which is what the dark-state spectra require.
pub fn exp_integral_inf(z: C64) -> C64 {
    if z.re == 0.0 {
        c64(0.0, 0.0)
    } else {
        -z.inv()
    }
}
