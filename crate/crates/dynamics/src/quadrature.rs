//! Composite rules on uniform grids.

use std::ops::{Add, Mul};

/// `∫ f` from samples `f(0), f(h), …, f(nh)`.
///
/// Composite Simpson when `n` is even. For odd `n ≥ 3` the last three
/// intervals use Simpson's 3/8 rule; a single interval falls back to the
/// trapezoid.
pub fn simpson<T>(values: &[T], h: f64) -> T
where
    T: Copy + Default + Add<Output = T> + Mul<f64, Output = T>,
{
    let n = values.len().saturating_sub(1);
    match n {
        0 => T::default(),
        1 => (values[0] + values[1]) * (0.5 * h),
        _ if n.is_multiple_of(2) => even(values, h),
        _ => {
            let head = &values[..=n - 3];
            let t = &values[n - 3..];
            let tail = (t[0] + t[1] * 3.0 + t[2] * 3.0 + t[3]) * (3.0 * h / 8.0);
            if head.len() > 1 {
                even(head, h) + tail
            } else {
                tail
            }
        }
    }
}

fn even<T>(values: &[T], h: f64) -> T
where
    T: Copy + Default + Add<Output = T> + Mul<f64, Output = T>,
{
    let n = values.len() - 1;
    let mut acc = values[0] + values[n];
    for (k, v) in values.iter().enumerate().take(n).skip(1) {
        acc = acc + *v * if k % 2 == 1 { 4.0 } else { 2.0 };
    }
    acc * (h / 3.0)
}
