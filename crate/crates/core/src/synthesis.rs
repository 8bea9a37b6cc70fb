//! Evaluation of a truncated series on a time grid, in the three equivalent
//! real forms: on the fractional basis, expanded with rotated coefficients,
//! and on the linear basis with pre-rotated coefficients.
//!
//! Per point the summation order is fixed: DC, then cosine terms by
//! ascending n, then sine terms by ascending n.

use crate::basis::shifted_cos_sin;
use crate::types::{FractionalOrder, RealCoefficients};

/// `a0 cos(pi a/2) + sum a_n cos(n w t + pi a/2) + sum b_n sin(n w t + pi a/2)`.
///
/// The basis tag of `coeffs` is not consulted; the numbers are read as
/// fractional-basis coefficients at `order`.
pub fn synthesize_ffs(coeffs: &RealCoefficients, order: FractionalOrder, grid: &[f64]) -> Vec<f64> {
    let omega = coeffs.omega();
    let dc = coeffs.a0() * order.cos_sin().0;
    grid.iter()
        .map(|&t| {
            let mut cos_sum = 0.0;
            let mut sin_sum = 0.0;
            for (n, a, b) in coeffs.harmonics() {
                let (c, s) = shifted_cos_sin(n as f64 * omega * t, order);
                cos_sum += a * c;
                sin_sum += b * s;
            }
            dc + cos_sum + sin_sum
        })
        .collect()
}

/// `A0/2 + sum A_n cos(n w t) + sum B_n sin(n w t)`; `coeffs.a0()` is `A0/2`.
pub fn synthesize_linear_form(coeffs: &RealCoefficients, grid: &[f64]) -> Vec<f64> {
    let omega = coeffs.omega();
    grid.iter()
        .map(|&t| {
            let mut cos_sum = 0.0;
            let mut sin_sum = 0.0;
            for (n, a, b) in coeffs.harmonics() {
                let (s, c) = (n as f64 * omega * t).sin_cos();
                cos_sum += a * c;
                sin_sum += b * s;
            }
            coeffs.a0() + cos_sum + sin_sum
        })
        .collect()
}

/// The series with each phase-shifted term expanded by angle addition:
/// `(a_n cos + b_n sin) cos(n w t) + (-a_n sin + b_n cos) sin(n w t)`, with
/// cos/sin taken at pi*alpha/2.
pub fn synthesize_expanded_form(coeffs: &RealCoefficients, order: FractionalOrder, grid: &[f64]) -> Vec<f64> {
    let omega = coeffs.omega();
    let (cp, sp) = order.cos_sin();
    grid.iter()
        .map(|&t| {
            let mut cos_sum = 0.0;
            let mut sin_sum = 0.0;
            for (n, a, b) in coeffs.harmonics() {
                let (s, c) = (n as f64 * omega * t).sin_cos();
                cos_sum += (a * cp + b * sp) * c;
                sin_sum += (-a * sp + b * cp) * s;
            }
            coeffs.a0() * cp + cos_sum + sin_sum
        })
        .collect()
}
