//! Fractional differentiation of a periodic function as a transform on its
//! classical coefficients.

use num_complex::Complex64;

use crate::analysis::analyze_classical;
use crate::error::{FfsError, Result};
use crate::rotation::rotation_matrix;
use crate::synthesis::synthesize_linear_form;
use crate::types::{FractionalOrder, RealCoefficients, SampledSignal};

/// Amplitude convention for [`frac_derivative_coeffs`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DerivativeScaling {
    /// Pure phase rotation of each harmonic; the `(n w)^alpha` factor is dropped.
    #[default]
    Normalized,
    /// Harmonic n is additionally multiplied by `(n w)^alpha` (Weyl-consistent for n >= 1).
    Scaled,
}

/// Coefficients `(A0', A_n', B_n')` of `D^alpha f` given those of f.
///
/// `A0' = A0 cos(pi a/2)` in both variants; each harmonic pair is rotated by
/// `R(-pi a/2)` and, when scaled, multiplied by `(n w)^alpha`.
pub fn frac_derivative_coeffs(
    coeffs: &RealCoefficients,
    order: FractionalOrder,
    scaling: DerivativeScaling,
) -> RealCoefficients {
    let r = rotation_matrix(order);
    let omega = coeffs.omega();
    let (a, b): (Vec<f64>, Vec<f64>) = coeffs
        .harmonics()
        .map(|(n, an, bn)| {
            let (x, y) = r.apply(an, bn);
            match scaling {
                DerivativeScaling::Normalized => (x, y),
                DerivativeScaling::Scaled => {
                    let gain = (n as f64 * omega).powf(order.alpha());
                    (gain * x, gain * y)
                }
            }
        })
        .unzip();
    RealCoefficients::new(coeffs.period(), coeffs.a0() * order.cos_sin().0, a, b)
        .expect("finite coefficients stay finite under rotation and scaling")
}

/// `D^alpha f` evaluated on `grid`.
pub fn frac_derivative_signal(
    coeffs: &RealCoefficients,
    order: FractionalOrder,
    scaling: DerivativeScaling,
    grid: &[f64],
) -> Vec<f64> {
    synthesize_linear_form(&frac_derivative_coeffs(coeffs, order, scaling), grid)
}

/// Weyl fractional derivative of a sampled periodic signal, evaluated on the
/// signal's own grid.
///
/// Projects onto `e^{i n w t}`, multiplies harmonic n by `(i n w)^alpha`
/// (principal branch), drops the mean and resynthesises. Uses every harmonic
/// strictly below Nyquist whose magnitude is above [`SPECTRAL_NOISE_FLOOR`]
/// relative to the signal scale; round-off in empty harmonics would otherwise
/// be amplified by `(n w)^alpha`.
pub fn weyl_oracle(signal: &SampledSignal, order: FractionalOrder) -> Result<Vec<f64>> {
    if signal.len() < 4 {
        return Err(FfsError::TooFewSamples {
            required: 4,
            got: signal.len(),
        });
    }
    let n_max = (signal.len() - 1) / 2;
    let classical = analyze_classical(signal, n_max)?;
    let omega = signal.omega();
    let scale = signal.values().iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let floor = SPECTRAL_NOISE_FLOOR * scale;
    let multipliers: Vec<(f64, Complex64)> = classical
        .harmonics()
        .filter(|&(_, a, b)| a.hypot(b) > floor)
        .map(|(n, a, b)| {
            let c_n = Complex64::new(a, -b) / 2.0;
            let symbol = Complex64::new(0.0, n as f64 * omega).powf(order.alpha());
            (n as f64 * omega, c_n * symbol)
        })
        .collect();
    Ok(signal
        .times()
        .into_iter()
        .map(|t| {
            multipliers
                .iter()
                .map(|&(nw, d_n)| 2.0 * (d_n * Complex64::new(0.0, nw * t).exp()).re)
                .sum()
        })
        .collect())
}

/// Harmonics smaller than this fraction of `max |f|` are treated as empty.
pub const SPECTRAL_NOISE_FLOOR: f64 = 1e-13;
