//! Coefficient extraction from one sampled period.
//!
//! All integrals use the periodic trapezoid rule on the endpoint-exclusive
//! grid, which reduces to `(T/M) * sum f(t_k) w(t_k)` and is exact for
//! trigonometric integrands below the Nyquist limit.

use crate::basis::shifted_cos_sin;
use crate::error::{FfsError, Result};
use crate::types::{BasisTag, FractionalOrder, RealCoefficients, SampledSignal};

/// `(T/M) * sum_k signal[k] * weight(t_k)`, summed in ascending k.
pub fn periodic_integral(signal: &SampledSignal, weight: impl Fn(f64) -> f64) -> f64 {
    let dt = signal.dt();
    let sum: f64 = signal
        .times()
        .into_iter()
        .zip(signal.values())
        .map(|(t, v)| v * weight(t))
        .sum();
    dt * sum
}

fn check_nyquist(signal: &SampledSignal, n_max: usize) -> Result<()> {
    if 2 * n_max >= signal.len() {
        return Err(FfsError::NyquistViolation {
            n_max,
            samples: signal.len(),
        });
    }
    Ok(())
}

/// Classical Fourier coefficients of the samples, up to harmonic `n_max`.
///
/// Stored with `a0 = A0/2`, i.e. the mean of the signal.
pub fn analyze_classical(signal: &SampledSignal, n_max: usize) -> Result<RealCoefficients> {
    check_nyquist(signal, n_max)?;
    let period = signal.period();
    let omega = signal.omega();
    let scale = 2.0 / period;
    let a0 = periodic_integral(signal, |_| 1.0) / period;
    let mut a = Vec::with_capacity(n_max);
    let mut b = Vec::with_capacity(n_max);
    for k in 1..=n_max {
        let kw = k as f64 * omega;
        a.push(scale * periodic_integral(signal, |t| (kw * t).cos()));
        b.push(scale * periodic_integral(signal, |t| (kw * t).sin()));
    }
    RealCoefficients::new(period, a0, a, b)
}

/// Projects samples of f(t; alpha) onto the fractional basis at `order`.
///
/// Harmonics: `a_k = (2/T) int f cos(k w t + pi a/2)`, likewise `b_k` with sin.
/// DC: `a0 cos(pi a/2) = (1/T) int f`. When cos(pi a/2) vanishes the mean must
/// vanish too (relative to the signal scale), otherwise `SingularDc`.
pub fn analyze_fractional(signal: &SampledSignal, order: FractionalOrder, n_max: usize) -> Result<RealCoefficients> {
    check_nyquist(signal, n_max)?;
    let period = signal.period();
    let omega = signal.omega();
    let scale = 2.0 / period;
    let mean = periodic_integral(signal, |_| 1.0) / period;
    let a0 = if order.dc_is_singular() {
        let magnitude = signal.values().iter().fold(1.0f64, |m, v| m.max(v.abs()));
        if mean.abs() > DC_RESIDUE_TOLERANCE * magnitude {
            return Err(FfsError::SingularDc {
                alpha: order.alpha(),
                dc: 2.0 * mean,
            });
        }
        0.0
    } else {
        mean / order.cos_sin().0
    };
    let mut a = Vec::with_capacity(n_max);
    let mut b = Vec::with_capacity(n_max);
    for k in 1..=n_max {
        let kw = k as f64 * omega;
        a.push(scale * periodic_integral(signal, |t| shifted_cos_sin(kw * t, order).0));
        b.push(scale * periodic_integral(signal, |t| shifted_cos_sin(kw * t, order).1));
    }
    RealCoefficients::with_basis(period, a0, a, b, BasisTag::Fractional(order))
}

/// Relative size of a signal mean still treated as zero at singular orders.
pub const DC_RESIDUE_TOLERANCE: f64 = 1e-12;
