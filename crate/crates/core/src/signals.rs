//! Standard periodic test waveforms with closed-form Fourier coefficients.

use std::f64::consts::PI;

use crate::error::{FfsError, Result};
use crate::synthesis::synthesize_linear_form;
use crate::types::{RealCoefficients, SampledSignal};

#[derive(Debug, Clone, PartialEq)]
pub enum SignalKind {
    /// Odd square wave: +A on (0, T/2), -A on (T/2, T).
    Square,
    /// `2 A t / T` on [-T/2, T/2), repeated.
    Sawtooth,
    /// Even triangle: `A (1 - 4|t|/T)` on [-T/2, T/2].
    Triangle,
    /// A finite classical series with constant term `a0`.
    TrigPolynomial { a0: f64, a: Vec<f64>, b: Vec<f64> },
}

/// A waveform on one period. `amplitude` scales every kind, trig polynomials included.
#[derive(Debug, Clone, PartialEq)]
pub struct SignalSpec {
    kind: SignalKind,
    period: f64,
    amplitude: f64,
}

impl SignalSpec {
    pub fn new(kind: SignalKind, period: f64, amplitude: f64) -> Result<Self> {
        if !amplitude.is_finite() {
            return Err(FfsError::NonFinite("amplitude"));
        }
        if let SignalKind::TrigPolynomial { a0, a, b } = &kind {
            // validates lengths, finiteness and the period in one place
            RealCoefficients::new(period, *a0, a.clone(), b.clone())?;
        } else if !period.is_finite() {
            return Err(FfsError::NonFinite("period"));
        } else if period <= 0.0 {
            return Err(FfsError::InvalidPeriod(period));
        }
        Ok(Self {
            kind,
            period,
            amplitude,
        })
    }

    pub fn kind(&self) -> &SignalKind {
        &self.kind
    }

    pub fn period(&self) -> f64 {
        self.period
    }

    pub fn amplitude(&self) -> f64 {
        self.amplitude
    }

    /// Value at phase `u = t/T` reduced to [0, 1). Jumps take the midpoint.
    fn value_at_phase(&self, u: f64) -> f64 {
        let u = u.rem_euclid(1.0);
        let amp = self.amplitude;
        match &self.kind {
            SignalKind::Square => {
                if u == 0.0 || u == 0.5 {
                    0.0
                } else if u < 0.5 {
                    amp
                } else {
                    -amp
                }
            }
            SignalKind::Sawtooth => {
                if u == 0.5 {
                    0.0
                } else if u < 0.5 {
                    2.0 * amp * u
                } else {
                    2.0 * amp * (u - 1.0)
                }
            }
            SignalKind::Triangle => {
                let centered = if u <= 0.5 { u } else { 1.0 - u };
                amp * (1.0 - 4.0 * centered)
            }
            SignalKind::TrigPolynomial { .. } => {
                let coeffs = self.analytic_coefficients(self.harmonic_count());
                synthesize_linear_form(&coeffs, &[u * self.period])[0]
            }
        }
    }

    fn harmonic_count(&self) -> usize {
        match &self.kind {
            SignalKind::TrigPolynomial { a, .. } => a.len(),
            _ => 0,
        }
    }

    /// Value at time t.
    pub fn value_at(&self, t: f64) -> f64 {
        self.value_at_phase(t / self.period)
    }

    /// `m` samples over [0, T). Phases are computed as exact ratios k/m so that
    /// jump locations land on the midpoint convention.
    pub fn sample(&self, m: usize) -> Result<SampledSignal> {
        let values = (0..m).map(|k| self.value_at_phase(k as f64 / m as f64)).collect();
        SampledSignal::new(0.0, self.period, values)
    }

    /// Closed-form classical coefficients up to `n_max` (linear basis, `a0` = mean).
    ///
    /// With w = 2 pi / T and A the amplitude:
    /// * square: `b_n = (2/T) int_0^T f sin(n w t) dt = 4A/(n pi)` for odd n, else 0;
    /// * sawtooth: `int_0^{T/2} t sin(n w t) dt = (-1)^{n+1} T^2/(4 pi n)`, so
    ///   `b_n = 2A (-1)^{n+1}/(n pi)`;
    /// * triangle: `int_0^{T/2} t cos(n w t) dt = ((-1)^n - 1)/(n w)^2`, so
    ///   `a_n = 8A/(n pi)^2` for odd n, else 0.
    pub fn analytic_coefficients(&self, n_max: usize) -> RealCoefficients {
        let amp = self.amplitude;
        let mut a = vec![0.0; n_max];
        let mut b = vec![0.0; n_max];
        let mut a0 = 0.0;
        for n in 1..=n_max {
            let nf = n as f64;
            let odd = n % 2 == 1;
            match &self.kind {
                SignalKind::Square if odd => b[n - 1] = 4.0 * amp / (nf * PI),
                SignalKind::Sawtooth => {
                    let sign = if odd { 1.0 } else { -1.0 };
                    b[n - 1] = 2.0 * amp * sign / (nf * PI);
                }
                SignalKind::Triangle if odd => a[n - 1] = 8.0 * amp / (nf * PI).powi(2),
                _ => {}
            }
        }
        if let SignalKind::TrigPolynomial { a0: p0, a: pa, b: pb } = &self.kind {
            a0 = amp * p0;
            for (dst, src) in a.iter_mut().zip(pa) {
                *dst = amp * src;
            }
            for (dst, src) in b.iter_mut().zip(pb) {
                *dst = amp * src;
            }
        }
        RealCoefficients::new(self.period, a0, a, b).expect("validated at construction")
    }
}
