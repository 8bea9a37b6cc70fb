//! Shared domain types. Every constructor validates; instances are immutable.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;

use num_complex::Complex64;

use crate::error::{FfsError, Result};

/// Tolerance used for the orthogonality and determinant checks on [`RotationMatrix2`].
pub const ROTATION_TOLERANCE: f64 = 1e-12;

/// cos and sin of `quarters * pi/2`.
///
/// The argument is reduced modulo 4 first, and whole quarter turns return the
/// exact values {0, 1, -1} instead of `cos(pi/2) = 6.1e-17` and friends.
pub(crate) fn quarter_turn_cos_sin(quarters: f64) -> (f64, f64) {
    let r = quarters.rem_euclid(4.0);
    if r.fract() == 0.0 {
        match r as u8 {
            0 => (1.0, 0.0),
            1 => (0.0, 1.0),
            2 => (-1.0, 0.0),
            _ => (0.0, -1.0),
        }
    } else {
        let (s, c) = (FRAC_PI_2 * r).sin_cos();
        (c, s)
    }
}

/// The dimension parameter alpha >= 0 together with its phase pi*alpha/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FractionalOrder {
    alpha: f64,
    phase: f64,
}

impl FractionalOrder {
    pub const ZERO: FractionalOrder = FractionalOrder { alpha: 0.0, phase: 0.0 };

    pub fn new(alpha: f64) -> Result<Self> {
        if !alpha.is_finite() {
            return Err(FfsError::NonFinite("fractional order"));
        }
        if alpha < 0.0 {
            return Err(FfsError::NegativeOrder(alpha));
        }
        Ok(Self {
            alpha,
            phase: PI * alpha / 2.0,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// pi*alpha/2 in radians.
    pub fn phase(&self) -> f64 {
        self.phase
    }

    /// `(cos(pi*alpha/2), sin(pi*alpha/2))`, exact at integer alpha.
    pub fn cos_sin(&self) -> (f64, f64) {
        quarter_turn_cos_sin(self.alpha)
    }

    /// `e^{i*pi*alpha/2}`.
    pub fn unit_phasor(&self) -> Complex64 {
        let (c, s) = self.cos_sin();
        Complex64::new(c, s)
    }

    /// The order alpha1 + alpha2.
    pub fn add(&self, other: FractionalOrder) -> FractionalOrder {
        let alpha = self.alpha + other.alpha;
        FractionalOrder {
            alpha,
            phase: PI * alpha / 2.0,
        }
    }

    /// True when cos(pi*alpha/2) is zero (odd integer alpha), i.e. the DC map is singular.
    pub fn dc_is_singular(&self) -> bool {
        self.cos_sin().0.abs() < SINGULAR_DC_EPS
    }
}

impl fmt::Display for FractionalOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.alpha)
    }
}

/// |cos(pi*alpha/2)| below this is treated as zero when inverting the DC map.
pub const SINGULAR_DC_EPS: f64 = 1e-12;

/// Which basis a [`RealCoefficients`] set is expressed on.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BasisTag {
    /// Classical basis {1, cos(n w t), sin(n w t)}.
    Linear,
    /// Phase-shifted basis {cos(pi a/2), cos(n w t + pi a/2), sin(n w t + pi a/2)}.
    Fractional(FractionalOrder),
}

impl fmt::Display for BasisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisTag::Linear => f.write_str("linear-basis"),
            BasisTag::Fractional(order) => write!(f, "fractional-basis (alpha = {order})"),
        }
    }
}

/// A truncated real Fourier coefficient set `(a0, a_1..a_N, b_1..b_N)` on a period T.
///
/// `a0` is the coefficient of the DC basis function. On the linear basis that
/// is the constant term itself (half of the classical `A0`); on the fractional
/// basis it is the `a0` that multiplies `cos(pi*alpha/2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RealCoefficients {
    period: f64,
    a0: f64,
    a: Vec<f64>,
    b: Vec<f64>,
    basis: BasisTag,
}

impl RealCoefficients {
    /// A linear-basis coefficient set.
    pub fn new(period: f64, a0: f64, a: Vec<f64>, b: Vec<f64>) -> Result<Self> {
        Self::with_basis(period, a0, a, b, BasisTag::Linear)
    }

    pub fn with_basis(period: f64, a0: f64, a: Vec<f64>, b: Vec<f64>, basis: BasisTag) -> Result<Self> {
        validate_period(period)?;
        if a.len() != b.len() {
            return Err(FfsError::LengthMismatch {
                cos_terms: a.len(),
                sin_terms: b.len(),
            });
        }
        if !a0.is_finite() {
            return Err(FfsError::NonFinite("a0"));
        }
        if a.iter().any(|x| !x.is_finite()) {
            return Err(FfsError::NonFinite("cosine coefficients"));
        }
        if b.iter().any(|x| !x.is_finite()) {
            return Err(FfsError::NonFinite("sine coefficients"));
        }
        Ok(Self {
            period,
            a0,
            a,
            b,
            basis,
        })
    }

    /// Build from the classical `A0` (so the constant term is `A0/2`).
    pub fn from_full_dc(period: f64, dc_full: f64, a: Vec<f64>, b: Vec<f64>) -> Result<Self> {
        Self::new(period, dc_full / 2.0, a, b)
    }

    pub fn period(&self) -> f64 {
        self.period
    }

    /// Fundamental angular frequency 2*pi/T.
    pub fn omega(&self) -> f64 {
        2.0 * PI / self.period
    }

    pub fn a0(&self) -> f64 {
        self.a0
    }

    /// The classical `A0 = 2 * a0`.
    pub fn dc_full(&self) -> f64 {
        2.0 * self.a0
    }

    pub fn a(&self) -> &[f64] {
        &self.a
    }

    pub fn b(&self) -> &[f64] {
        &self.b
    }

    pub fn basis(&self) -> BasisTag {
        self.basis
    }

    /// Number of harmonics N.
    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    /// Iterates `(n, a_n, b_n)` for n = 1..=N.
    pub fn harmonics(&self) -> impl Iterator<Item = (usize, f64, f64)> + '_ {
        self.a
            .iter()
            .zip(&self.b)
            .enumerate()
            .map(|(i, (&a, &b))| (i + 1, a, b))
    }

    /// Same numbers, different basis reading.
    pub fn relabel(mut self, basis: BasisTag) -> Self {
        self.basis = basis;
        self
    }

    /// Largest absolute difference across all coefficients; `None` when the
    /// sets have different lengths or periods.
    pub fn max_abs_diff(&self, other: &RealCoefficients) -> Option<f64> {
        if self.len() != other.len() || self.period != other.period {
            return None;
        }
        let harm = self
            .a
            .iter()
            .zip(&other.a)
            .chain(self.b.iter().zip(&other.b))
            .map(|(x, y)| (x - y).abs());
        Some(harm.fold((self.a0 - other.a0).abs(), f64::max))
    }
}

/// Complex coefficients `c_n` for n = -N..=N, stored densely with offset N.
///
/// Conjugate symmetry `c_{-n} = conj(c_n)` is not required; it fails on the
/// fractional basis for alpha outside {0, 2, 4, ...}.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexCoefficients {
    period: f64,
    order: FractionalOrder,
    c: Vec<Complex64>,
}

impl ComplexCoefficients {
    /// `values[k]` holds `c_{k-N}` where `values.len() == 2N + 1`.
    pub fn new(period: f64, order: FractionalOrder, values: Vec<Complex64>) -> Result<Self> {
        validate_period(period)?;
        if values.len().is_multiple_of(2) {
            return Err(FfsError::AsymmetricIndexRange(values.len()));
        }
        if values.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(FfsError::NonFinite("complex coefficients"));
        }
        Ok(Self {
            period,
            order,
            c: values,
        })
    }

    pub fn period(&self) -> f64 {
        self.period
    }

    pub fn omega(&self) -> f64 {
        2.0 * PI / self.period
    }

    pub fn order(&self) -> FractionalOrder {
        self.order
    }

    /// Highest harmonic N.
    pub fn max_harmonic(&self) -> usize {
        self.c.len() / 2
    }

    pub fn get(&self, n: i64) -> Option<Complex64> {
        let idx = n + self.max_harmonic() as i64;
        usize::try_from(idx).ok().and_then(|i| self.c.get(i)).copied()
    }

    /// Iterates `(n, c_n)` in ascending n.
    pub fn iter(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        let n_max = self.max_harmonic() as i64;
        self.c.iter().enumerate().map(move |(k, &z)| (k as i64 - n_max, z))
    }
}

/// One period of uniform samples on the endpoint-exclusive grid
/// `t_k = t0 + k*T/M`, k = 0..M.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledSignal {
    t0: f64,
    period: f64,
    values: Vec<f64>,
}

impl SampledSignal {
    pub fn new(t0: f64, period: f64, values: Vec<f64>) -> Result<Self> {
        validate_period(period)?;
        if !t0.is_finite() {
            return Err(FfsError::NonFinite("t0"));
        }
        if values.len() < 2 {
            return Err(FfsError::TooFewSamples {
                required: 2,
                got: values.len(),
            });
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(FfsError::NonFinite("sample values"));
        }
        Ok(Self { t0, period, values })
    }

    /// Samples `f` on the grid of `m` points starting at `t0`.
    pub fn from_fn(t0: f64, period: f64, m: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        validate_period(period)?;
        let values = uniform_grid(t0, period, m).into_iter().map(f).collect();
        Self::new(t0, period, values)
    }

    pub fn t0(&self) -> f64 {
        self.t0
    }

    pub fn period(&self) -> f64 {
        self.period
    }

    pub fn omega(&self) -> f64 {
        2.0 * PI / self.period
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn dt(&self) -> f64 {
        self.period / self.values.len() as f64
    }

    pub fn times(&self) -> Vec<f64> {
        uniform_grid(self.t0, self.period, self.values.len())
    }
}

/// `m` endpoint-exclusive points tiling `[t0, t0 + period)`.
pub fn uniform_grid(t0: f64, period: f64, m: usize) -> Vec<f64> {
    (0..m).map(|k| t0 + period * k as f64 / m as f64).collect()
}

/// A 2x2 proper rotation matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationMatrix2 {
    m: [[f64; 2]; 2],
}

impl RotationMatrix2 {
    pub const IDENTITY: RotationMatrix2 = RotationMatrix2 {
        m: [[1.0, 0.0], [0.0, 1.0]],
    };

    pub fn new(m: [[f64; 2]; 2]) -> Result<Self> {
        if m.iter().flatten().any(|x| !x.is_finite()) {
            return Err(FfsError::NonFinite("rotation matrix"));
        }
        let r = Self { m };
        let orthogonality = r.orthogonality_defect();
        let det = r.det();
        if orthogonality >= ROTATION_TOLERANCE || (det - 1.0).abs() >= ROTATION_TOLERANCE {
            return Err(FfsError::NotARotation { orthogonality, det });
        }
        Ok(r)
    }

    pub fn entries(&self) -> [[f64; 2]; 2] {
        self.m
    }

    pub fn det(&self) -> f64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn transpose(&self) -> RotationMatrix2 {
        let m = self.m;
        RotationMatrix2 {
            m: [[m[0][0], m[1][0]], [m[0][1], m[1][1]]],
        }
    }

    /// `||m^T m - I||_inf`, entrywise maximum.
    pub fn orthogonality_defect(&self) -> f64 {
        let p = self.transpose().mul_raw(self);
        let id = [[1.0, 0.0], [0.0, 1.0]];
        let mut worst: f64 = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                worst = worst.max((p[i][j] - id[i][j]).abs());
            }
        }
        worst
    }

    fn mul_raw(&self, rhs: &RotationMatrix2) -> [[f64; 2]; 2] {
        let (a, b) = (self.m, rhs.m);
        let mut out = [[0.0; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        out
    }

    /// Matrix product `self * rhs`. The product of two rotations is a rotation.
    pub fn compose(&self, rhs: &RotationMatrix2) -> RotationMatrix2 {
        RotationMatrix2 { m: self.mul_raw(rhs) }
    }

    pub fn apply(&self, x: f64, y: f64) -> (f64, f64) {
        let m = self.m;
        (m[0][0] * x + m[0][1] * y, m[1][0] * x + m[1][1] * y)
    }

    /// Largest entrywise difference.
    pub fn max_abs_diff(&self, other: &RotationMatrix2) -> f64 {
        self.m
            .iter()
            .flatten()
            .zip(other.m.iter().flatten())
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    }
}

fn validate_period(period: f64) -> Result<()> {
    if !period.is_finite() {
        return Err(FfsError::NonFinite("period"));
    }
    if period <= 0.0 {
        return Err(FfsError::InvalidPeriod(period));
    }
    Ok(())
}
