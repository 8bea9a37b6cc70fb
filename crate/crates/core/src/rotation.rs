//! Coefficient-domain algebra: the clockwise rotation `R(-pi*alpha/2)` acting
//! on each harmonic pair, and the DC map `A0 = 2 a0 cos(pi*alpha/2)`.

use crate::error::{FfsError, Result};
use crate::types::{BasisTag, FractionalOrder, RealCoefficients, RotationMatrix2};

/// `[[cos, sin], [-sin, cos]]` at angle pi*alpha/2.
pub fn rotation_matrix(order: FractionalOrder) -> RotationMatrix2 {
    let (c, s) = order.cos_sin();
    RotationMatrix2::new([[c, s], [-s, c]]).expect("cos/sin pair is always a rotation")
}

/// `rotation_matrix(first) * rotation_matrix(second)`.
pub fn compose(first: FractionalOrder, second: FractionalOrder) -> RotationMatrix2 {
    rotation_matrix(first).compose(&rotation_matrix(second))
}

/// Maps the coefficients of f(t) to the linear-basis coefficients of f(t; alpha).
///
/// Each `(a_n, b_n)` is rotated by `R(-pi*alpha/2)`, and the constant term
/// becomes `a0 cos(pi*alpha/2)` (the classical `A0 = 2 a0 cos(pi*alpha/2)`).
/// The output stays on the linear basis; alpha now lives in the numbers.
pub fn to_fractional(coeffs: &RealCoefficients, order: FractionalOrder) -> Result<RealCoefficients> {
    if let BasisTag::Fractional(_) = coeffs.basis() {
        return Err(FfsError::BasisTagMismatch {
            expected: "linear-basis",
            found: coeffs.basis(),
        });
    }
    let r = rotation_matrix(order);
    let (cos_p, _) = order.cos_sin();
    let (a, b): (Vec<f64>, Vec<f64>) = coeffs.harmonics().map(|(_, an, bn)| r.apply(an, bn)).unzip();
    RealCoefficients::new(coeffs.period(), coeffs.a0() * cos_p, a, b)
}

/// Result of inverting [`to_fractional`].
#[derive(Debug, Clone, PartialEq)]
pub struct Recovered {
    pub coeffs: RealCoefficients,
    /// False when cos(pi*alpha/2) = 0 and the zero DC term was returned by
    /// convention: every a0 maps to the same constant there.
    pub dc_unique: bool,
}

/// Inverse of [`to_fractional`]: transpose rotation per pair and
/// `a0 = A0 / (2 cos(pi*alpha/2))`.
///
/// Fails with `SingularDc` at odd-integer alpha when the constant term is non-zero.
pub fn from_fractional(coeffs: &RealCoefficients, order: FractionalOrder) -> Result<Recovered> {
    if let BasisTag::Fractional(_) = coeffs.basis() {
        return Err(FfsError::BasisTagMismatch {
            expected: "linear-basis",
            found: coeffs.basis(),
        });
    }
    let rt = rotation_matrix(order).transpose();
    let (a, b): (Vec<f64>, Vec<f64>) = coeffs.harmonics().map(|(_, an, bn)| rt.apply(an, bn)).unzip();
    let (cos_p, _) = order.cos_sin();
    let (a0, dc_unique) = if order.dc_is_singular() {
        if coeffs.a0() != 0.0 {
            return Err(FfsError::SingularDc {
                alpha: order.alpha(),
                dc: coeffs.dc_full(),
            });
        }
        (0.0, false)
    } else {
        (coeffs.a0() / cos_p, true)
    };
    Ok(Recovered {
        coeffs: RealCoefficients::new(coeffs.period(), a0, a, b)?,
        dc_unique,
    })
}
