//! Pointwise evaluation of the linear and fractional basis functions.
//!
//! The fractional basis is the classical one with every phase advanced by
//! pi*alpha/2; the `1/(n w)^alpha` normalisation is already applied.

use num_complex::Complex64;

use crate::error::{FfsError, Result};
use crate::types::FractionalOrder;

/// The DC basis function at order alpha, `cos(pi*alpha/2)`.
pub fn frac_basis_dc(order: FractionalOrder) -> f64 {
    order.cos_sin().0
}

/// `(cos(theta + pi*alpha/2), sin(theta + pi*alpha/2))` by angle addition,
/// so quarter-turn orders stay exact.
#[inline]
pub(crate) fn shifted_cos_sin(theta: f64, order: FractionalOrder) -> (f64, f64) {
    let (cp, sp) = order.cos_sin();
    let (st, ct) = theta.sin_cos();
    (ct * cp - st * sp, st * cp + ct * sp)
}

fn check_harmonic(n: i64) -> Result<()> {
    if n < 1 {
        return Err(FfsError::NonPositiveHarmonic(n));
    }
    Ok(())
}

/// `cos(n w t + pi*alpha/2)` for n >= 1.
pub fn frac_basis_cos(n: i64, omega: f64, order: FractionalOrder, t: f64) -> Result<f64> {
    check_harmonic(n)?;
    Ok(shifted_cos_sin(n as f64 * omega * t, order).0)
}

/// `sin(n w t + pi*alpha/2)` for n >= 1.
pub fn frac_basis_sin(n: i64, omega: f64, order: FractionalOrder, t: f64) -> Result<f64> {
    check_harmonic(n)?;
    Ok(shifted_cos_sin(n as f64 * omega * t, order).1)
}

/// `e^{i(n w t + pi*alpha/2)}` for any integer n.
///
/// The phase is `+pi*alpha/2` for negative n as well, so
/// `complex_basis(-n) != conj(complex_basis(n))` unless alpha is an even integer.
pub fn complex_basis(n: i64, omega: f64, order: FractionalOrder, t: f64) -> Complex64 {
    if n == 0 {
        return order.unit_phasor();
    }
    let (c, s) = shifted_cos_sin(n as f64 * omega * t, order);
    Complex64::new(c, s)
}

/// `sup_t |phi_{-n}(t) - conj(phi_n(t))| = 2|sin(pi*alpha/2)|`, independent of t and n.
pub fn conjugate_symmetry_defect(n: i64, order: FractionalOrder) -> Result<f64> {
    check_harmonic(n)?;
    Ok(2.0 * order.cos_sin().1.abs())
}
