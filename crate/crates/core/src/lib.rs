//! Fractional-dimensional Fourier series.
//!
//! A periodic function `f(t) = a0 + sum a_n cos(n w t) + b_n sin(n w t)` is
//! carried into fractional dimension alpha by advancing the phase of every
//! basis function by `pi*alpha/2`:
//!
//! ```text
//! f(t; alpha) = a0 cos(pi a/2) + sum a_n cos(n w t + pi a/2) + b_n sin(n w t + pi a/2)
//! ```
//!
//! On the classical basis the same function has coefficients rotated by the
//! 2x2 matrix `R(-pi*alpha/2)`, which is what [`rotation`] computes. The
//! crate also extracts coefficients from samples ([`analysis`]), evaluates
//! every equivalent series form ([`synthesis`], [`complexform`]), and treats
//! fractional differentiation as a coefficient transform ([`fracderiv`]).
//!
//! ```
//! use ffs_core::{rotation, FractionalOrder, RealCoefficients};
//!
//! let c = RealCoefficients::new(1.0, 0.0, vec![1.0], vec![1.0]).unwrap();
//! let half = FractionalOrder::new(0.5).unwrap();
//! let rotated = rotation::to_fractional(&c, half).unwrap();
//! assert!((rotated.a()[0] - 2f64.sqrt()).abs() < 1e-15);
//! assert!(rotated.b()[0].abs() < 1e-15);
//! ```

pub mod analysis;
pub mod basis;
pub mod complexform;
pub mod error;
pub mod fracderiv;
pub mod rotation;
pub mod signals;
pub mod synthesis;
pub mod types;
pub mod verify;

pub use error::{FfsError, Result};
pub use fracderiv::DerivativeScaling;
pub use num_complex::Complex64;
pub use signals::{SignalKind, SignalSpec};
pub use types::{
    uniform_grid, BasisTag, ComplexCoefficients, FractionalOrder, RealCoefficients, RotationMatrix2, SampledSignal,
};
