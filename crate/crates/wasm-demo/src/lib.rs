//! wasm-bindgen bindings for the browser curve viewer in `www/`.
//!
//! Every waveform lives on [0, 2π) with unit amplitude and is truncated to
//! `n_max` harmonics from its closed-form coefficients.

use std::f64::consts::TAU;

use ffs_core::fracderiv::frac_derivative_signal;
use ffs_core::rotation::to_fractional;
use ffs_core::synthesis::synthesize_ffs;
use ffs_core::{uniform_grid, DerivativeScaling, FractionalOrder, RealCoefficients, SignalKind, SignalSpec};
use wasm_bindgen::prelude::*;

const MAX_HARMONICS: usize = 512;
const MAX_POINTS: usize = 8192;

fn waveform(name: &str, n_max: usize) -> Result<RealCoefficients, String> {
    let kind = match name {
        "square" => SignalKind::Square,
        "sawtooth" => SignalKind::Sawtooth,
        "triangle" => SignalKind::Triangle,
        "sine" => SignalKind::TrigPolynomial {
            a0: 0.0,
            a: vec![0.0],
            b: vec![1.0],
        },
        other => return Err(format!("unknown waveform {other:?}")),
    };
    if n_max == 0 || n_max > MAX_HARMONICS {
        return Err(format!("harmonics must be in 1..={MAX_HARMONICS}"));
    }
    let spec = SignalSpec::new(kind, TAU, 1.0).map_err(|e| e.to_string())?;
    Ok(spec.analytic_coefficients(n_max))
}

fn order(alpha: f64) -> Result<FractionalOrder, String> {
    FractionalOrder::new(alpha).map_err(|e| e.to_string())
}

fn grid(points: usize) -> Result<Vec<f64>, String> {
    if !(2..=MAX_POINTS).contains(&points) {
        return Err(format!("points must be in 2..={MAX_POINTS}"));
    }
    Ok(uniform_grid(0.0, TAU, points))
}

fn curve_impl(name: &str, n_max: usize, alpha: f64, points: usize) -> Result<Vec<f64>, String> {
    Ok(synthesize_ffs(&waveform(name, n_max)?, order(alpha)?, &grid(points)?))
}

/// `[a0, A_1, B_1, A_2, B_2, ...]`: the rotated coefficients at order alpha.
fn rotated_impl(name: &str, n_max: usize, alpha: f64) -> Result<Vec<f64>, String> {
    let r = to_fractional(&waveform(name, n_max)?, order(alpha)?).map_err(|e| e.to_string())?;
    let mut flat = vec![r.a0()];
    flat.extend(r.harmonics().flat_map(|(_, a, b)| [a, b]));
    Ok(flat)
}

fn derivative_impl(name: &str, n_max: usize, alpha: f64, scaled: bool, points: usize) -> Result<Vec<f64>, String> {
    let scaling = if scaled {
        DerivativeScaling::Scaled
    } else {
        DerivativeScaling::Normalized
    };
    let c = waveform(name, n_max)?;
    let o = order(alpha)?;
    let g = grid(points)?;
    Ok(frac_derivative_signal(&c, o, scaling, &g))
}

/// Sample times for a curve with `points` samples.
#[wasm_bindgen]
pub fn sample_times(points: usize) -> Result<Vec<f64>, JsError> {
    grid(points).map_err(|e| JsError::new(&e))
}

/// f(t; alpha) for a waveform truncated to `n_max` harmonics.
#[wasm_bindgen]
pub fn ffs_curve(waveform: &str, n_max: usize, alpha: f64, points: usize) -> Result<Vec<f64>, JsError> {
    curve_impl(waveform, n_max, alpha, points).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn rotated_coefficients(waveform: &str, n_max: usize, alpha: f64) -> Result<Vec<f64>, JsError> {
    rotated_impl(waveform, n_max, alpha).map_err(|e| JsError::new(&e))
}

/// Fractional derivative curve; `scaled` multiplies harmonic n by n^alpha.
#[wasm_bindgen]
pub fn derivative_curve(
    waveform: &str,
    n_max: usize,
    alpha: f64,
    scaled: bool,
    points: usize,
) -> Result<Vec<f64>, JsError> {
    derivative_impl(waveform, n_max, alpha, scaled, points).map_err(|e| JsError::new(&e))
}
