//! Seeded property checks over the whole library, shared by the CLI `verify`
//! command and the test suites.
//!
//! Each check draws its random inputs from a ChaCha stream seeded with
//! `seed`, so a report is reproducible bit for bit.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::{analyze_classical, analyze_fractional, periodic_integral};
use crate::basis::{complex_basis, conjugate_symmetry_defect, frac_basis_cos, frac_basis_dc, frac_basis_sin};
use crate::complexform::{complex_coefficients, synthesize_complex};
use crate::fracderiv::{frac_derivative_coeffs, frac_derivative_signal, weyl_oracle, DerivativeScaling};
use crate::rotation::{compose, from_fractional, rotation_matrix, to_fractional};
use crate::synthesis::{synthesize_expanded_form, synthesize_ffs, synthesize_linear_form};
use crate::types::{uniform_grid, FractionalOrder, RealCoefficients, SampledSignal};

pub const DEFAULT_TOLERANCE: f64 = 1e-10;
pub const DEFAULT_SEED: u64 = 42;

/// Outcome of one property.
#[derive(Debug, Clone, PartialEq)]
pub struct PropertyResult {
    pub name: &'static str,
    pub max_error: f64,
    pub tolerance: f64,
}

impl PropertyResult {
    pub fn passed(&self) -> bool {
        self.max_error <= self.tolerance
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub seed: u64,
    pub tolerance: f64,
    pub results: Vec<PropertyResult>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(PropertyResult::passed)
    }

    pub fn failures(&self) -> usize {
        self.results.iter().filter(|r| !r.passed()).count()
    }

    /// Fixed-width table, one line per property.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "property suite: seed = {}, tolerance = {:e}",
            self.seed, self.tolerance
        );
        let _ = writeln!(out, "{:<44} {:>24}  result", "property", "max error");
        for r in &self.results {
            let verdict = if r.passed() { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{:<44} {:>24.16e}  {}", r.name, r.max_error, verdict);
        }
        let passed = self.results.len() - self.failures();
        let _ = writeln!(out, "{passed}/{} properties passed", self.results.len());
        out
    }
}

fn order(alpha: f64) -> FractionalOrder {
    FractionalOrder::new(alpha).expect("grid orders are finite and non-negative")
}

fn random_coeffs(rng: &mut ChaCha8Rng, period: f64, max_n: usize) -> RealCoefficients {
    let n = rng.gen_range(1..=max_n);
    let a0 = rng.gen_range(-1.0..1.0);
    let a = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let b = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    RealCoefficients::new(period, a0, a, b).expect("random coefficients are finite")
}

fn max_diff(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(p, q)| (p - q).abs()).fold(0.0, f64::max)
}

fn with_zero_dc(c: &RealCoefficients) -> RealCoefficients {
    RealCoefficients::new(c.period(), 0.0, c.a().to_vec(), c.b().to_vec()).expect("finite")
}

fn sampled(c: &RealCoefficients, o: FractionalOrder, m: usize) -> SampledSignal {
    let grid = uniform_grid(0.0, c.period(), m);
    SampledSignal::new(0.0, c.period(), synthesize_ffs(c, o, &grid)).expect("finite samples")
}

type Check = fn(&mut ChaCha8Rng) -> f64;

/// Runs every property with the given seed and tolerance.
pub fn run(seed: u64, tolerance: f64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let checks: [(&'static str, Check); 16] = [
        ("alpha = 0 recovers classical series", alpha_zero_degeneration),
        ("three real synthesis forms agree", three_form_equivalence),
        ("classical analysis of FFS = rotation", classical_analysis_is_rotation),
        (
            "fractional analysis recovers coefficients",
            fractional_analysis_round_trip,
        ),
        ("rotation round trip", rotation_round_trip),
        ("rotation group law", rotation_group_law),
        ("rotation orthogonality", rotation_orthogonality),
        ("rotation determinant", rotation_determinant),
        ("per-harmonic Parseval", harmonic_parseval),
        ("basis orthonormality", basis_orthonormality),
        ("real/complex basis consistency", real_complex_basis_consistency),
        ("conjugate-symmetry defect closed form", conjugate_defect_closed_form),
        ("complex synthesis equals real synthesis", complex_equals_real),
        ("half-turn sign flip", half_turn),
        ("scaled derivative matches Weyl oracle", weyl_match),
        ("scaled derivative semigroup", semigroup),
    ];
    let mut results: Vec<PropertyResult> = checks
        .iter()
        .map(|&(name, check)| PropertyResult {
            name,
            max_error: check(&mut rng),
            tolerance,
        })
        .collect();
    results.push(PropertyResult {
        name: "normalized derivative equals FFS synthesis",
        max_error: normalized_derivative_identity(&mut rng),
        tolerance,
    });
    Report {
        seed,
        tolerance,
        results,
    }
}

fn alpha_zero_degeneration(rng: &mut ChaCha8Rng) -> f64 {
    (0..50)
        .map(|_| {
            let c = random_coeffs(rng, 2.0, 16);
            let grid = uniform_grid(0.0, 2.0, 256);
            let classical: Vec<f64> = grid
                .iter()
                .map(|&t| {
                    c.a0()
                        + c.harmonics()
                            .map(|(n, a, b)| {
                                let x = n as f64 * c.omega() * t;
                                a * x.cos() + b * x.sin()
                            })
                            .sum::<f64>()
                })
                .collect();
            max_diff(&synthesize_ffs(&c, FractionalOrder::ZERO, &grid), &classical)
        })
        .fold(0.0, f64::max)
}

fn three_form_equivalence(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst: f64 = 0.0;
    for step in 0..=20 {
        let o = order(step as f64 * 0.1);
        let c = random_coeffs(rng, 1.5, 16);
        let grid = uniform_grid(0.0, 1.5, 256);
        let ffs = synthesize_ffs(&c, o, &grid);
        let linear = synthesize_linear_form(&to_fractional(&c, o).expect("linear input"), &grid);
        worst = worst
            .max(max_diff(&ffs, &synthesize_expanded_form(&c, o, &grid)))
            .max(max_diff(&ffs, &linear));
    }
    worst
}

fn classical_analysis_is_rotation(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst: f64 = 0.0;
    for alpha in [0.0, 0.25, 0.5, 1.0, 1.5] {
        let o = order(alpha);
        let c = random_coeffs(rng, 2.0, 8);
        let analyzed = analyze_classical(&sampled(&c, o, 1024), c.len()).expect("below Nyquist");
        let rotated = to_fractional(&c, o).expect("linear input");
        worst = worst.max(analyzed.max_abs_diff(&rotated).expect("same shape"));
    }
    worst
}

fn fractional_analysis_round_trip(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst: f64 = 0.0;
    for alpha in [0.0, 0.25, 0.5, 1.0, 1.5] {
        let o = order(alpha);
        let c = random_coeffs(rng, 2.0, 8);
        let back = analyze_fractional(&sampled(&c, o, 1024), o, c.len()).expect("consistent DC");
        for ((_, a, b), (_, x, y)) in c.harmonics().zip(back.harmonics()) {
            worst = worst.max((a - x).abs()).max((b - y).abs());
        }
        if !o.dc_is_singular() {
            worst = worst.max((c.a0() - back.a0()).abs());
        }
    }
    worst
}

fn rotation_round_trip(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst: f64 = 0.0;
    for step in 0..=40 {
        let o = order(step as f64 * 0.1);
        let c = random_coeffs(rng, 1.0, 8);
        let source = if o.dc_is_singular() { with_zero_dc(&c) } else { c };
        let back = from_fractional(&to_fractional(&source, o).expect("linear"), o).expect("invertible");
        worst = worst.max(back.coeffs.max_abs_diff(&source).expect("same shape"));
    }
    worst
}

fn alpha_grid() -> impl Iterator<Item = FractionalOrder> {
    (0..=40).map(|k| order(k as f64 * 0.1))
}

fn rotation_group_law(_: &mut ChaCha8Rng) -> f64 {
    let mut worst: f64 = 0.0;
    for x in alpha_grid() {
        for y in alpha_grid() {
            worst = worst.max(compose(x, y).max_abs_diff(&rotation_matrix(x.add(y))));
        }
    }
    worst
}

fn rotation_orthogonality(_: &mut ChaCha8Rng) -> f64 {
    alpha_grid()
        .map(|o| rotation_matrix(o).orthogonality_defect())
        .fold(0.0, f64::max)
}

fn rotation_determinant(_: &mut ChaCha8Rng) -> f64 {
    alpha_grid()
        .map(|o| (rotation_matrix(o).det() - 1.0).abs())
        .fold(0.0, f64::max)
}

fn harmonic_parseval(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst: f64 = 0.0;
    for o in alpha_grid() {
        let c = random_coeffs(rng, 1.0, 16);
        let r = to_fractional(&c, o).expect("linear");
        for ((_, a, b), (_, x, y)) in c.harmonics().zip(r.harmonics()) {
            worst = worst.max(((x * x + y * y) - (a * a + b * b)).abs());
        }
    }
    worst
}

fn basis_orthonormality(_: &mut ChaCha8Rng) -> f64 {
    let period = 1.0;
    let omega = std::f64::consts::TAU;
    let mut worst: f64 = 0.0;
    for alpha in [0.0, 0.3, 0.5, 1.0, 1.7] {
        let o = order(alpha);
        for n in 1..=8i64 {
            let cos_n = SampledSignal::from_fn(0.0, period, 512, |t| frac_basis_cos(n, omega, o, t).expect("n >= 1"))
                .expect("grid");
            let sin_n = SampledSignal::from_fn(0.0, period, 512, |t| frac_basis_sin(n, omega, o, t).expect("n >= 1"))
                .expect("grid");
            for k in 1..=8i64 {
                let delta = if n == k { 1.0 } else { 0.0 };
                let cc = 2.0 / period * periodic_integral(&cos_n, |t| frac_basis_cos(k, omega, o, t).expect("k >= 1"));
                let ss = 2.0 / period * periodic_integral(&sin_n, |t| frac_basis_sin(k, omega, o, t).expect("k >= 1"));
                let cs = 2.0 / period * periodic_integral(&cos_n, |t| frac_basis_sin(k, omega, o, t).expect("k >= 1"));
                worst = worst.max((cc - delta).abs()).max((ss - delta).abs()).max(cs.abs());
            }
        }
    }
    worst
}

fn real_complex_basis_consistency(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst: f64 = 0.0;
    for o in alpha_grid() {
        worst = worst.max((frac_basis_dc(o) - complex_basis(0, 1.0, o, 0.0).re).abs());
        for n in 1..=8i64 {
            let t = rng.gen_range(-5.0..5.0);
            let z = complex_basis(n, 1.0, o, t);
            worst = worst
                .max((frac_basis_cos(n, 1.0, o, t).expect("n >= 1") - z.re).abs())
                .max((frac_basis_sin(n, 1.0, o, t).expect("n >= 1") - z.im).abs());
        }
    }
    worst
}

fn conjugate_defect_closed_form(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst: f64 = 0.0;
    for o in alpha_grid() {
        let n = rng.gen_range(1..=8i64);
        let closed = conjugate_symmetry_defect(n, o).expect("n >= 1");
        worst = worst.max((closed - 2.0 * o.phase().sin().abs()).abs());
        let t = rng.gen_range(-5.0..5.0);
        let direct = (complex_basis(-n, 1.0, o, t) - complex_basis(n, 1.0, o, t).conj()).norm();
        worst = worst.max((closed - direct).abs());
    }
    worst
}

fn complex_equals_real(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst: f64 = 0.0;
    for alpha in [0.0, 0.5, 1.0, 1.5, 2.0] {
        let o = order(alpha);
        let c = random_coeffs(rng, 3.0, 8);
        let grid = uniform_grid(0.0, 3.0, 128);
        let z = synthesize_complex(&complex_coefficients(&c, o), &grid);
        let real = synthesize_ffs(&c, o, &grid);
        for (zi, ri) in z.iter().zip(&real) {
            worst = worst.max((zi.re - ri).abs()).max(zi.im.abs());
        }
    }
    worst
}

fn half_turn(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst: f64 = 0.0;
    for step in 0..=20 {
        let alpha = step as f64 * 0.1;
        let c = random_coeffs(rng, 1.0, 16);
        let grid = uniform_grid(0.0, 1.0, 64);
        let x = synthesize_ffs(&c, order(alpha), &grid);
        let y = synthesize_ffs(&c, order(alpha + 2.0), &grid);
        worst = worst.max(x.iter().zip(&y).map(|(p, q)| (p + q).abs()).fold(0.0, f64::max));
    }
    worst
}

fn weyl_match(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst: f64 = 0.0;
    for alpha in [0.25, 0.5, 1.0, 1.5] {
        let o = order(alpha);
        let c = with_zero_dc(&random_coeffs(rng, std::f64::consts::TAU, 8));
        let grid = uniform_grid(0.0, c.period(), 512);
        let signal = SampledSignal::new(0.0, c.period(), synthesize_linear_form(&c, &grid)).expect("finite");
        let oracle = weyl_oracle(&signal, o).expect("M >= 4");
        let ours = frac_derivative_signal(&c, o, DerivativeScaling::Scaled, &grid);
        worst = worst.max(max_diff(&oracle, &ours));
    }
    worst
}

fn semigroup(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst: f64 = 0.0;
    let orders = [0.25, 0.5, 1.0];
    for &x in &orders {
        for &y in &orders {
            let (ox, oy) = (order(x), order(y));
            let c = with_zero_dc(&random_coeffs(rng, std::f64::consts::TAU, 8));
            let grid = uniform_grid(0.0, c.period(), 128);
            let inner = frac_derivative_coeffs(&c, oy, DerivativeScaling::Scaled);
            let twice = frac_derivative_signal(&inner, ox, DerivativeScaling::Scaled, &grid);
            let once = frac_derivative_signal(&c, ox.add(oy), DerivativeScaling::Scaled, &grid);
            worst = worst.max(max_diff(&twice, &once));
        }
    }
    worst
}

fn normalized_derivative_identity(rng: &mut ChaCha8Rng) -> f64 {
    let mut worst: f64 = 0.0;
    for step in 0..=20 {
        let o = order(step as f64 * 0.1);
        let c = random_coeffs(rng, 2.0, 16);
        let grid = uniform_grid(0.0, 2.0, 128);
        let d = frac_derivative_signal(&c, o, DerivativeScaling::Normalized, &grid);
        worst = worst.max(max_diff(&d, &synthesize_ffs(&c, o, &grid)));
    }
    worst
}
