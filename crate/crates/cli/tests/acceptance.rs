//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Run with `cargo test -p ffs-cli --test acceptance`.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::fs;
use std::process::{Command, ExitCode};

use ffs_core::analysis::analyze_classical;
use ffs_core::basis::conjugate_symmetry_defect;
use ffs_core::complexform::{complex_coefficients, synthesize_complex};
use ffs_core::fracderiv::{frac_derivative_coeffs, frac_derivative_signal, weyl_oracle};
use ffs_core::rotation::{compose, rotation_matrix, to_fractional};
use ffs_core::synthesis::{synthesize_expanded_form, synthesize_ffs, synthesize_linear_form};
use ffs_core::{
    uniform_grid, DerivativeScaling, FractionalOrder, RealCoefficients, SampledSignal, SignalKind, SignalSpec,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    passed: bool,
    detail: String,
}

fn within(label: &str, err: f64, tol: f64) -> Outcome {
    Outcome {
        passed: err <= tol,
        detail: format!("{label}: max error {err:.3e} (tolerance {tol:.0e})"),
    }
}

fn all(parts: Vec<Outcome>) -> Outcome {
    Outcome {
        passed: parts.iter().all(|p| p.passed),
        detail: parts.iter().map(|p| p.detail.as_str()).collect::<Vec<_>>().join("; "),
    }
}

fn ord(alpha: f64) -> FractionalOrder {
    FractionalOrder::new(alpha).unwrap()
}

fn random_coeffs(rng: &mut ChaCha8Rng, period: f64, max_n: usize) -> RealCoefficients {
    let n = rng.gen_range(1..=max_n);
    let a0 = rng.gen_range(-1.0..1.0);
    let a = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let b = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    RealCoefficients::new(period, a0, a, b).unwrap()
}

fn zero_dc(c: &RealCoefficients) -> RealCoefficients {
    RealCoefficients::new(c.period(), 0.0, c.a().to_vec(), c.b().to_vec()).unwrap()
}

fn max_diff(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(p, q)| (p - q).abs()).fold(0.0, f64::max)
}

/// Direct evaluation of the classical series, independent of the library's synthesis code.
fn classical_series(c: &RealCoefficients, t: f64) -> f64 {
    let w = 2.0 * PI / c.period();
    c.a0()
        + c.a()
            .iter()
            .zip(c.b())
            .enumerate()
            .map(|(i, (a, b))| {
                let x = (i + 1) as f64 * w * t;
                a * x.cos() + b * x.sin()
            })
            .sum::<f64>()
}

fn alpha_zero_degeneration(rng: &mut ChaCha8Rng) -> Outcome {
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let c = random_coeffs(rng, 2.0, 16);
        let grid = uniform_grid(0.0, 2.0, 256);
        let classical: Vec<f64> = grid.iter().map(|&t| classical_series(&c, t)).collect();
        worst = worst.max(max_diff(&synthesize_ffs(&c, FractionalOrder::ZERO, &grid), &classical));
    }
    within("50 sets, 256 points", worst, 1e-12)
}

fn half_order_reproduction(rng: &mut ChaCha8Rng) -> Outcome {
    let half = ord(0.5);
    let (mut coeff_err, mut synth_err): (f64, f64) = (0.0, 0.0);
    for _ in 0..50 {
        let c = random_coeffs(rng, 1.0, 16);
        let r = to_fractional(&c, half).unwrap();
        for ((_, a, b), (_, big_a, big_b)) in c.harmonics().zip(r.harmonics()) {
            coeff_err = coeff_err
                .max((big_a - FRAC_1_SQRT_2 * (a + b)).abs())
                .max((big_b - FRAC_1_SQRT_2 * (-a + b)).abs());
        }
        coeff_err = coeff_err.max((r.a0() - FRAC_1_SQRT_2 * c.a0()).abs());
        let grid = uniform_grid(0.0, 1.0, 256);
        let ffs = synthesize_ffs(&c, half, &grid);
        synth_err = synth_err
            .max(max_diff(&ffs, &synthesize_expanded_form(&c, half, &grid)))
            .max(max_diff(&ffs, &synthesize_linear_form(&r, &grid)));
    }
    all(vec![
        within("coefficient pattern", coeff_err, 1e-15),
        within("three synthesis forms", synth_err, 1e-12),
    ])
}

fn shifted_series_analysis(rng: &mut ChaCha8Rng) -> Outcome {
    let mut worst: f64 = 0.0;
    let mut dc_worst: f64 = 0.0;
    for alpha in [0.25, 0.5, 1.0, 1.5] {
        let o = ord(alpha);
        for _ in 0..10 {
            let c = random_coeffs(rng, 2.0, 8);
            let grid = uniform_grid(0.0, 2.0, 1024);
            let s = SampledSignal::new(0.0, 2.0, synthesize_ffs(&c, o, &grid)).unwrap();
            let analyzed = analyze_classical(&s, c.len()).unwrap();
            worst = worst.max(analyzed.max_abs_diff(&to_fractional(&c, o).unwrap()).unwrap());
            // A0 = 2 a0 cos(pi a/2), checked against the closed form directly
            dc_worst = dc_worst.max((analyzed.dc_full() - 2.0 * c.a0() * (PI * alpha / 2.0).cos()).abs());
        }
    }
    all(vec![
        within("analysis = rotation, M = 1024", worst, 1e-10),
        within("A0 = 2 a0 cos", dc_worst, 1e-10),
    ])
}

fn complex_equals_real(rng: &mut ChaCha8Rng) -> Outcome {
    let (mut re_err, mut im_err): (f64, f64) = (0.0, 0.0);
    for alpha in [0.0, 0.5, 1.0, 1.5, 2.0] {
        let o = ord(alpha);
        for _ in 0..10 {
            let c = random_coeffs(rng, 3.0, 8);
            let grid = uniform_grid(0.0, 3.0, 128);
            let z = synthesize_complex(&complex_coefficients(&c, o), &grid);
            let real = synthesize_ffs(&c, o, &grid);
            for (zi, ri) in z.iter().zip(&real) {
                re_err = re_err.max((zi.re - ri).abs());
                im_err = im_err.max(zi.im.abs());
            }
        }
    }
    all(vec![
        within("real part", re_err, 1e-12),
        within("imaginary residue", im_err, 1e-12),
    ])
}

fn conjugate_breakage() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut zeros = Vec::new();
    for k in 0..=20 {
        let alpha = k as f64 * 0.1;
        for n in 1..=8 {
            let d = conjugate_symmetry_defect(n, ord(alpha)).unwrap();
            worst = worst.max((d - 2.0 * (PI * alpha / 2.0).sin().abs()).abs());
            if d < 1e-14 && n == 1 {
                zeros.push(alpha);
            }
        }
    }
    let zero_set_ok = zeros == [0.0, 2.0];
    all(vec![
        within("defect = 2|sin(pi a/2)|", worst, 1e-14),
        Outcome {
            passed: zero_set_ok,
            detail: format!("zero at alpha = {zeros:?}"),
        },
    ])
}

fn rotation_algebra(rng: &mut ChaCha8Rng) -> Outcome {
    let grid: Vec<FractionalOrder> = (0..=40).map(|k| ord(k as f64 * 0.1)).collect();
    let (mut group, mut orth, mut det, mut parseval): (f64, f64, f64, f64) = (0.0, 0.0, 0.0, 0.0);
    for &x in &grid {
        let r = rotation_matrix(x);
        orth = orth.max(r.orthogonality_defect());
        det = det.max((r.det() - 1.0).abs());
        for &y in &grid {
            group = group.max(compose(x, y).max_abs_diff(&rotation_matrix(x.add(y))));
        }
        let c = random_coeffs(rng, 1.0, 16);
        let rotated = to_fractional(&c, x).unwrap();
        for ((_, a, b), (_, p, q)) in c.harmonics().zip(rotated.harmonics()) {
            parseval = parseval.max(((p * p + q * q) - (a * a + b * b)).abs());
        }
    }
    all(vec![
        within("group law", group, 1e-12),
        within("orthogonality", orth, 1e-12),
        within("determinant", det, 1e-12),
        within("Parseval", parseval, 1e-12),
    ])
}

fn fractional_derivative(rng: &mut ChaCha8Rng) -> Outcome {
    let mut weyl: f64 = 0.0;
    for alpha in [0.25, 0.5, 0.75, 1.0, 1.5] {
        for _ in 0..5 {
            let c = zero_dc(&random_coeffs(rng, 2.0 * PI, 8));
            let grid = uniform_grid(0.0, c.period(), 512);
            let signal = SampledSignal::new(0.0, c.period(), synthesize_linear_form(&c, &grid)).unwrap();
            let oracle = weyl_oracle(&signal, ord(alpha)).unwrap();
            let ours = frac_derivative_signal(&c, ord(alpha), DerivativeScaling::Scaled, &grid);
            weyl = weyl.max(max_diff(&oracle, &ours));
        }
    }
    let mut semigroup: f64 = 0.0;
    let mut normalized: f64 = 0.0;
    for _ in 0..10 {
        let c = zero_dc(&random_coeffs(rng, 2.0 * PI, 8));
        let grid = uniform_grid(0.0, c.period(), 128);
        let half = frac_derivative_coeffs(&c, ord(0.5), DerivativeScaling::Scaled);
        let twice = frac_derivative_signal(&half, ord(0.5), DerivativeScaling::Scaled, &grid);
        let once = frac_derivative_signal(&c, ord(1.0), DerivativeScaling::Scaled, &grid);
        semigroup = semigroup.max(max_diff(&twice, &once));

        let full = random_coeffs(rng, 1.5, 16);
        let grid = uniform_grid(0.0, 1.5, 128);
        for alpha in [0.3, 0.5, 1.0, 1.7] {
            let d = frac_derivative_signal(&full, ord(alpha), DerivativeScaling::Normalized, &grid);
            normalized = normalized.max(max_diff(&d, &synthesize_ffs(&full, ord(alpha), &grid)));
        }
    }
    all(vec![
        within("scaled vs Weyl oracle, M = 512", weyl, 1e-9),
        within("D^0.5 D^0.5 = D^1", semigroup, 1e-9),
        within("normalized = FFS synthesis", normalized, 1e-12),
    ])
}

fn classical_oracle() -> Outcome {
    let period = 2.0 * PI;
    let m = 4096;
    let square = SignalSpec::new(SignalKind::Square, period, 1.0).unwrap();
    let c = analyze_classical(&square.sample(m).unwrap(), 9).unwrap();
    let sq_err = [1usize, 3, 5, 7, 9]
        .iter()
        .map(|&n| (c.b()[n - 1] - 4.0 / (n as f64 * PI)).abs())
        .fold(0.0, f64::max);

    let tri = SignalSpec::new(SignalKind::Triangle, period, 1.0).unwrap();
    let tri_err = analyze_classical(&tri.sample(m).unwrap(), 9)
        .unwrap()
        .max_abs_diff(&tri.analytic_coefficients(9))
        .unwrap();

    let poly_kind = SignalKind::TrigPolynomial {
        a0: 0.5,
        a: vec![0.25, 0.0, -0.75, 0.1],
        b: vec![-0.5, 0.3, 0.0, 0.9],
    };
    let poly = SignalSpec::new(poly_kind, period, 1.0).unwrap();
    let poly_err = analyze_classical(&poly.sample(m).unwrap(), 9)
        .unwrap()
        .max_abs_diff(&poly.analytic_coefficients(9))
        .unwrap();

    all(vec![
        within("square b_n = 4/(n pi)", sq_err, 2e-3),
        within("triangle", tri_err, 1e-6),
        within("trig polynomial", poly_err, 1e-12),
    ])
}

fn cli_contract() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_ffs");
    let dir = tempfile::tempdir().unwrap();
    let p = |name: &str| dir.path().join(name).to_string_lossy().into_owned();
    let run = |args: &[&str]| Command::new(bin).args(args).env_remove("FFS_SEED").output().unwrap();

    fs::write(p("bad.csv"), "t,value\n0,1\n0.1,2\n0.3,3\n0.4,4\n").unwrap();
    fs::write(
        p("dc.json"),
        r#"{"schema":"ffs-coeffs/1","period":1,"alpha":null,"basis":"linear","a0":1,"a":[0],"b":[1]}"#,
    )
    .unwrap();

    let verify = run(&["verify"]);
    let again = run(&["verify"]);
    let cases: [(&str, i32, Option<i32>); 5] = [
        ("verify", 0, verify.status.code()),
        (
            "verify --tolerance 1e-16",
            1,
            run(&["verify", "--tolerance", "1e-16"]).status.code(),
        ),
        (
            "non-uniform CSV",
            2,
            run(&[
                "analyze",
                "--input",
                &p("bad.csv"),
                "--nmax",
                "1",
                "--output",
                &p("o.json"),
            ])
            .status
            .code(),
        ),
        (
            "nmax >= M/2",
            3,
            run(&[
                "analyze",
                "--signal",
                "square",
                "--period",
                "1",
                "--samples",
                "8",
                "--nmax",
                "4",
                "--output",
                &p("o.json"),
            ])
            .status
            .code(),
        ),
        (
            "inverse at alpha = 1",
            4,
            run(&[
                "rotate",
                "--coeffs",
                &p("dc.json"),
                "--inverse",
                "--alpha",
                "1",
                "--output",
                &p("o.json"),
            ])
            .status
            .code(),
        ),
    ];
    let mut parts: Vec<Outcome> = cases
        .iter()
        .map(|(label, want, got)| Outcome {
            passed: *got == Some(*want),
            detail: format!("{label} -> {got:?} (want {want})"),
        })
        .collect();
    let listed = String::from_utf8_lossy(&verify.stdout)
        .lines()
        .filter(|l| l.ends_with("PASS"))
        .count();
    parts.push(Outcome {
        passed: listed >= 12,
        detail: format!("{listed} properties listed"),
    });
    parts.push(Outcome {
        passed: verify.stdout == again.stdout,
        detail: "report byte-stable".into(),
    });
    all(parts)
}

fn main() -> ExitCode {
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_601);
    let criteria: Vec<(&str, Outcome)> = vec![
        ("AC-1 alpha = 0 degeneration", alpha_zero_degeneration(&mut rng)),
        (
            "AC-2 alpha = 1/2 coefficient pattern",
            half_order_reproduction(&mut rng),
        ),
        (
            "AC-3 classical analysis of f(t;a) = rotated coefficients",
            shifted_series_analysis(&mut rng),
        ),
        ("AC-4 complex form equals real form", complex_equals_real(&mut rng)),
        ("AC-5 conjugate-symmetry breakage", conjugate_breakage()),
        ("AC-6 rotation algebra", rotation_algebra(&mut rng)),
        (
            "AC-7 fractional derivative vs Weyl oracle",
            fractional_derivative(&mut rng),
        ),
        ("AC-8 classical waveform oracle", classical_oracle()),
        ("AC-9 CLI contract", cli_contract()),
    ];
    let mut failed = 0;
    for (name, outcome) in &criteria {
        let verdict = if outcome.passed { "PASS" } else { "FAIL" };
        println!("[{verdict}] {name} -- {}", outcome.detail);
        if !outcome.passed {
            failed += 1;
        }
    }
    println!(
        "{}/{} acceptance criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
