use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use ffs_core::analysis::{analyze_classical, analyze_fractional};
use ffs_core::complexform::{complex_coefficients, synthesize_complex};
use ffs_core::fracderiv::{frac_derivative_coeffs, frac_derivative_signal};
use ffs_core::rotation::{from_fractional, to_fractional};
use ffs_core::synthesis::{synthesize_ffs, synthesize_linear_form};
use ffs_core::{uniform_grid, verify, BasisTag, DerivativeScaling, FractionalOrder, SignalKind, SignalSpec};

use crate::error::CliError;
use crate::files::{read_samples, render_csv, write_atomic, CoefficientFile};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Waveform {
    Square,
    Sawtooth,
    Triangle,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// CSV sample file with header `t,value`
    #[arg(long, conflicts_with = "signal", required_unless_present = "signal")]
    pub input: Option<PathBuf>,
    /// Built-in waveform to sample instead of reading a file
    #[arg(long, value_enum)]
    pub signal: Option<Waveform>,
    #[arg(long, default_value_t = 1.0, requires = "signal")]
    pub amplitude: f64,
    /// Samples per period for --signal
    #[arg(long, default_value_t = 4096, requires = "signal")]
    pub samples: usize,
    /// Period T; required with --signal, inferred from the grid for --input
    #[arg(long, required_unless_present = "input")]
    pub period: Option<f64>,
    /// Highest harmonic to extract (must satisfy 2*nmax < samples)
    #[arg(long)]
    pub nmax: usize,
    /// Project onto the fractional basis at this order instead of the classical one
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub output: PathBuf,
}

pub fn analyze(args: &AnalyzeArgs) -> Result<(), CliError> {
    let signal = match (&args.input, args.signal) {
        (Some(path), _) => read_samples(path, args.period)?,
        (None, Some(waveform)) => {
            let kind = match waveform {
                Waveform::Square => SignalKind::Square,
                Waveform::Sawtooth => SignalKind::Sawtooth,
                Waveform::Triangle => SignalKind::Triangle,
            };
            let period = args
                .period
                .ok_or_else(|| CliError::Input("--signal needs --period".into()))?;
            SignalSpec::new(kind, period, args.amplitude)?.sample(args.samples)?
        }
        (None, None) => return Err(CliError::Input("one of --input or --signal is required".into())),
    };
    let file = match args.alpha {
        None => CoefficientFile {
            alpha: None,
            coeffs: analyze_classical(&signal, args.nmax)?,
        },
        Some(alpha) => {
            let order = FractionalOrder::new(alpha)?;
            CoefficientFile {
                alpha: Some(order),
                coeffs: analyze_fractional(&signal, order, args.nmax)?,
            }
        }
    };
    file.write(&args.output)
}

#[derive(Debug, Args)]
pub struct RotateArgs {
    #[arg(long)]
    pub coeffs: PathBuf,
    #[arg(long)]
    pub alpha: f64,
    /// Undo a rotation: recover the coefficients of f(t) from those of f(t; alpha)
    #[arg(long)]
    pub inverse: bool,
    #[arg(long)]
    pub output: PathBuf,
}

pub fn rotate(args: &RotateArgs) -> Result<(), CliError> {
    let input = CoefficientFile::read(&args.coeffs)?;
    let order = FractionalOrder::new(args.alpha)?;
    let out = if args.inverse {
        if input.coeffs.basis() != BasisTag::Linear {
            return Err(CliError::Input("--inverse expects linear-basis coefficients".into()));
        }
        if let Some(recorded) = input.alpha {
            if recorded.alpha() != order.alpha() {
                return Err(CliError::Input(format!(
                    "file was rotated by alpha = {recorded}, not {order}"
                )));
            }
        }
        let recovered = from_fractional(&input.coeffs, order)?;
        if !recovered.dc_unique {
            eprintln!("note: cos(pi*alpha/2) = 0, the DC coefficient is not determined; wrote a0 = 0");
        }
        CoefficientFile {
            alpha: None,
            coeffs: recovered.coeffs,
        }
    } else {
        let source = match (input.coeffs.basis(), input.alpha) {
            (BasisTag::Linear, None) => input.coeffs,
            (BasisTag::Fractional(recorded), _) if recorded.alpha() == order.alpha() => {
                input.coeffs.relabel(BasisTag::Linear)
            }
            (BasisTag::Fractional(recorded), _) => {
                return Err(CliError::Input(format!(
                    "coefficients are on the fractional basis at alpha = {recorded}, cannot rotate by {order}"
                )))
            }
            (BasisTag::Linear, Some(recorded)) => {
                return Err(CliError::Input(format!(
                    "coefficients were already rotated by alpha = {recorded}; use --inverse first"
                )))
            }
        };
        CoefficientFile {
            alpha: Some(order),
            coeffs: to_fractional(&source, order)?,
        }
    };
    out.write(&args.output)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Form {
    /// Phase-shifted fractional basis
    #[default]
    Ffs,
    /// Rotated coefficients on the classical basis
    Linear,
    /// Complex exponential form; writes `t,re,im`
    Complex,
}

#[derive(Debug, Args)]
pub struct SynthesizeArgs {
    #[arg(long)]
    pub coeffs: PathBuf,
    /// Order to evaluate at; defaults to the file's alpha for fractional-basis files, else 0
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub points: usize,
    #[arg(long, value_enum, default_value_t = Form::Ffs)]
    pub form: Form,
    #[arg(long)]
    pub output: PathBuf,
}

fn check_points(points: usize) -> Result<(), CliError> {
    if points < 2 {
        return Err(CliError::Input(format!("--points must be at least 2, got {points}")));
    }
    Ok(())
}

pub fn synthesize(args: &SynthesizeArgs) -> Result<(), CliError> {
    check_points(args.points)?;
    let input = CoefficientFile::read(&args.coeffs)?;
    let order = match (args.alpha, input.coeffs.basis()) {
        (Some(alpha), _) => FractionalOrder::new(alpha)?,
        (None, BasisTag::Fractional(recorded)) => recorded,
        (None, BasisTag::Linear) => FractionalOrder::ZERO,
    };
    let coeffs = input.coeffs.relabel(BasisTag::Linear);
    let grid = uniform_grid(0.0, coeffs.period(), args.points);
    let text = match args.form {
        Form::Ffs => {
            let values = synthesize_ffs(&coeffs, order, &grid);
            render_csv(&["t", "value"], grid.iter().zip(values).map(|(&t, v)| vec![t, v]))
        }
        Form::Linear => {
            let values = synthesize_linear_form(&to_fractional(&coeffs, order)?, &grid);
            render_csv(&["t", "value"], grid.iter().zip(values).map(|(&t, v)| vec![t, v]))
        }
        Form::Complex => {
            let values = synthesize_complex(&complex_coefficients(&coeffs, order), &grid);
            render_csv(
                &["t", "re", "im"],
                grid.iter().zip(values).map(|(&t, z)| vec![t, z.re, z.im]),
            )
        }
    };
    write_atomic(&args.output, text.as_bytes())
}

#[derive(Debug, Args)]
pub struct FracDerivArgs {
    /// Classical (linear-basis) coefficients of f
    #[arg(long)]
    pub coeffs: PathBuf,
    #[arg(long)]
    pub alpha: f64,
    /// Multiply harmonic n by (n w)^alpha, matching the Weyl derivative
    #[arg(long)]
    pub scaled: bool,
    #[arg(long)]
    pub points: usize,
    /// Curve output; the derivative coefficients go to `<stem>.coeffs.json` beside it
    #[arg(long)]
    pub output: PathBuf,
}

/// `dir/curve.csv` -> `dir/curve.coeffs.json`.
pub fn sibling_coeffs_path(output: &Path) -> PathBuf {
    let stem = output
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "out".into());
    output.with_file_name(format!("{stem}.coeffs.json"))
}

pub fn fracderiv(args: &FracDerivArgs) -> Result<(), CliError> {
    check_points(args.points)?;
    let input = CoefficientFile::read(&args.coeffs)?;
    if input.coeffs.basis() != BasisTag::Linear {
        return Err(CliError::Input("fracderiv expects linear-basis coefficients".into()));
    }
    let order = FractionalOrder::new(args.alpha)?;
    let scaling = if args.scaled {
        DerivativeScaling::Scaled
    } else {
        DerivativeScaling::Normalized
    };
    let grid = uniform_grid(0.0, input.coeffs.period(), args.points);
    let values = frac_derivative_signal(&input.coeffs, order, scaling, &grid);
    let derived = CoefficientFile {
        alpha: Some(order),
        coeffs: frac_derivative_coeffs(&input.coeffs, order, scaling),
    };
    write_atomic(
        &args.output,
        render_csv(&["t", "value"], grid.iter().zip(values).map(|(&t, v)| vec![t, v])).as_bytes(),
    )?;
    derived.write(&sibling_coeffs_path(&args.output))
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = verify::DEFAULT_TOLERANCE)]
    pub tolerance: f64,
    #[arg(long, env = "FFS_SEED", default_value_t = verify::DEFAULT_SEED)]
    pub seed: u64,
}

pub fn run_verify(args: &VerifyArgs) -> Result<(), CliError> {
    let report = verify::run(args.seed, args.tolerance);
    print!("{}", report.render());
    match report.failures() {
        0 => Ok(()),
        n => Err(CliError::PropertyFailure(n)),
    }
}
