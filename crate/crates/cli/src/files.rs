//! On-disk formats: schema-tagged JSON coefficient files and `t,value` CSV
//! sample/curve files. Every float is written with 17 significant digits and
//! every write goes through a temporary file followed by a rename.

use std::fs;
use std::io::Write;
use std::path::Path;

use ffs_core::{BasisTag, FractionalOrder, RealCoefficients, SampledSignal};
use serde::{Deserialize, Serialize, Serializer};
use serde_json::value::RawValue;
use tempfile::NamedTempFile;

use crate::error::CliError;

pub const COEFF_SCHEMA: &str = "ffs-coeffs/1";

/// Relative tolerance on sample spacing and period coverage.
pub const SPACING_TOLERANCE: f64 = 1e-9;

/// Fixed 17-significant-digit rendering shared by JSON and CSV output.
pub fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

struct Fixed(f64);

impl Serialize for Fixed {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RawValue::from_string(fmt17(self.0))
            .map_err(serde::ser::Error::custom)?
            .serialize(serializer)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisName {
    Linear,
    Fractional,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCoefficientFile {
    schema: String,
    period: f64,
    alpha: Option<f64>,
    basis: BasisName,
    a0: f64,
    a: Vec<f64>,
    b: Vec<f64>,
}

#[derive(Serialize)]
struct OutCoefficientFile<'a> {
    schema: &'a str,
    period: Fixed,
    alpha: Option<Fixed>,
    basis: BasisName,
    a0: Fixed,
    a: Vec<Fixed>,
    b: Vec<Fixed>,
}

/// A coefficient set as stored on disk.
///
/// `basis = linear, alpha = null`: classical coefficients of f(t).
/// `basis = linear, alpha = x`: classical coefficients of f(t; x), i.e. rotated.
/// `basis = fractional, alpha = x`: coefficients on the fractional basis at order x.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientFile {
    pub alpha: Option<FractionalOrder>,
    pub coeffs: RealCoefficients,
}

impl CoefficientFile {
    pub fn basis_name(&self) -> BasisName {
        match self.coeffs.basis() {
            BasisTag::Linear => BasisName::Linear,
            BasisTag::Fractional(_) => BasisName::Fractional,
        }
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let raw: RawCoefficientFile =
            serde_json::from_str(text).map_err(|e| CliError::Input(format!("coefficient file: {e}")))?;
        if raw.schema != COEFF_SCHEMA {
            return Err(CliError::Input(format!(
                "unsupported schema {:?}, expected {COEFF_SCHEMA:?}",
                raw.schema
            )));
        }
        let alpha = raw.alpha.map(FractionalOrder::new).transpose()?;
        let basis = match (raw.basis, alpha) {
            (BasisName::Linear, _) => BasisTag::Linear,
            (BasisName::Fractional, Some(order)) => BasisTag::Fractional(order),
            (BasisName::Fractional, None) => {
                return Err(CliError::Input(
                    "a fractional-basis coefficient file must record alpha".into(),
                ))
            }
        };
        let coeffs = RealCoefficients::with_basis(raw.period, raw.a0, raw.a, raw.b, basis)?;
        Ok(Self { alpha, coeffs })
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Self::parse(&text)
    }

    pub fn render(&self) -> String {
        let c = &self.coeffs;
        let out = OutCoefficientFile {
            schema: COEFF_SCHEMA,
            period: Fixed(c.period()),
            alpha: self.alpha.map(|o| Fixed(o.alpha())),
            basis: self.basis_name(),
            a0: Fixed(c.a0()),
            a: c.a().iter().copied().map(Fixed).collect(),
            b: c.b().iter().copied().map(Fixed).collect(),
        };
        let mut text = serde_json::to_string_pretty(&out).expect("plain struct always serialises");
        text.push('\n');
        text
    }

    pub fn write(&self, path: &Path) -> Result<(), CliError> {
        write_atomic(path, self.render().as_bytes())
    }
}

/// Writes `bytes` to a temporary file next to `path`, then renames it into place.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = NamedTempFile::new_in(dir).map_err(|e| CliError::io(path, e))?;
    tmp.write_all(bytes).map_err(|e| CliError::io(path, e))?;
    tmp.as_file().sync_all().map_err(|e| CliError::io(path, e))?;
    tmp.persist(path).map_err(|e| CliError::io(path, e.error))?;
    Ok(())
}

/// Parses a `t,value` sample file into one period of samples.
///
/// The period defaults to `M * dt`; when `period` is given it must match that
/// within [`SPACING_TOLERANCE`].
pub fn parse_samples(text: &str, period: Option<f64>) -> Result<SampledSignal, CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let headers = reader
        .headers()
        .map_err(|e| CliError::Input(format!("sample file header: {e}")))?;
    if headers.len() != 2 || &headers[0] != "t" || &headers[1] != "value" {
        return Err(CliError::Input(format!(
            "sample file header must be `t,value`, got {:?}",
            headers.iter().collect::<Vec<_>>()
        )));
    }
    let mut times = Vec::new();
    let mut values = Vec::new();
    for (line, record) in reader.records().enumerate() {
        let record = record.map_err(|e| CliError::Input(format!("sample file: {e}")))?;
        let parse = |field: &str| {
            field
                .parse::<f64>()
                .map_err(|e| CliError::Input(format!("sample row {}: {field:?}: {e}", line + 1)))
        };
        times.push(parse(&record[0])?);
        values.push(parse(&record[1])?);
    }
    if times.len() < 2 {
        return Err(CliError::Input(format!(
            "sample file needs at least 2 rows, got {}",
            times.len()
        )));
    }
    let m = times.len();
    let dt = (times[m - 1] - times[0]) / (m - 1) as f64;
    if !(dt > 0.0 && dt.is_finite()) {
        return Err(CliError::Input("sample times must be strictly increasing".into()));
    }
    for (k, pair) in times.windows(2).enumerate() {
        let step = pair[1] - pair[0];
        if (step - dt).abs() > SPACING_TOLERANCE * dt {
            return Err(CliError::Input(format!(
                "non-uniform sample spacing at row {}: {step} vs {dt}",
                k + 2
            )));
        }
    }
    let covered = dt * m as f64;
    let period = match period {
        Some(t) if (t - covered).abs() > SPACING_TOLERANCE * t.abs() => {
            return Err(CliError::Input(format!(
                "samples cover {covered}, not one period of {t}"
            )));
        }
        Some(t) => t,
        None => covered,
    };
    Ok(SampledSignal::new(times[0], period, values)?)
}

pub fn read_samples(path: &Path, period: Option<f64>) -> Result<SampledSignal, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse_samples(&text, period)
}

/// CSV with a header and one row per point, every number in 17-digit form.
pub fn render_csv(header: &[&str], rows: impl Iterator<Item = Vec<f64>>) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        let cells: Vec<String> = row.into_iter().map(fmt17).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}
