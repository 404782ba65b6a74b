//! Command-line front end.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::census::{
    classify, run_census, write_csv, write_json, CensusConfig, CensusError, Family, Model,
};
use crate::trigonal::{count_plane_quintic, SingType};

#[derive(Parser, Debug)]
#[command(name = "curve-census", version, about = "Census of genus-5 curves over F3 with many points")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sweep a family and classify its maximal curves.
    Census(CensusArgs),
    /// Count points of one model over GF(3^e).
    Count(CountArgs),
    /// Weil polynomial of one model over the counting field.
    Weil(WeilArgs),
    /// Partition models into isomorphism classes.
    Classify(ClassifyArgs),
    /// Check that a model defines a genus-5 curve.
    Validate(ValidateArgs),
    /// Decide whether two models are isomorphic.
    Isom(IsomArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
}

fn parse_count_field(s: &str) -> Result<u32, String> {
    match s {
        "3" => Ok(1),
        "9" => Ok(2),
        _ => Err("counting field must be 3 or 9".into()),
    }
}

fn parse_case(s: &str) -> Result<(SingType, u8), String> {
    let (t, c) = s
        .split_once('-')
        .ok_or_else(|| format!("expected TYPE-CASE such as split-1, got {s:?}"))?;
    let c: u8 = c.parse().map_err(|_| format!("bad case number in {s:?}"))?;
    Ok((t.parse()?, c))
}

#[derive(Args, Debug)]
struct CensusArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long, default_value = "9", value_parser = parse_count_field)]
    count_field: u32,
    #[arg(long, env = "CURVE_CENSUS_JOBS")]
    jobs: Option<usize>,
    /// Report destination; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Keep every valid model with at least this many points.
    #[arg(long)]
    min_count: Option<u64>,
    /// Restrict a trigonal sweep, e.g. `--case split-1 --case cusp-1`.
    #[arg(long = "case", value_parser = parse_case)]
    cases: Vec<(SingType, u8)>,
    /// Write phase-1 survivors as JSON lines.
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    /// Resume from a phase-1 checkpoint.
    #[arg(long)]
    resume: Option<PathBuf>,
    /// Omit runtime from the report, making it byte-reproducible.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Args, Debug)]
struct ModelArg {
    /// Family of the model; inferred from JSON input when omitted.
    #[arg(long, value_enum)]
    family: Option<Family>,
    /// JSON record or equation.
    #[arg(long)]
    model: String,
}

#[derive(Args, Debug)]
struct CountArgs {
    #[command(flatten)]
    m: ModelArg,
    #[arg(long, default_value_t = 1)]
    ext: u32,
    /// Count points of the plane quintic instead of its normalization.
    #[arg(long)]
    plane: bool,
}

#[derive(Args, Debug)]
struct WeilArgs {
    #[command(flatten)]
    m: ModelArg,
    #[arg(long, default_value = "9", value_parser = parse_count_field)]
    count_field: u32,
}

#[derive(Args, Debug)]
struct ValidateArgs {
    #[command(flatten)]
    m: ModelArg,
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    #[arg(long, value_enum)]
    family: Option<Family>,
    #[arg(long, default_value = "9", value_parser = parse_count_field)]
    count_field: u32,
    /// File with one model per line (JSON or equation).
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    model: Vec<String>,
}

#[derive(Args, Debug)]
struct IsomArgs {
    #[arg(long, value_enum)]
    family: Option<Family>,
    #[arg(long, default_value = "9", value_parser = parse_count_field)]
    count_field: u32,
    /// Exactly two models.
    #[arg(long, num_args = 1, required = true)]
    model: Vec<String>,
}

fn load_model(family: Option<Family>, src: &str) -> Result<Model, CensusError> {
    match family {
        Some(f) => Model::parse(f, src),
        None if src.trim_start().starts_with('{') => {
            let m: Model = serde_json::from_str(src)?;
            m.validate()?;
            Ok(m)
        }
        None => Err(CensusError::InvalidConfig(
            "--family is required for equation input".into(),
        )),
    }
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CensusError> {
    match cli.command {
        Command::Census(a) => {
            let mut cfg = CensusConfig::new(a.family, a.count_field);
            if let Some(j) = a.jobs {
                cfg.jobs = j;
            }
            cfg.min_count = a.min_count;
            cfg.cases = (!a.cases.is_empty()).then_some(a.cases);
            cfg.checkpoint = a.checkpoint;
            cfg.resume = a.resume;
            cfg.timing = !a.no_timing;
            let report = run_census(&cfg)?;
            match (a.out, a.format) {
                (Some(p), Format::Json) => write_json(&report, &p)?,
                (Some(p), Format::Csv) => write_csv(&report, &p)?,
                (None, Format::Json) => {
                    serde_json::to_writer_pretty(&mut *out, &report)?;
                    writeln!(out)?;
                }
                (None, Format::Csv) => {
                    let mut w = csv::Writer::from_writer(&mut *out);
                    for row in &report.rows {
                        w.serialize(row)?;
                    }
                    w.flush()?;
                }
            }
        }
        Command::Count(a) => {
            let m = load_model(a.m.family, &a.m.model)?;
            let n = match (m, a.plane) {
                (Model::Trigonal(t), true) => count_plane_quintic(&t, a.ext)?,
                (_, true) => {
                    return Err(CensusError::InvalidConfig(
                        "--plane applies to trigonal models".into(),
                    ))
                }
                _ => m.count(a.ext)?,
            };
            writeln!(out, "{n}")?;
        }
        Command::Weil(a) => {
            let m = load_model(a.m.family, &a.m.model)?;
            let w = m.weil(a.count_field)?;
            let v = serde_json::json!({
                "q": w.q,
                "weil": w.coeffs,
                "factored": w.factored(),
            });
            writeln!(out, "{v}")?;
        }
        Command::Validate(a) => {
            let m = load_model(a.m.family, &a.m.model)?;
            writeln!(out, "{}", m.is_genus5()?)?;
        }
        Command::Classify(a) => {
            let mut srcs = a.model;
            if let Some(p) = a.input {
                let text = std::fs::read_to_string(p)?;
                srcs.extend(
                    text.lines()
                        .map(str::trim)
                        .filter(|l| !l.is_empty() && !l.starts_with('#'))
                        .map(String::from),
                );
            }
            let models = srcs
                .iter()
                .map(|s| load_model(a.family, s))
                .collect::<Result<Vec<_>, _>>()?;
            let parts = classify(&models, a.count_field)?;
            writeln!(out, "{}", serde_json::to_string(&parts)?)?;
        }
        Command::Isom(a) => {
            let [m1, m2] = a.model.as_slice() else {
                return Err(CensusError::InvalidConfig("isom takes exactly two --model".into()));
            };
            let m1 = load_model(a.family, m1)?;
            let m2 = load_model(a.family, m2)?;
            let parts = classify(&[m1, m2], a.count_field)?;
            writeln!(out, "{}", parts.len() == 1)?;
        }
    }
    Ok(())
}

/// Runs the command line and returns the process exit code: 0 on success,
/// 1 on usage or I/O errors, 2 when an internal consistency check fails.
pub fn cli_main<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let _ = env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).try_init();
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match run(cli, &mut lock) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                CensusError::Assertion(_) => 2,
                _ => 1,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Result<String, CensusError> {
        let cli = Cli::try_parse_from(std::iter::once("curve-census").chain(args.iter().copied()))
            .map_err(|e| CensusError::InvalidConfig(e.to_string()))?;
        let mut buf = Vec::new();
        run(cli, &mut buf)?;
        Ok(String::from_utf8(buf).unwrap())
    }

    #[test]
    fn count_and_validate() {
        let out = run_args(&[
            "count",
            "--family",
            "hyperelliptic",
            "--model",
            "y^2 = x^12 + x^11 + 2x^7 + x^5 + 2x + 1",
            "--ext",
            "2",
        ])
        .unwrap();
        assert_eq!(out.trim(), "20");
        let json = r#"{"family":"hyperelliptic","c":1,"b1":1,"b2":0,"a":[1,2,2,0,0,0,0,0,0,0]}"#;
        assert_eq!(run_args(&["validate", "--model", json]).unwrap().trim(), "true");
    }

    #[test]
    fn usage_errors() {
        assert!(run_args(&["count", "--model", "y^2 = x^12 + 1"]).is_err());
        assert!(run_args(&["census", "--family", "trigonal", "--count-field", "27"]).is_err());
        assert!(run_args(&["frobnicate"]).is_err());
        assert_eq!(cli_main(["curve-census", "--bogus"]), 1);
    }
}
