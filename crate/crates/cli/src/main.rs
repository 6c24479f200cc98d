//! `cevia`: exact cevian constructions and the curve family behind them.
//!
//! Exit codes: 0 success, 1 verification failure, 2 degenerate geometry,
//! 64 usage or parse errors, 73 unwritable output.

mod plot;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use cevia_core::cevian::{CevianContext, DegeneracyFlags};
use cevia_core::curve::{j_invert, CurveFamilyMember};
use cevia_core::rational::{parse_rational, rat_int, to_f64, Rational};
use cevia_core::verify::{run as run_verify, VerifyConfig};
use cevia_core::BaryPoint;

use report::{ConstructReport, CurveInfoReport, IntervalReport};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_DEGENERATE: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_IO: u8 = 73;

#[derive(Parser)]
#[command(
    name = "cevia",
    version,
    about = "Exact cevian constructions in barycentric coordinates and the elliptic curves they sweep out"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum PlotFormat {
    Svg,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the full construction report for a driving point P = (x, y, z)
    Construct {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
        #[arg(allow_hyphen_values = true)]
        z: String,
    },
    /// Invariants of the family member E_a
    CurveInfo {
        #[arg(allow_hyphen_values = true)]
        a: String,
        /// Tolerance for the numeric Legendre cross-check
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// All real parameters a with j(E_a) = j0, as isolating intervals
    JInvert {
        #[arg(allow_hyphen_values = true)]
        j0: String,
        /// Maximum interval width, an exact rational
        #[arg(long, default_value = "1/1000000000000")]
        prec: String,
    },
    /// Sample the affine chart of E_a and write an SVG or CSV plot
    Plot {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(long, default_value_t = -2.0, allow_hyphen_values = true)]
        xmin: f64,
        #[arg(long, default_value_t = 2.0, allow_hyphen_values = true)]
        xmax: f64,
        #[arg(long, default_value_t = 401)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = PlotFormat::Svg)]
        format: PlotFormat,
        /// Output file; stdout when omitted
        #[arg(long)]
        out: Option<String>,
    },
    /// Print the 6x6 chord-tangent addition table of the torsion points
    GroupTable {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Run the randomized identity suites and report per-check counts
    Verify {
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Seed; defaults to the CEVIA_SEED environment variable, then 1
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Construct { x, y, z } => cmd_construct(&x, &y, &z),
        Command::CurveInfo { a, tol } => cmd_curve_info(&a, tol),
        Command::JInvert { j0, prec } => cmd_j_invert(&j0, &prec),
        Command::Plot {
            a,
            xmin,
            xmax,
            samples,
            format,
            out,
        } => cmd_plot(&a, xmin, xmax, samples, format, out.as_deref()),
        Command::GroupTable { a } => cmd_group_table(&a),
        Command::Verify { samples, seed, tol } => cmd_verify(samples, seed, tol),
    }
}

fn parse_or_usage(s: &str, what: &str) -> Result<Rational, ExitCode> {
    parse_rational(s).map_err(|err| {
        eprintln!("cevia: cannot parse {what} {s:?}: {err}");
        ExitCode::from(EXIT_USAGE)
    })
}

fn emit_json<T: serde::Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string(value).expect("reports serialize infallibly")
    );
}

fn cmd_construct(x: &str, y: &str, z: &str) -> ExitCode {
    let coords = match (|| -> Result<[Rational; 3], ExitCode> {
        Ok([
            parse_or_usage(x, "coordinate")?,
            parse_or_usage(y, "coordinate")?,
            parse_or_usage(z, "coordinate")?,
        ])
    })() {
        Ok(c) => c,
        Err(code) => return code,
    };
    let p = match BaryPoint::new(coords) {
        Ok(p) => p,
        Err(err) => {
            eprintln!("cevia: not a projective point: {err}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let flags = DegeneracyFlags::classify(&p);
    match CevianContext::new(&p) {
        Ok(ctx) => {
            emit_json(&ConstructReport::from_context(&ctx));
            if flags.any() {
                ExitCode::from(EXIT_DEGENERATE)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(_) => {
            emit_json(&ConstructReport::degenerate(&p, &flags));
            ExitCode::from(EXIT_DEGENERATE)
        }
    }
}

fn cmd_curve_info(a: &str, tol: f64) -> ExitCode {
    if !(tol > 0.0) {
        eprintln!("cevia: --tol must be positive");
        return ExitCode::from(EXIT_USAGE);
    }
    let a = match parse_or_usage(a, "parameter") {
        Ok(a) => a,
        Err(code) => return code,
    };
    let curve = CurveFamilyMember::new(a);
    emit_json(&CurveInfoReport::build(&curve, tol));
    ExitCode::SUCCESS
}

fn cmd_j_invert(j0: &str, prec: &str) -> ExitCode {
    let j0 = match parse_or_usage(j0, "j-invariant") {
        Ok(v) => v,
        Err(code) => return code,
    };
    let prec = match parse_or_usage(prec, "precision") {
        Ok(v) => v,
        Err(code) => return code,
    };
    if prec <= rat_int(0) {
        eprintln!("cevia: --prec must be positive");
        return ExitCode::from(EXIT_USAGE);
    }
    match j_invert(&j0, &prec) {
        Ok(intervals) => {
            let reports: Vec<IntervalReport> =
                intervals.iter().map(IntervalReport::from_interval).collect();
            emit_json(&reports);
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("cevia: root isolation failed: {err}");
            ExitCode::from(EXIT_VERIFY_FAILED)
        }
    }
}

fn cmd_plot(
    a: &str,
    xmin: f64,
    xmax: f64,
    samples: usize,
    format: PlotFormat,
    out: Option<&str>,
) -> ExitCode {
    let a = match parse_or_usage(a, "parameter") {
        Ok(a) => a,
        Err(code) => return code,
    };
    if !(xmin < xmax) {
        eprintln!("cevia: --xmin must be strictly below --xmax");
        return ExitCode::from(EXIT_USAGE);
    }
    if samples < 2 {
        eprintln!("cevia: --samples must be at least 2");
        return ExitCode::from(EXIT_USAGE);
    }
    let a_f = to_f64(&a);
    if !a_f.is_finite() {
        eprintln!("cevia: parameter is out of plotting range");
        return ExitCode::from(EXIT_USAGE);
    }
    let data = plot::sample_curve(a_f, xmin, xmax, samples);
    let rendered = match format {
        PlotFormat::Svg => plot::to_svg(&data),
        PlotFormat::Csv => plot::to_csv(&data),
    };
    let summary = serde_json::json!({
        "samples": data.rows.len(),
        "poles": data.poles,
        "out": out,
    });
    match out {
        Some(path) => {
            if let Err(err) = std::fs::write(path, rendered) {
                eprintln!("cevia: cannot write {path:?}: {err}");
                return ExitCode::from(EXIT_IO);
            }
            println!("{summary}");
        }
        None => {
            let stdout = std::io::stdout();
            let mut handle = stdout.lock();
            if handle.write_all(rendered.as_bytes()).is_err() {
                return ExitCode::from(EXIT_IO);
            }
            eprintln!("{summary}");
        }
    }
    ExitCode::SUCCESS
}

fn cmd_group_table(a: &str) -> ExitCode {
    let a = match parse_or_usage(a, "parameter") {
        Ok(a) => a,
        Err(code) => return code,
    };
    let curve = CurveFamilyMember::new(a);
    if !curve.is_elliptic() {
        eprintln!(
            "cevia: E_{} is singular; the torsion group is undefined",
            cevia_core::rational::format_rational(curve.a())
        );
        return ExitCode::from(EXIT_DEGENERATE);
    }
    let labels = ["A", "B", "C", "Ainf", "Binf", "Cinf"];
    match curve.torsion_table() {
        Ok(table) => {
            println!(
                "torsion addition table of E_{} (base point Ainf)",
                cevia_core::rational::format_rational(curve.a())
            );
            print!("{:>6}", "+");
            for l in labels {
                print!("{l:>6}");
            }
            println!();
            for (i, row) in table.iter().enumerate() {
                print!("{:>6}", labels[i]);
                for &k in row {
                    print!("{:>6}", labels[k]);
                }
                println!();
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("cevia: group law failed: {err}");
            ExitCode::from(EXIT_VERIFY_FAILED)
        }
    }
}

fn cmd_verify(samples: usize, seed: Option<u64>, tol: f64) -> ExitCode {
    if samples < 1 {
        eprintln!("cevia: --samples must be at least 1");
        return ExitCode::from(EXIT_USAGE);
    }
    if !(tol > 0.0) {
        eprintln!("cevia: --tol must be positive");
        return ExitCode::from(EXIT_USAGE);
    }
    let seed = seed
        .or_else(|| {
            std::env::var("CEVIA_SEED")
                .ok()
                .and_then(|s| s.parse().ok())
        })
        .unwrap_or(1);
    let config = VerifyConfig {
        samples,
        seed,
        tolerance: tol,
    };
    let report = run_verify(&config);
    println!("seed: {} samples: {}", report.seed, report.samples);
    for check in &report.checks {
        let status = if check.failed == 0 { "ok" } else { "FAILED" };
        println!(
            "{:<40} {:>6} passed {:>4} failed  {}",
            check.name, check.passed, check.failed, status
        );
        if let Some(detail) = &check.first_failure {
            println!("    first failure: {detail}");
        }
    }
    if report.ok() {
        println!("verify: all identities hold");
        ExitCode::SUCCESS
    } else {
        println!("verify: FAILED");
        ExitCode::from(EXIT_VERIFY_FAILED)
    }
}
