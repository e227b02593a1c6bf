use clap::{Args, Parser, Subcommand, ValueEnum};
use locoh::hilbert::{check_box_with, coarse_series, fine_series_monomial, SeriesMode};
use locoh::io::{ProblemInput, SeriesOutput, SCHEMA};
use locoh::tame::tameness_report;
use locoh::Error;
use std::io::Read;
use std::process::ExitCode;

const EXIT_INPUT: u8 = 2;
const EXIT_MISMATCH: u8 = 3;
const EXIT_NON_AUTHORITATIVE: u8 = 4;

#[derive(Parser)]
#[command(name = "locoh", version, about = "Exact local cohomology of monomial quotient rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArg {
    /// Problem description JSON; standard input when omitted
    #[arg(long, global = false)]
    input: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    PerPattern,
    Printed,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert series of H^i_P(R)
    Series {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        i: i64,
        /// Regrade to the coarse (s, t) bigrading
        #[arg(long)]
        coarse: bool,
        #[arg(long, value_enum, default_value = "per-pattern")]
        mode: ModeArg,
        /// Treat the non-authoritative printed mode as an error
        #[arg(long)]
        strict: bool,
    },
    /// Dimension of one fine component
    Component {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        i: i64,
        /// Comma-separated x-degrees, e.g. "2,0"; empty for m = 0
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        a: String,
        /// Comma-separated y-degrees, e.g. "-1,3"; empty for n = 0
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        b: String,
    },
    /// Coarse dimension table over a (k, j) window
    Table {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        i: i64,
        /// k window as "lo:hi"
        #[arg(long, value_name = "LO:HI", allow_hyphen_values = true)]
        k_range: String,
        /// j window as "lo:hi"
        #[arg(long, value_name = "LO:HI", allow_hyphen_values = true)]
        j_range: String,
        /// JSON instead of TSV
        #[arg(long)]
        json: bool,
    },
    /// Tameness report(s)
    Tame {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, conflicts_with = "all")]
        i: Option<i64>,
        /// Report every i in [0, n]
        #[arg(long)]
        all: bool,
    },
    /// Verify formulas against the Cech strand oracle over a bidegree box
    Check {
        #[command(flatten)]
        input: InputArg,
        /// Box as "A_PAD:B_MIN": a in [0, sigma+A_PAD]^m, b in [B_MIN, rho]^n
        #[arg(long, value_name = "A_PAD:B_MIN", default_value = "2:-4", allow_hyphen_values = true)]
        r#box: String,
        /// Check every i (the default; accepted for compatibility)
        #[arg(long)]
        i_all: bool,
        /// Fault-injection offset for harness self-tests
        #[arg(long, hide = true, default_value_t = 0, allow_hyphen_values = true)]
        perturb: i64,
    },
    /// Tool and schema information
    Info,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn read_problem(arg: &InputArg) -> Result<ProblemInput, Error> {
    let text = match &arg.input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("{path}: {e}")))?,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::InvalidInput(e.to_string()))?;
            buf
        }
    };
    ProblemInput::from_json(&text)
}

fn parse_vec(text: &str, expected: usize, what: &str) -> Result<Vec<i64>, Error> {
    let vals: Vec<i64> = if text.trim().is_empty() {
        Vec::new()
    } else {
        text.split(',')
            .map(|v| v.trim().parse::<i64>())
            .collect::<Result<_, _>>()
            .map_err(|e| Error::InvalidInput(format!("bad {what} entry: {e}")))?
    };
    if vals.len() != expected {
        return Err(Error::DegreeLength { expected, got: vals.len() });
    }
    Ok(vals)
}

fn parse_range(text: &str, what: &str) -> Result<(i64, i64), Error> {
    let (lo, hi) = text
        .split_once(':')
        .ok_or_else(|| Error::InvalidInput(format!("bad {what}: expected LO:HI")))?;
    let lo = lo
        .trim()
        .parse()
        .map_err(|e| Error::InvalidInput(format!("bad {what}: {e}")))?;
    let hi = hi
        .trim()
        .parse()
        .map_err(|e| Error::InvalidInput(format!("bad {what}: {e}")))?;
    if lo > hi {
        return Err(Error::InvalidInput(format!("bad {what}: {lo} > {hi}")));
    }
    Ok((lo, hi))
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Series { input, i, coarse, mode, strict } => {
            let problem = read_problem(&input)?;
            let ideal = problem.to_ideal()?;
            let field = problem.resolve_field()?;
            let mode = match mode {
                ModeArg::PerPattern => SeriesMode::PerPattern,
                ModeArg::Printed => SeriesMode::Printed,
            };
            if mode == SeriesMode::Printed {
                eprintln!(
                    "warning: printed mode reproduces the closed product form \
                     verbatim and is not authoritative"
                );
                if strict {
                    return Ok(ExitCode::from(EXIT_NON_AUTHORITATIVE));
                }
            }
            let mut series = fine_series_monomial(&ideal, i, field, mode)?;
            if coarse {
                series = coarse_series(&series)?;
            }
            let out = SeriesOutput::from_series(&series);
            println!("{}", serde_json::to_string(&out).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Command::Component { input, i, a, b } => {
            let problem = read_problem(&input)?;
            let ideal = problem.to_ideal()?;
            let field = problem.resolve_field()?;
            let p = ideal.partition();
            let a = parse_vec(&a, p.m(), "--a")?;
            let b = parse_vec(&b, p.n(), "--b")?;
            let series = fine_series_monomial(&ideal, i, field, SeriesMode::PerPattern)?;
            let d: Vec<i64> = a.iter().chain(b.iter()).copied().collect();
            println!("{}", series.coefficient_at(&d));
            Ok(ExitCode::SUCCESS)
        }
        Command::Table { input, i, k_range, j_range, json } => {
            let problem = read_problem(&input)?;
            let ideal = problem.to_ideal()?;
            let field = problem.resolve_field()?;
            let (k_lo, k_hi) = parse_range(&k_range, "--k-range")?;
            let (j_lo, j_hi) = parse_range(&j_range, "--j-range")?;
            let coarse =
                coarse_series(&fine_series_monomial(&ideal, i, field, SeriesMode::PerPattern)?)?;
            let rows: Vec<Vec<i64>> = (k_lo..=k_hi)
                .map(|k| (j_lo..=j_hi).map(|j| coarse.coefficient_at(&[k, j])).collect())
                .collect();
            if json {
                let out = serde_json::json!({
                    "schema": SCHEMA,
                    "i": i,
                    "k_range": [k_lo, k_hi],
                    "j_range": [j_lo, j_hi],
                    "rows": rows,
                });
                println!("{out}");
            } else {
                let header: Vec<String> = std::iter::once("k\\j".to_string())
                    .chain((j_lo..=j_hi).map(|j| j.to_string()))
                    .collect();
                println!("{}", header.join("\t"));
                for (k, row) in (k_lo..=k_hi).zip(&rows) {
                    let line: Vec<String> = std::iter::once(k.to_string())
                        .chain(row.iter().map(|v| v.to_string()))
                        .collect();
                    println!("{}", line.join("\t"));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Tame { input, i, all } => {
            let problem = read_problem(&input)?;
            let ideal = problem.to_ideal()?;
            let field = problem.resolve_field()?;
            let indices: Vec<i64> = match (i, all) {
                (Some(i), _) => vec![i],
                (None, _) => (0..=(ideal.partition().n() as i64)).collect(),
            };
            let reports = indices
                .iter()
                .map(|&i| tameness_report(&ideal, i, field))
                .collect::<Result<Vec<_>, _>>()?;
            let out = serde_json::json!({ "schema": SCHEMA, "reports": reports });
            println!("{out}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { input, r#box, i_all: _, perturb } => {
            let problem = read_problem(&input)?;
            let ideal = problem.to_ideal()?;
            let field = problem.resolve_field()?;
            let (a_pad, b_min) = parse_range_allow_reversed(&r#box)?;
            match check_box_with(&ideal, field, a_pad, b_min, perturb)? {
                None => {
                    println!("ok: series matches the oracle over the box");
                    Ok(ExitCode::SUCCESS)
                }
                Some(mismatch) => {
                    println!(
                        "mismatch at i={} a={:?} b={:?}: series {} vs oracle {}",
                        mismatch.i, mismatch.d.a, mismatch.d.b, mismatch.series, mismatch.oracle
                    );
                    Ok(ExitCode::from(EXIT_MISMATCH))
                }
            }
        }
        Command::Info => {
            let out = serde_json::json!({
                "schema": SCHEMA,
                "name": env!("CARGO_PKG_NAME"),
                "version": env!("CARGO_PKG_VERSION"),
                "max_vertices": locoh::simplicial::MAX_VERTICES,
                "field_env": "LOCOH_FIELD (\"Q\" or \"Fp:<p>\")",
                "exit_codes": {"ok": 0, "input_error": 2, "mismatch": 3, "non_authoritative": 4},
            });
            println!("{out}");
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// `--box A_PAD:B_MIN` where B_MIN is usually negative, so the pair is not an
/// ordered range.
fn parse_range_allow_reversed(text: &str) -> Result<(i64, i64), Error> {
    let (a, b) = text
        .split_once(':')
        .ok_or_else(|| Error::InvalidInput("bad --box: expected A_PAD:B_MIN".into()))?;
    let a = a
        .trim()
        .parse()
        .map_err(|e| Error::InvalidInput(format!("bad --box: {e}")))?;
    let b = b
        .trim()
        .parse()
        .map_err(|e| Error::InvalidInput(format!("bad --box: {e}")))?;
    Ok((a, b))
}
