//! `pathforge` — a workbench for Dyck and bilateral lattice paths.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error,
//! 3 enumeration limit or arithmetic overflow, 4 I/O error.

mod render;

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use pathforge::{
    closed_form_polynomial, enumerate_paths_with_limit, from_checkmarks, to_checkmarks,
    verify_with_limit, weight_polynomial_with_limit, CheckmarkPair, Lattice, Path, PathMapping,
    Scheme, DEFAULT_MAX_N,
};
use render::RenderSpec;

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_LIMIT: u8 = 3;
const EXIT_IO: u8 = 4;

/// Environment variable overriding the default enumeration limit.
const MAX_N_VAR: &str = "PATHFORGE_MAX_N";

#[derive(Parser)]
#[command(
    name = "pathforge",
    version,
    about = "Workbench for Dyck and bilateral lattice paths: enumeration, bi-banded and \
             peak-counting weights, the bijection between them, and exact weight polynomials"
)]
struct Cli {
    /// Output format for data commands
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Half-length n of the paths (for `verify`: the sweep runs n = 1..=N)
    #[arg(long, global = true)]
    n: Option<usize>,

    /// Path class (enumerate/poly default: dyck; verify default: both)
    #[arg(long, global = true, value_enum)]
    lattice: Option<LatticeArg>,

    /// Weighting scheme (poly default: bibanded; verify default: both)
    #[arg(long, global = true, value_enum)]
    scheme: Option<SchemeArg>,

    /// Write output to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every path of half-length n in lexicographic order (U < D)
    Enumerate,
    /// Map a word through the bijection or its inverse
    Map {
        /// Path word over {U, D} (or {1, 0})
        word: String,
        #[arg(long, value_enum, default_value_t = Direction::Forward)]
        direction: Direction,
    },
    /// Show the checkmark pair of a word, or rebuild the word of a pair
    Checkmarks {
        /// Path word over {U, D} (or {1, 0})
        #[arg(required_unless_present = "from_pair")]
        word: Option<String>,
        /// Rebuild a path from a pair in the form "NW=.^^;SW=^."
        #[arg(long, conflicts_with = "word")]
        from_pair: Option<String>,
    },
    /// Compute a weight polynomial
    Poly {
        /// Where the coefficients come from
        #[arg(long, value_enum, default_value_t = Source::Enumerate)]
        source: Source,
    },
    /// Check enumerated polynomials against the closed forms for n = 1..=N
    Verify,
    /// Render a path as ASCII art or SVG
    Render {
        /// Path word over {U, D} (or {1, 0})
        word: String,
        /// Emit SVG instead of ASCII
        #[arg(long)]
        svg: bool,
        /// Shade the odd bands
        #[arg(long)]
        bands: bool,
        /// Mark the peaks (boundary peaks included)
        #[arg(long)]
        peaks: bool,
        /// Draw the bounding box with checkmark labels
        #[arg(long)]
        checkmarks: bool,
        /// SVG pixels per lattice unit (minimum 4)
        #[arg(long, default_value_t = 24)]
        cell_size: u32,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LatticeArg {
    Dyck,
    Bilateral,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SchemeArg {
    Bibanded,
    Peaks,
}

impl From<SchemeArg> for Scheme {
    fn from(s: SchemeArg) -> Scheme {
        match s {
            SchemeArg::Bibanded => Scheme::BiBanded,
            SchemeArg::Peaks => Scheme::PeakCounting,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    Forward,
    Inverse,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Source {
    Enumerate,
    ClosedForm,
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> CliError {
        CliError { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<pathforge::Error> for CliError {
    fn from(e: pathforge::Error) -> CliError {
        let code = match e {
            pathforge::Error::LimitExceeded { .. } | pathforge::Error::Overflow { .. } => {
                EXIT_LIMIT
            }
            _ => EXIT_USAGE,
        };
        CliError { code, message: e.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, CliError> {
    match &cli.command {
        Command::Enumerate => cmd_enumerate(cli),
        Command::Map { word, direction } => cmd_map(cli, word, *direction),
        Command::Checkmarks { word, from_pair } => {
            cmd_checkmarks(cli, word.as_deref(), from_pair.as_deref())
        }
        Command::Poly { source } => cmd_poly(cli, *source),
        Command::Verify => cmd_verify(cli),
        Command::Render { word, svg, bands, peaks, checkmarks, cell_size } => {
            let spec = RenderSpec {
                svg: *svg,
                show_bands: *bands,
                show_peaks: *peaks,
                show_checkmarks: *checkmarks,
                cell_size: *cell_size,
            };
            cmd_render(cli, word, &spec)
        }
    }
}

/// The enumeration limit, overridable through PATHFORGE_MAX_N.
fn max_n() -> Result<usize, CliError> {
    match std::env::var(MAX_N_VAR) {
        Ok(value) => value.parse::<usize>().map_err(|_| {
            CliError::usage(format!("{MAX_N_VAR} must be a non-negative integer, got {value:?}"))
        }),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_MAX_N),
        Err(e) => Err(CliError::usage(format!("cannot read {MAX_N_VAR}: {e}"))),
    }
}

fn require_n(cli: &Cli) -> Result<usize, CliError> {
    let n = cli.n.ok_or_else(|| CliError::usage("--n is required for this command"))?;
    if n == 0 {
        return Err(CliError::usage("n must be at least 1"));
    }
    Ok(n)
}

/// Resolve --lattice for commands that work on a single lattice.
fn single_lattice(cli: &Cli) -> Result<Lattice, CliError> {
    match cli.lattice.unwrap_or(LatticeArg::Dyck) {
        LatticeArg::Dyck => Ok(Lattice::Dyck),
        LatticeArg::Bilateral => Ok(Lattice::Bilateral),
        LatticeArg::Both => {
            Err(CliError::usage("--lattice both is only valid for `verify`"))
        }
    }
}

fn emit(cli: &Cli, content: &str) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => std::fs::write(path, content).map_err(|e| CliError {
            code: EXIT_IO,
            message: format!("cannot write {}: {e}", path.display()),
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(content.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError { code: EXIT_IO, message: format!("cannot write stdout: {e}") })
        }
    }
}

fn to_json(value: &impl serde::Serialize) -> String {
    serde_json::to_string(value).expect("output types serialize infallibly")
}

fn cmd_enumerate(cli: &Cli) -> Result<ExitCode, CliError> {
    let n = require_n(cli)?;
    let lattice = single_lattice(cli)?;
    let words: Vec<String> = enumerate_paths_with_limit(n, lattice, max_n()?)?
        .map(|p| p.to_string())
        .collect();
    let output = match cli.format {
        Format::Text => {
            let mut s = words.join("\n");
            s.push('\n');
            s
        }
        Format::Json => {
            let value = serde_json::json!({
                "n": n,
                "lattice": lattice,
                "count": words.len(),
                "paths": words,
            });
            format!("{value}\n")
        }
    };
    emit(cli, &output)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_map(cli: &Cli, word: &str, direction: Direction) -> Result<ExitCode, CliError> {
    let path = Path::parse(word)?;
    let record = match direction {
        Direction::Forward => PathMapping::forward(&path),
        Direction::Inverse => PathMapping::inverse(&path),
    };
    let output = match cli.format {
        Format::Text => format!(
            "input: {}\nimage: {}\nbibanded: {}\npeaks: {}\ndyck_in: {}\ndyck_out: {}\n",
            record.input(),
            record.image(),
            record.bibanded(),
            record.peaks(),
            record.dyck_in(),
            record.dyck_out()
        ),
        Format::Json => format!("{}\n", to_json(&record)),
    };
    emit(cli, &output)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_checkmarks(
    cli: &Cli,
    word: Option<&str>,
    from_pair: Option<&str>,
) -> Result<ExitCode, CliError> {
    let output = match (word, from_pair) {
        (Some(word), None) => {
            let pair = to_checkmarks(&Path::parse(word)?);
            match cli.format {
                Format::Text => format!("{pair}\n"),
                Format::Json => format!("{}\n", to_json(&pair)),
            }
        }
        (None, Some(text)) => {
            let path = from_checkmarks(&CheckmarkPair::parse(text)?);
            match cli.format {
                Format::Text => format!("{path}\n"),
                Format::Json => format!("{}\n", to_json(&path)),
            }
        }
        _ => unreachable!("clap enforces exactly one input"),
    };
    emit(cli, &output)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_poly(cli: &Cli, source: Source) -> Result<ExitCode, CliError> {
    let n = require_n(cli)?;
    let lattice = single_lattice(cli)?;
    let scheme: Scheme = cli.scheme.unwrap_or(SchemeArg::Bibanded).into();
    let poly = match source {
        Source::Enumerate => weight_polynomial_with_limit(n, lattice, scheme, max_n()?)?,
        Source::ClosedForm => closed_form_polynomial(n, lattice, scheme)?,
    };
    let output = match cli.format {
        Format::Text => format!("{poly}\n"),
        Format::Json => format!("{}\n", to_json(&poly)),
    };
    emit(cli, &output)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(cli: &Cli) -> Result<ExitCode, CliError> {
    let n_max = require_n(cli)?;
    let limit = max_n()?;
    if n_max > limit {
        return Err(pathforge::Error::LimitExceeded { n: n_max, max_n: limit }.into());
    }
    let lattices: &[Lattice] = match cli.lattice.unwrap_or(LatticeArg::Both) {
        LatticeArg::Dyck => &[Lattice::Dyck],
        LatticeArg::Bilateral => &[Lattice::Bilateral],
        LatticeArg::Both => &[Lattice::Dyck, Lattice::Bilateral],
    };
    let schemes: Vec<Scheme> = match cli.scheme {
        Some(s) => vec![s.into()],
        None => vec![Scheme::BiBanded, Scheme::PeakCounting],
    };

    let mut lines = String::new();
    let (mut total, mut matched, mut errors) = (0usize, 0usize, 0usize);
    for &lattice in lattices {
        for &scheme in &schemes {
            let reports = verify_with_limit(1..=n_max, lattice, scheme, limit);
            for (n, item) in (1..=n_max).zip(reports) {
                total += 1;
                match item {
                    Ok(report) => {
                        if report.matches {
                            matched += 1;
                        }
                        match cli.format {
                            Format::Text => lines.push_str(&format!(
                                "n={} lattice={} scheme={} paths={} match={} elapsed_us={}\n",
                                report.n,
                                report.lattice,
                                report.scheme,
                                report.path_count,
                                if report.matches { "yes" } else { "no" },
                                report.elapsed.as_micros()
                            )),
                            Format::Json => lines.push_str(&format!("{}\n", to_json(&report))),
                        }
                    }
                    Err(e) => {
                        errors += 1;
                        match cli.format {
                            Format::Text => lines.push_str(&format!(
                                "n={n} lattice={lattice} scheme={scheme} error: {e}\n"
                            )),
                            Format::Json => {
                                let value = serde_json::json!({
                                    "n": n,
                                    "lattice": lattice,
                                    "scheme": scheme,
                                    "error": e.to_string(),
                                });
                                lines.push_str(&format!("{value}\n"));
                            }
                        }
                    }
                }
            }
        }
    }

    let summary = format!("verify: {matched}/{total} reports match");
    match cli.format {
        Format::Text => lines.push_str(&format!("{summary}\n")),
        // keep stdout pure JSON lines
        Format::Json => eprintln!("{summary}"),
    }
    emit(cli, &lines)?;

    let mismatches = total - errors - matched;
    if mismatches > 0 {
        Ok(ExitCode::from(EXIT_MISMATCH))
    } else if errors > 0 {
        Ok(ExitCode::from(EXIT_LIMIT))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}

fn cmd_render(cli: &Cli, word: &str, spec: &RenderSpec) -> Result<ExitCode, CliError> {
    if spec.svg && spec.cell_size < 4 {
        return Err(CliError::usage("--cell-size must be at least 4 for SVG output"));
    }
    let path = Path::parse(word)?;
    emit(cli, &render::render(&path, spec))?;
    Ok(ExitCode::SUCCESS)
}
