//! The `multilift` command line.
//!
//! Exit statuses: 0 ok, 1 verification failure, 2 invalid parameters or
//! input, 3 cap exceeded. Errors go to stderr as one line starting with
//! `error:`.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::bounds::{bound_table, render_csv, render_markdown, DRule};
use crate::construct::{size_closed_form_kd, size_formula, CodeParams, MultiComponentCode};
use crate::error::Error;
use crate::export::{check_export, CodeExport};
use crate::linalg::DEFAULT_VERIFY_CAP;
use crate::mrd::{singleton_bound, MrdCode, MrdParams};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "multilift",
    version,
    about = "Multi-component lifted MRD subspace codes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a code, print its size and optionally export it as JSON
    Build {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
        /// Write the JSON export here
        #[arg(long)]
        out: Option<PathBuf>,
        /// Export only the header, without codewords
        #[arg(long, requires = "out")]
        header_only: bool,
        /// Maximum number of codewords to export
        #[arg(long, default_value_t = DEFAULT_VERIFY_CAP)]
        cap: u64,
    },
    /// Print the exact code size
    Size {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
    },
    /// Re-check an exported code against its header
    Verify {
        #[arg(long = "in", value_name = "PATH")]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_VERIFY_CAP)]
        cap: u64,
    },
    /// Inspect an MRD code in GF(q)^{rows x cols}
    Mrd {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long)]
        d: usize,
        /// Enumerate the code and measure its minimum rank distance
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = DEFAULT_VERIFY_CAP)]
        cap: u64,
    },
    /// Tabulate lower bounds over a parameter grid
    Table {
        /// Comma-separated field sizes
        #[arg(long, value_delimiter = ',', required = true)]
        q: Vec<u64>,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        k_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Distances per k: every 1..=k, or only d = k
        #[arg(long, value_enum, default_value_t = DChoice::All)]
        d_rule: DChoice,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Md,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DChoice {
    All,
    K,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } => EXIT_CAP,
            _ => EXIT_INVALID,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_INVALID,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("invalid arguments");
            let first = first.strip_prefix("error: ").unwrap_or(first);
            let _ = writeln!(err, "error: {first}");
            return EXIT_INVALID;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(cmd: Command, out: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Build {
            q,
            n,
            k,
            d,
            out: path,
            header_only,
            cap,
        } => cmd_build(CodeParams::new(q, n, k, d)?, path, header_only, cap, out),
        Command::Size { q, n, k, d } => cmd_size(CodeParams::new(q, n, k, d)?, out),
        Command::Verify { input, cap } => cmd_verify(input, cap, out),
        Command::Mrd {
            q,
            rows,
            cols,
            d,
            verify,
            cap,
        } => cmd_mrd(MrdParams::new(q, rows, cols, d), verify, cap, out),
        Command::Table {
            q,
            n_max,
            k_max,
            format,
            d_rule,
        } => cmd_table(&q, n_max, k_max, format, d_rule, out),
    }
}

fn cmd_build(
    params: CodeParams,
    path: Option<PathBuf>,
    header_only: bool,
    cap: u64,
    out: &mut dyn Write,
) -> Outcome {
    let code = MultiComponentCode::build(params)?;
    if let Some(path) = path {
        let export = CodeExport::from_code(&code, (!header_only).then_some(cap))?;
        std::fs::write(&path, export.to_json()).map_err(|e| {
            Failure::from(std::io::Error::new(
                e.kind(),
                format!("{}: {e}", path.display()),
            ))
        })?;
    }
    writeln!(out, "N={}", code.size())?;
    Ok(EXIT_OK)
}

fn cmd_size(params: CodeParams, out: &mut dyn Write) -> Outcome {
    let n = size_formula(&params)?;
    if params.k != params.d {
        writeln!(out, "N={n}")?;
        return Ok(EXIT_OK);
    }
    let closed = size_closed_form_kd(params.q, params.n, params.k)?;
    writeln!(out, "N={n} closed_form={closed}")?;
    if closed != n {
        return Err(Failure {
            code: EXIT_VERIFY_FAILED,
            message: "closed form disagrees with the general formula".into(),
        });
    }
    Ok(EXIT_OK)
}

fn status(ok: bool) -> &'static str {
    if ok {
        "OK"
    } else {
        "FAIL"
    }
}

fn cmd_verify(path: PathBuf, cap: u64, out: &mut dyn Write) -> Outcome {
    let text = std::fs::read_to_string(&path).map_err(|e| {
        Failure::from(std::io::Error::new(
            e.kind(),
            format!("{}: {e}", path.display()),
        ))
    })?;
    let export = CodeExport::from_json(&text)?;
    let check = check_export(&export, cap)?;
    writeln!(
        out,
        "cardinality={} min_distance={} components={}",
        status(check.cardinality_ok),
        status(check.min_distance_ok),
        status(check.components_ok)
    )?;
    Ok(if check.passed() {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    })
}

fn cmd_mrd(params: MrdParams, verify: bool, cap: u64, out: &mut dyn Write) -> Outcome {
    let code = MrdCode::build(params)?;
    let bound = singleton_bound(params.q, params.rows, params.cols, params.d);
    if !verify {
        writeln!(out, "bound={bound}")?;
        return Ok(EXIT_OK);
    }
    if code.is_trivial() {
        writeln!(out, "bound={bound} min_rank_distance=n/a (trivial)")?;
        return Ok(EXIT_OK);
    }
    let dist = code.min_rank_distance_pairwise(cap)?;
    writeln!(out, "bound={bound} min_rank_distance={dist}")?;
    Ok(if dist == params.d && code.size() == bound {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    })
}

fn cmd_table(
    qs: &[u64],
    n_max: usize,
    k_max: usize,
    format: Format,
    d_rule: DChoice,
    out: &mut dyn Write,
) -> Outcome {
    if let Some(&bad) = qs
        .iter()
        .find(|&&q| crate::galois::prime_power(q).is_none())
    {
        return Err(Error::NotPrimePower(bad).into());
    }
    let rule = match d_rule {
        DChoice::All => DRule::All,
        DChoice::K => DRule::EqualK,
    };
    // an empty range when n_max < 2
    let rows = bound_table(qs, 2..=n_max, 1..=k_max, rule);
    let text = match format {
        Format::Csv => render_csv(&rows),
        Format::Md => render_markdown(&rows),
    };
    out.write_all(text.as_bytes())?;
    Ok(EXIT_OK)
}
