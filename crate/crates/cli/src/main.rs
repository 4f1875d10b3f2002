//! `hopfkit` command-line front end.
//!
//! Exit codes: 0 success, 1 a check failed, 2 bad parameter, 3 I/O error,
//! 4 parse error, 5 field not split, 6 not a coalgebra map, 7 other
//! computation failure.

mod commands;
mod error;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use error::CliError;

#[derive(Parser, Debug)]
#[command(name = "hopfkit", version, about = "Exact computations with finite-dimensional Hopf algebras")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write the output to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Work over Q(ζ_m); m must be a multiple of the document's order.
    #[arg(long = "field-order", global = true, value_name = "M")]
    field_order: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a catalog entry and write it as an algebra document.
    Construct {
        name: String,
        #[arg(long = "N", value_name = "N")]
        n: Option<usize>,
        /// Root of unity: 1, -1, zN or zN^k.
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
        #[arg(long)]
        m: Option<u32>,
    },
    /// Check every Hopf algebra axiom of a document.
    Verify { path: PathBuf },
    /// Coradical filtration, isotypic table and invariants of a document.
    Analyze {
        path: PathBuf,
        #[arg(long)]
        filtration: bool,
        #[arg(long)]
        isotypic: bool,
        #[arg(long)]
        invariants: bool,
        /// Analyze the dual Hopf algebra instead.
        #[arg(long)]
        dual: bool,
    },
    /// Coradical census for dimension N.
    Census {
        #[arg(long)]
        dim: Option<u64>,
        /// A number of grouplikes or `all`.
        #[arg(long, default_value = "all")]
        grouplikes: String,
        /// Built-in scenario name or path to a scenario file.
        #[arg(long)]
        scenario: Option<String>,
        /// Extra hypotheses for every branch.
        #[arg(long, value_enum, value_delimiter = ',')]
        assume: Vec<Assumption>,
    },
    /// Normal form of an (anti-)automorphism of the matrix coalgebra M*(d).
    NormalForm {
        #[arg(long, value_name = "PATH")]
        matrix: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        kind: KindArg,
    },
    /// List the catalog, optionally verifying or exporting the entries.
    Catalog {
        #[arg(long)]
        verify: bool,
        /// Write one document per constructed entry into this directory.
        #[arg(long, value_name = "DIR")]
        export: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Assumption {
    /// H contains a Taft Hopf subalgebra.
    TaftSub,
    /// H has a Taft Hopf quotient.
    TaftQuotient,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Auto,
    Anti,
}

/// What a command produced: text, a JSON value, and whether its checks passed.
pub struct Output {
    pub command: &'static str,
    pub text: String,
    pub json: serde_json::Value,
    pub ok: bool,
    /// Written verbatim regardless of `--json` (documents).
    pub raw: bool,
}

fn configure_workers() -> Result<(), CliError> {
    let Ok(v) = std::env::var("HOPFKIT_WORKERS") else { return Ok(()) };
    let n: usize = v.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| CliError::bad(format!("HOPFKIT_WORKERS must be a positive integer, got `{v}`")))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| CliError::other(e.to_string()))
}

fn run(cli: Cli) -> Result<Output, CliError> {
    configure_workers()?;
    let m = cli.field_order;
    if m == Some(0) {
        return Err(CliError::bad("--field-order must be positive"));
    }
    match cli.command {
        Command::Construct { name, n, q, m: mm } => commands::construct(&name, n, q.as_deref(), mm, m),
        Command::Verify { path } => commands::verify(&path, m),
        Command::Analyze { path, filtration, isotypic, invariants, dual } => {
            commands::analyze(&path, commands::Sections { filtration, isotypic, invariants, dual }, m)
        }
        Command::Census { dim, grouplikes, scenario, assume } => commands::census(dim, &grouplikes, scenario.as_deref(), &assume),
        Command::NormalForm { matrix, kind } => commands::normal_form(&matrix, kind, m),
        Command::Catalog { verify, export } => commands::catalog(verify, export.as_deref()),
    }
}

fn render(out: &Output, json: bool) -> String {
    if out.raw || !json {
        return out.text.clone();
    }
    let env = serde_json::json!({
        "format_version": hopfkit::interchange::FORMAT_VERSION,
        "command": out.command,
        "ok": out.ok,
        "result": out.json,
    });
    let mut s = serde_json::to_string_pretty(&env).expect("json");
    s.push('\n');
    s
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    let dest = cli.out.clone();
    let result = run(cli).and_then(|out| {
        let text = render(&out, json);
        match &dest {
            Some(p) => std::fs::write(p, &text).map_err(|e| CliError::io(p.display(), e))?,
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout.write_all(text.as_bytes()).map_err(|e| CliError::io("stdout", e))?;
            }
        }
        Ok(out.ok)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(error::CHECK_FAILED),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
