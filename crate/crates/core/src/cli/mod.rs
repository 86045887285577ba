//! The `xmoon` command line.
//!
//! Every exponent a user types or reads is a power of `q` (so coefficients
//! sit at even exponents); `--order 20` means "up to q^20".

mod render;

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::extremal::{build_family_with, ExtremalError};
use crate::forms::{self, FormCatalog};
use crate::identity::{self, DslError};
use crate::moonshine::{MonsterDims, MoonshineError};
use crate::series::json::series_to_json;
use crate::series::{IntSeries, QInt};

use render::{decompositions, family, reports, roots, series};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "xmoon",
    version,
    about = "Exact q-expansions, extremal c = 24k partition functions and moonshine checks"
)]
pub struct Cli {
    /// Truncation order as a power of q (coefficients up to q^ORDER).
    #[arg(long, global = true, default_value_t = 20, value_parser = clap::value_parser!(i64).range(1..))]
    pub order: i64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Exit with status 1 when any checked identity fails.
    #[arg(long, global = true)]
    pub strict: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the q-expansion of a named form.
    Expand {
        /// delta, e4, j, J, j-classical or niemeier:<lattice>
        #[arg(long)]
        form: String,
    },
    /// Build the extremal family G_k(x).
    Extremal(ExtremalArgs),
    /// Decompose integers or series coefficients into Monster dimensions.
    Decompose(DecomposeArgs),
    /// Check coefficient identities.
    Verify(VerifyArgs),
    /// List the Niemeier lattices or print one theta series.
    Niemeier {
        #[arg(long, conflicts_with = "name")]
        list: bool,
        /// Lattice label, e.g. "Leech" or "A7^2D5^2".
        #[arg(long)]
        name: Option<String>,
    },
}

#[derive(Debug, Args)]
pub struct ExtremalArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=6))]
    pub k: u32,
    /// Substitute this integer for x.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "solve_g0")]
    pub x: Option<QInt>,
    /// Print all integer x with g0(x) = TARGET.
    #[arg(long = "solve-g0", allow_hyphen_values = true)]
    pub solve_g0: Option<QInt>,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    #[arg(long, allow_hyphen_values = true, conflicts_with = "form", required_unless_present = "form")]
    pub value: Option<QInt>,
    /// Series to decompose (same names as `expand`).
    #[arg(long)]
    pub form: Option<String>,
    /// First exponent (power of q); odd exponents are skipped.
    #[arg(long, default_value_t = 2, allow_hyphen_values = true)]
    pub from: i64,
    /// Last exponent (power of q); defaults to --order.
    #[arg(long, allow_hyphen_values = true)]
    pub to: Option<i64>,
    /// Dimension table, one integer per line (defaults to the bundled table).
    #[arg(long)]
    pub dims: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Identity file, one identity per line.
    #[arg(long, conflicts_with = "builtin", required_unless_present = "builtin")]
    pub file: Option<PathBuf>,
    /// Use the built-in periodicity table.
    #[arg(long)]
    pub builtin: bool,
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(i64).range(0..))]
    pub imax: i64,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("unknown form {0:?} (expected delta, e4, j, J, j-classical or niemeier:<lattice>)")]
    UnknownForm(String),
    #[error("unknown Niemeier lattice {0:?}")]
    UnknownLattice(String),
    #[error(transparent)]
    Extremal(#[from] ExtremalError),
    #[error(transparent)]
    Moonshine(#[from] MoonshineError),
    #[error(transparent)]
    Identity(#[from] DslError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::UnknownForm(_) | CliError::UnknownLattice(_) => 2,
            CliError::Extremal(_) => 3,
            CliError::Moonshine(_) => 4,
            CliError::Identity(_) => 5,
            CliError::Io { .. } => 6,
        }
    }
}

/// Rendered output plus whether a verification found a failing row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub verification_failed: bool,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { output, verification_failed: false }
    }

    /// Process exit status under the given strictness.
    pub fn exit_code(&self, strict: bool) -> i32 {
        if strict && self.verification_failed {
            1
        } else {
            0
        }
    }
}

/// Internal (q̄) order for a q-exponent bound.
fn internal(order: i64) -> i64 {
    order.div_euclid(2)
}

/// Resolve a form name (`delta`, `e4`, `j`/`J`, `j-classical`,
/// `niemeier:<lattice>`) to its expansion up to internal `order`.
pub fn named_form(catalog: &FormCatalog, name: &str, order: i64) -> Result<IntSeries, CliError> {
    Ok(match name {
        "delta" => forms::delta(order),
        "e4" => forms::eisenstein4(order),
        "j" | "J" => catalog.j_paper(order),
        "j-classical" => forms::j_classical(order),
        other => {
            let lattice = other.strip_prefix("niemeier:").ok_or_else(|| CliError::UnknownForm(other.to_string()))?;
            let rec = forms::lookup(lattice).ok_or_else(|| CliError::UnknownLattice(lattice.to_string()))?;
            forms::niemeier_theta(rec, order)
        }
    })
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.clone(), source })
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let catalog = FormCatalog::new();
    let order = internal(cli.order);
    match &cli.command {
        Command::Expand { form } => {
            let s = named_form(&catalog, form, order)?;
            Ok(Outcome::ok(series(&s, cli.format)))
        }
        Command::Extremal(args) => {
            let fam = build_family_with(&catalog, args.k, order)?;
            let out = if let Some(x) = &args.x {
                series(&fam.specialize(x), cli.format)
            } else if let Some(target) = &args.solve_g0 {
                roots(args.k, target, &fam.solve_g0(target), cli.format)
            } else {
                family(&fam, cli.format)
            };
            Ok(Outcome::ok(out))
        }
        Command::Decompose(args) => {
            let dims = match &args.dims {
                Some(p) => MonsterDims::parse(&read(p)?)?,
                None => MonsterDims::standard(),
            };
            let items = if let Some(v) = &args.value {
                vec![(None, dims.greedy_decompose(v)?)]
            } else {
                let name = args.form.as_deref().expect("clap requires --value or --form");
                let to = args.to.unwrap_or(cli.order);
                let lo = (args.from + 1).div_euclid(2);
                let hi = internal(to);
                let s = named_form(&catalog, name, order.max(hi))?;
                dims.decompose_series(&s, lo, hi)?.into_iter().map(|(n, d)| (Some(2 * n), d)).collect()
            };
            Ok(Outcome::ok(decompositions(&items, cli.format)))
        }
        Command::Verify(args) => {
            let identities = match &args.file {
                Some(p) => identity::parse_file(&read(p)?)?,
                None => identity::builtin_table1(),
            };
            let reps = identity::run_identities(&catalog, &identities, 0, args.imax)?;
            let failed = reps.iter().any(|r| !r.all_pass);
            Ok(Outcome { output: reports(&reps, cli.format), verification_failed: failed })
        }
        Command::Niemeier { name: Some(name), .. } => {
            let rec = forms::lookup(name).ok_or_else(|| CliError::UnknownLattice(name.clone()))?;
            Ok(Outcome::ok(series(&forms::niemeier_theta(rec, order), cli.format)))
        }
        Command::Niemeier { name: None, .. } => Ok(Outcome::ok(render::catalog(cli.format))),
    }
}

/// Parse arguments, run, and write output. Returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            let written = match &cli.out {
                Some(path) => {
                    fs::write(path, &outcome.output).map_err(|source| CliError::Io { path: path.clone(), source })
                }
                None => {
                    print!("{}", outcome.output);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return e.exit_code();
            }
            outcome.exit_code(cli.strict)
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

/// JSON for a series, exposed for other front ends.
pub fn series_json(s: &IntSeries) -> Value {
    series_to_json(s)
}

/// JSON object describing an extremal family.
pub fn family_json(f: &crate::extremal::ExtremalFamily) -> Value {
    render::family_value(f)
}

/// JSON object describing one decomposition.
pub fn decomposition_json(exponent: Option<i64>, d: &crate::moonshine::Decomposition) -> Value {
    json!({
        "exponent": exponent,
        "coefficient": d.target.to_string(),
        "terms": d.terms.iter().map(|(dim, m)| json!([dim.to_string(), m.to_string()])).collect::<Vec<_>>(),
    })
}
