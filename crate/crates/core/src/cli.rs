//! Command-line front end. Exit codes: 0 success, 1 verification-suite
//! failure, 2 usage or parse error, 3 internal invariant violation,
//! 4 capability or resource error.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bounds::certify_with;
use crate::bumpiness::{hard_permutation, is_bc_bumpy, BumpinessParams};
use crate::error::Error;
use crate::oracle::{self, BuildOptions, ComplexityTable};
use crate::perm::{parse_permutation, Permutation};
use crate::stats::{bound_gap_report, bumpy_fraction_estimate, gap_rows_csv};
use crate::synthesis::{synthesize, upper_formula};
use crate::verify::{run_suite, Suite};
use crate::word::evaluate_word;

pub const EXIT_OK: i32 = 0;
pub const EXIT_SUITE_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;
pub const EXIT_CAPABILITY: i32 = 4;

/// Environment variable naming the oracle table cache directory.
pub const CACHE_ENV: &str = "PERMWORD_CACHE";

#[derive(Parser, Debug)]
#[command(
    name = "permword",
    version,
    about = "Generator words and complexity bounds for permutations over {σ, τ, τ⁻¹}"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct PermInput {
    /// Permutation in one-line form, e.g. "1 3 5 2 4"
    pub perm: Option<String>,
    /// Use the explicit hard permutation on n points
    #[arg(long, value_name = "N")]
    pub hard: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Synthesize a generator word for a permutation
    Synth {
        #[command(flatten)]
        input: PermInput,
        /// Expected number of points; checked against the permutation
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print a bounds certificate as JSON
    Bound {
        #[command(flatten)]
        input: PermInput,
        /// Include the exact complexity from the BFS oracle
        #[arg(long)]
        exact: bool,
        #[arg(long, default_value_t = oracle::DEFAULT_LIMIT)]
        limit: usize,
    },
    /// Exact complexity tables
    Oracle {
        #[arg(long)]
        n: usize,
        /// Largest n the oracle will build
        #[arg(long, default_value_t = oracle::DEFAULT_LIMIT)]
        limit: usize,
        /// Table cache directory (defaults to $PERMWORD_CACHE, then the platform cache dir)
        #[arg(long)]
        cache_dir: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(subcommand)]
        action: OracleAction,
    },
    /// Per-shift bumpiness report as JSON
    Bumpy {
        #[command(flatten)]
        input: PermInput,
        #[arg(long, default_value = "1/8")]
        b: String,
        #[arg(long, default_value = "1/4")]
        c: String,
    },
    /// Monte Carlo estimate of the bumpy fraction as JSON
    Fraction {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "1/8")]
        b: String,
        #[arg(long, default_value = "1/4")]
        c: String,
        /// Worker threads (0 = rayon default); does not affect the result
        #[arg(long, default_value_t = 0)]
        threads: usize,
    },
    /// Bound-gap rows for seeded random permutations as CSV
    Gap {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run a self-check suite
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
    },
}

#[derive(Subcommand, Debug)]
pub enum OracleAction {
    /// Build the table and store it in the cache
    Build,
    /// Exact complexity and one geodesic word
    Query { perm: String },
    /// Sphere sizes as `distance,count` CSV
    Spheres,
    /// Write the binary table to a file
    Export { path: PathBuf },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Small,
    Profile,
    Counting,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Small => Suite::Small,
            SuiteArg::Profile => Suite::Profile,
            SuiteArg::Counting => Suite::Counting,
        }
    }
}

/// A failure carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidSize(_) | Error::Domain(_) | Error::Parse { .. } | Error::DimensionMismatch { .. } => {
                EXIT_USAGE
            }
            Error::Capability(_) | Error::Io(_) => EXIT_CAPABILITY,
            Error::Precondition(_) => EXIT_INTERNAL,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e).into()
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

type CmdResult = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_USAGE;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match cli.command {
        Command::Synth { input, n, format } => cmd_synth(&input, n, format, out),
        Command::Bound { input, exact, limit } => cmd_bound(&input, exact, limit, out),
        Command::Oracle {
            n,
            limit,
            cache_dir,
            format,
            action,
        } => cmd_oracle(n, limit, cache_dir, format, &action, out, err),
        Command::Bumpy { input, b, c } => cmd_bumpy(&input, &b, &c, out),
        Command::Fraction {
            n,
            samples,
            seed,
            b,
            c,
            threads,
        } => cmd_fraction(n, samples, seed, &b, &c, threads, out),
        Command::Gap { n, samples, seed } => {
            let rows = bound_gap_report(n, samples, seed)?;
            write!(out, "{}", gap_rows_csv(&rows)?)?;
            Ok(EXIT_OK)
        }
        Command::Verify { suite } => cmd_verify(suite.into(), out),
    }
}

fn resolve(input: &PermInput) -> Result<Permutation, Failure> {
    match (&input.perm, input.hard) {
        (Some(text), None) => Ok(parse_permutation(text)?),
        (None, Some(n)) => Ok(hard_permutation(n)?),
        _ => Err(usage("give either a permutation or --hard N")),
    }
}

fn print_json(out: &mut dyn Write, value: &impl serde::Serialize) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure {
        code: EXIT_INTERNAL,
        message: e.to_string(),
    })?;
    writeln!(out, "{text}")?;
    Ok(())
}

pub fn cmd_synth_json(p: &Permutation) -> Result<serde_json::Value, Error> {
    let n = p.n();
    let w = synthesize(p)?;
    let verified = evaluate_word(&w, n)? == *p;
    Ok(json!({
        "permutation": p.to_string(),
        "n": n,
        "word": w.to_string(),
        "length": w.len(),
        "budget": upper_formula(n),
        "verified": verified,
    }))
}

fn cmd_synth(input: &PermInput, n: Option<usize>, format: Format, out: &mut dyn Write) -> CmdResult {
    let p = resolve(input)?;
    if let Some(n) = n {
        if n != p.n() {
            return Err(usage(format!("--n {n} does not match permutation on {} points", p.n())));
        }
    }
    let doc = cmd_synth_json(&p)?;
    if doc["verified"] != true {
        return Err(Failure {
            code: EXIT_INTERNAL,
            message: format!("synthesized word does not evaluate to {p}"),
        });
    }
    match format {
        Format::Json => print_json(out, &doc)?,
        Format::Text => {
            writeln!(out, "word: {}", doc["word"].as_str().unwrap_or_default())?;
            writeln!(out, "length: {}", doc["length"])?;
            writeln!(out, "budget: {}", doc["budget"])?;
            writeln!(out, "verified: {}", doc["verified"])?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_bound(input: &PermInput, exact: bool, limit: usize, out: &mut dyn Write) -> CmdResult {
    let p = resolve(input)?;
    let table = if exact {
        Some(oracle::build_table_with(
            p.n(),
            BuildOptions {
                limit,
                track_parents: false,
            },
        )?)
    } else {
        None
    };
    let cert = certify_with(&p, table.as_ref())?;
    if !cert.is_consistent() {
        return Err(Failure {
            code: EXIT_INTERNAL,
            message: format!("inconsistent certificate {cert:?}"),
        });
    }
    print_json(out, &cert)?;
    Ok(EXIT_OK)
}

/// `--cache-dir`, else `$PERMWORD_CACHE`, else `<platform cache>/permword`.
pub fn cache_dir(explicit: Option<PathBuf>) -> Option<PathBuf> {
    explicit
        .or_else(|| std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from))
        .or_else(|| dirs::cache_dir().map(|d| d.join("permword")))
}

fn table_path(dir: &std::path::Path, n: usize) -> PathBuf {
    dir.join(format!("s{n}.pwc"))
}

fn load_cached(dir: Option<&PathBuf>, n: usize) -> Option<ComplexityTable> {
    let path = table_path(dir?, n);
    let file = std::fs::File::open(path).ok()?;
    ComplexityTable::read_binary(std::io::BufReader::new(file))
        .ok()
        .filter(|t| t.n() == n)
}

fn store(dir: Option<&PathBuf>, table: &ComplexityTable) -> Result<PathBuf, Failure> {
    let dir = dir.ok_or_else(|| Failure {
        code: EXIT_CAPABILITY,
        message: "no cache directory available".into(),
    })?;
    std::fs::create_dir_all(dir)?;
    let path = table_path(dir, table.n());
    let file = std::fs::File::create(&path)?;
    table.write_binary(std::io::BufWriter::new(file))?;
    Ok(path)
}

/// Cached table if present, otherwise a fresh build within `limit`.
fn obtain(n: usize, limit: usize, dir: Option<&PathBuf>) -> Result<ComplexityTable, Failure> {
    if let Some(t) = load_cached(dir, n) {
        return Ok(t);
    }
    Ok(oracle::build_table_with(
        n,
        BuildOptions {
            limit,
            track_parents: false,
        },
    )?)
}

fn cmd_oracle(
    n: usize,
    limit: usize,
    cache_dir_arg: Option<PathBuf>,
    format: Format,
    action: &OracleAction,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let dir = cache_dir(cache_dir_arg);
    if n > oracle::DEFAULT_LIMIT && limit >= n {
        writeln!(
            err,
            "warning: n = {n} needs about {} MiB",
            oracle::memory_estimate(n, matches!(action, OracleAction::Query { .. })) >> 20
        )?;
    }
    match action {
        OracleAction::Build => {
            let table = oracle::build_table_with(
                n,
                BuildOptions {
                    limit,
                    track_parents: false,
                },
            )?;
            let path = store(dir.as_ref(), &table)?;
            let doc = json!({
                "n": n,
                "states": oracle::factorial(n),
                "diameter": table.diameter(),
                "path": path.display().to_string(),
            });
            match format {
                Format::Json => print_json(out, &doc)?,
                Format::Text => writeln!(out, "built S_{n}: diameter {} -> {}", table.diameter(), path.display())?,
            }
        }
        OracleAction::Query { perm } => {
            let p = parse_permutation(perm)?;
            if p.n() != n {
                return Err(usage(format!("--n {n} does not match permutation on {} points", p.n())));
            }
            let (exact, word) = if n <= limit.min(oracle::MAX_SUPPORTED) {
                let table = oracle::build_table_with(
                    n,
                    BuildOptions {
                        limit,
                        track_parents: true,
                    },
                )?;
                (table.exact_complexity(&p)?, Some(table.geodesic_word(&p)?))
            } else if let Some(table) = load_cached(dir.as_ref(), n) {
                (table.exact_complexity(&p)?, None)
            } else {
                return Err(Failure {
                    code: EXIT_CAPABILITY,
                    message: format!("no table for n = {n}: above limit {limit} and not cached"),
                });
            };
            match format {
                Format::Json => print_json(
                    out,
                    &json!({
                        "n": n,
                        "permutation": p.to_string(),
                        "exact": exact,
                        "word": word.as_ref().map(|w| w.to_string()),
                    }),
                )?,
                Format::Text => {
                    writeln!(out, "{exact}")?;
                    if let Some(w) = word {
                        writeln!(out, "{w}")?;
                    }
                }
            }
        }
        OracleAction::Spheres => {
            let table = obtain(n, limit, dir.as_ref())?;
            match format {
                Format::Json => print_json(out, &json!({ "n": n, "sphere_sizes": table.sphere_sizes() }))?,
                Format::Text => writeln!(out, "{}", table.spheres_csv())?,
            }
        }
        OracleAction::Export { path } => {
            let table = obtain(n, limit, dir.as_ref())?;
            let file = std::fs::File::create(path)?;
            table.write_binary(std::io::BufWriter::new(file))?;
            writeln!(
                err,
                "wrote {} bytes to {}",
                12 + table.distances().len(),
                path.display()
            )?;
        }
    }
    Ok(EXIT_OK)
}

fn params(b: &str, c: &str) -> Result<BumpinessParams, Failure> {
    BumpinessParams::parse(b, c).map_err(|e| usage(e.to_string()))
}

fn cmd_bumpy(input: &PermInput, b: &str, c: &str, out: &mut dyn Write) -> CmdResult {
    let params = params(b, c)?;
    let p = resolve(input)?;
    print_json(out, &is_bc_bumpy(&p, &params))?;
    Ok(EXIT_OK)
}

fn cmd_fraction(n: usize, samples: u64, seed: u64, b: &str, c: &str, threads: usize, out: &mut dyn Write) -> CmdResult {
    let params = params(b, c)?;
    let estimate = if threads == 0 {
        bumpy_fraction_estimate(n, samples, seed, &params)?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Failure {
                code: EXIT_CAPABILITY,
                message: e.to_string(),
            })?;
        pool.install(|| bumpy_fraction_estimate(n, samples, seed, &params))?
    };
    print_json(out, &estimate)?;
    Ok(EXIT_OK)
}

fn cmd_verify(suite: Suite, out: &mut dyn Write) -> CmdResult {
    let outcomes = run_suite(suite)?;
    let mut failed = 0;
    for o in &outcomes {
        writeln!(out, "{o}")?;
        failed += usize::from(!o.passed);
    }
    writeln!(out, "{} passed, {failed} failed", outcomes.len() - failed)?;
    Ok(if failed == 0 { EXIT_OK } else { EXIT_SUITE_FAILED })
}
