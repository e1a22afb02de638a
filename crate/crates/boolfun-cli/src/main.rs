//! `boolfun`: analyze Boolean and vectorial Boolean functions, verify the
//! derivative-total predicates against independent measurements, scan
//! families, and inspect the built-in catalog.
//!
//! Exit codes: 0 success, 2 parse or I/O error, 3 resource cap exceeded,
//! 4 verification mismatch.

mod error;
mod input;
mod report;
mod scan;
mod verify;

use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use boolfun::catalog;
use error::{CliError, CliResult};
use input::{Function, InputSpec, Loaded};
use report::{Report, VectorialAnalysis, SCHEMA_VERSION};

/// Soft size caps for full analysis; --force overrides them after printing a
/// cost estimate (the library's own hard caps still apply).
const SCALAR_CAP: u32 = 16;
const VECTORIAL_CAP: u32 = 10;

#[derive(Parser)]
#[command(name = "boolfun", version, about = "Exact derivative-weight analysis of Boolean functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the full report for one function
    Analyze(AnalyzeArgs),
    /// Check predicate verdicts against independent measurements
    Verify(VerifyArgs),
    /// Emit one row per function of a family
    Scan(ScanArgs),
    /// List or show built-in catalog entries
    Catalog(CatalogArgs),
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum OutputFormat {
    /// Ordered key = value lines
    Report,
    /// Tab-separated header plus one row
    Rows,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    input: InputSpec,
    #[arg(long, value_enum, default_value_t = OutputFormat::Report)]
    format: OutputFormat,
    /// Write output to a file instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Proceed past the soft size caps (prints a cost estimate first)
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: InputSpec,
    /// Comma-separated theorem names, or `all`
    #[arg(long, default_value = "all")]
    theorems: String,
    /// Use the definitional oracles for the independent measurements
    #[arg(long)]
    oracle: bool,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long, value_enum)]
    family: scan::Family,
    /// Dimension of every function in the scan
    #[arg(long)]
    n: u32,
    /// Number of rows for the random-lut family
    #[arg(long, default_value_t = 100)]
    count: u64,
    /// Base seed for the random-lut family
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct CatalogArgs {
    #[command(subcommand)]
    command: CatalogCommand,
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// List entries, all dimensions up to 8 unless --n is given
    List {
        #[arg(long)]
        n: Option<u32>,
    },
    /// Show one entry with its lookup table
    Show { name: String },
}

fn main() {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Scan(args) => cmd_scan(args),
        Command::Catalog(args) => cmd_catalog(args),
    };
    if let Err(e) = result {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
        }
    }
    Ok(())
}

/// Enforce the soft caps; with force, print the cost estimate and continue.
fn check_caps(function: &Function, force: bool) -> CliResult<()> {
    let (n, cap, label, ops) = match function {
        Function::Scalar(f) => {
            let n = f.n();
            (n, SCALAR_CAP, "scalar", (2 * n as u64) << n)
        }
        Function::Vectorial(f) => {
            let n = f.n();
            (n, VECTORIAL_CAP, "vectorial", (2 * n as u64) << (2 * n))
        }
    };
    if n <= cap {
        return Ok(());
    }
    if !force {
        return Err(CliError::Cap(format!(
            "{label} analysis capped at n = {cap} (got n = {n}); pass --force to override"
        )));
    }
    eprintln!(
        "warning: n = {n} exceeds the soft {label} cap {cap}; estimated ~{} core operations",
        ops
    );
    Ok(())
}

fn cmd_analyze(args: AnalyzeArgs) -> CliResult<()> {
    let loaded = args.input.load()?;
    check_caps(&loaded.function, args.force)?;
    let start = Instant::now();

    let text = match args.format {
        OutputFormat::Report => {
            let mut report = Report::default();
            report.push("schema_version", SCHEMA_VERSION);
            for (key, value) in &loaded.provenance {
                report.push(format!("input.{key}"), value);
            }
            match &loaded.function {
                Function::Scalar(f) => report::scalar_section(&mut report, f),
                Function::Vectorial(f) => {
                    let analysis = VectorialAnalysis::compute(f)?;
                    report::vectorial_section(&mut report, f, &analysis);
                }
            }
            report.push("timing.elapsed_ms", start.elapsed().as_millis());
            report.render()
        }
        OutputFormat::Rows => {
            let lookup = |key: &str| {
                loaded
                    .provenance
                    .iter()
                    .find(|(k, _)| k == key)
                    .map(|(_, v)| v.clone())
            };
            let id = lookup("name")
                .or_else(|| lookup("d"))
                .or_else(|| lookup("kind"))
                .unwrap_or_else(|| "input".into());
            match &loaded.function {
                Function::Scalar(f) => {
                    format!("{}\n{}\n", report::scalar_row_header(), report::scalar_row(&id, f))
                }
                Function::Vectorial(f) => {
                    let analysis = VectorialAnalysis::compute(f)?;
                    format!(
                        "{}\n{}\n",
                        report::vectorial_row_header(),
                        report::vectorial_row(&id, f, &analysis)
                    )
                }
            }
        }
    };
    emit(&args.out, &text)
}

fn cmd_verify(args: VerifyArgs) -> CliResult<()> {
    let selectors = verify::parse_selectors(&args.theorems)?;
    let loaded: Loaded = args.input.load()?;
    check_caps(&loaded.function, args.force)?;
    let f = match &loaded.function {
        Function::Vectorial(f) => f,
        Function::Scalar(_) => {
            return Err(CliError::Input(
                "verify needs a vectorial input; the theorems quantify over components".into(),
            ))
        }
    };
    let analysis = VectorialAnalysis::compute(f)?;
    let output = verify::run(f, &analysis, &selectors, args.oracle)?;
    emit(&args.out, &output.text)?;
    if output.mismatches > 0 {
        return Err(CliError::Mismatch(format!(
            "{} theorem(s) inconsistent with measurement",
            output.mismatches
        )));
    }
    Ok(())
}

fn cmd_scan(args: ScanArgs) -> CliResult<()> {
    if args.n > VECTORIAL_CAP && !args.force {
        return Err(CliError::Cap(format!(
            "scan capped at n = {VECTORIAL_CAP} (got n = {}); pass --force to override",
            args.n
        )));
    }
    let text = scan::run(args.family, args.n, args.count, args.seed)?;
    emit(&args.out, &text)
}

fn cmd_catalog(args: CatalogArgs) -> CliResult<()> {
    match args.command {
        CatalogCommand::List { n } => {
            let dims: Vec<u32> = match n {
                Some(n) => vec![n],
                None => (1..=8).collect(),
            };
            let mut out = String::from("name\tn\tapn\tpermutation\tdegree\tnote\n");
            for dim in dims {
                for e in catalog::entries_for_dimension(dim)? {
                    let opt = |v: Option<bool>| {
                        v.map(|b| b.to_string()).unwrap_or_else(|| "?".into())
                    };
                    let degree = e
                        .expected
                        .degree
                        .map(|d| d.to_string())
                        .unwrap_or_else(|| "?".into());
                    out.push_str(&format!(
                        "{}\t{}\t{}\t{}\t{}\t{}\n",
                        e.name,
                        e.n,
                        opt(e.expected.apn),
                        opt(e.expected.permutation),
                        degree,
                        e.note
                    ));
                }
            }
            emit(&None, &out)
        }
        CatalogCommand::Show { name } => {
            let entry = catalog::lookup(&name)?;
            let mut report = Report::default();
            report.push("name", &entry.name);
            report.push("n", entry.n);
            if let boolfun::Provenance::Catalog {
                modulus: Some(m), ..
            } = entry.function.provenance()
            {
                report.push("modulus", format!("{m:#x}"));
            }
            let opt = |v: Option<bool>| v.map(|b| b.to_string()).unwrap_or_else(|| "?".into());
            report.push("expected.apn", opt(entry.expected.apn));
            report.push("expected.permutation", opt(entry.expected.permutation));
            match entry.expected.degree {
                Some(d) => report.push("expected.degree", d),
                None => report.push("expected.degree", "?"),
            }
            report.push("note", entry.note);
            report.push("lut", entry.function.to_lut_string().replace('\n', " "));
            emit(&None, &report.render())
        }
    }
}
