//! `zideal`: inspect finite commutative semirings, verify the claim
//! registry over a corpus, and hunt for counterexamples.

use std::fs;
use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{error::ErrorKind, Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use zideal::claims::Finding;
use zideal::corpus::{builtin_catalog, builtin_table, load_dir, load_file};
use zideal::semiring::{DEFAULT_MAX_ORDER, DEFAULT_SCAN_MAX_ORDER};
use zideal::{
    hunt, parse_element_list, parse_semiring, render_text, select_claims, serialize_semiring,
    to_dot, validate, verify_corpus, CorpusEntry, CorpusError, ElemSet, HarnessError, IdealError,
    Limits, SemiringTable, TableError, VerifyOptions, ZContext,
};

const EXIT_USAGE: u8 = 64;
const EXIT_TOO_LARGE: u8 = 65;
const EXIT_FILE: u8 = 66;

#[derive(Parser)]
#[command(name = "zideal", version, about = "Ideal and z-ideal theory of finite commutative semirings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Largest order a product construction may produce.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ORDER)]
    max_order: usize,
    /// Largest order whose ideals are enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_SCAN_MAX_ORDER)]
    scan_max_order: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a semiring file against the axioms.
    Check { file: PathBuf },
    /// List the ideals of a semiring with their flags.
    Ideals {
        file: PathBuf,
        /// Keep only ideals carrying this flag.
        #[arg(long)]
        only: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Ideal generated by some elements, its z-closure and radicals.
    Closure {
        file: PathBuf,
        /// Comma-separated element indices.
        #[arg(long, allow_hyphen_values = true)]
        elements: String,
    },
    /// Evaluate claims over a corpus.
    Verify(VerifyArgs),
    /// Search semirings of one order for failures of a claim.
    Hunt {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        claim: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        budget: usize,
    },
    /// List builtin semirings or write one out as a file.
    Catalog {
        #[arg(long, conflicts_with = "emit")]
        list: bool,
        #[arg(long, value_name = "NAME")]
        emit: Option<String>,
        #[arg(short, requires = "emit")]
        o: Option<PathBuf>,
    },
    /// Hasse diagram of the ideal lattice in DOT format.
    Dot {
        file: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Semiring file, or a directory of `*.json` files.
    #[arg(conflicts_with = "corpus")]
    path: Option<PathBuf>,
    /// Use the builtin default corpus (the default when no path is given).
    #[arg(long)]
    corpus: bool,
    /// Comma-separated claim ids; all claims if omitted.
    #[arg(long, value_delimiter = ',')]
    claims: Vec<String>,
    #[arg(long, default_value_t = 1)]
    parallel: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Record per-cell wall time.
    #[arg(long)]
    timings: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// A failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<CorpusError> for Failure {
    fn from(e: CorpusError) -> Self {
        let code = match &e {
            CorpusError::UnknownName(_) | CorpusError::BadParameter(_) => EXIT_USAGE,
            CorpusError::TooLarge(_) => EXIT_TOO_LARGE,
            CorpusError::Table {
                error: TableError::Overflow { .. },
                ..
            } => EXIT_TOO_LARGE,
            CorpusError::Invalid { .. } | CorpusError::Table { .. } | CorpusError::Io { .. } => {
                EXIT_FILE
            }
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<IdealError> for Failure {
    fn from(e: IdealError) -> Self {
        let code = match e {
            IdealError::TooLarge { .. } => EXIT_TOO_LARGE,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<HarnessError> for Failure {
    fn from(e: HarnessError) -> Self {
        match e {
            HarnessError::Ideal(e) => e.into(),
            HarnessError::Enumerate(_) => Failure {
                code: EXIT_TOO_LARGE,
                message: e.to_string(),
            },
            other => Failure::usage(other.to_string()),
        }
    }
}

fn io_failure(path: &Path, e: io::Error) -> Failure {
    Failure {
        code: EXIT_FILE,
        message: format!("{}: {e}", path.display()),
    }
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| io_failure(p, e)),
        None => {
            let _ = io::stdout().write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn load(path: &Path, limits: &Limits) -> Result<CorpusEntry, Failure> {
    Ok(load_file(path, limits)?)
}

fn context(path: &Path, limits: &Limits) -> Result<ZContext, Failure> {
    let entry = load(path, limits)?;
    Ok(ZContext::build(entry.table, limits)?)
}

const FLAGS: &[&str] = &[
    "z",
    "maximal",
    "prime",
    "semiprime",
    "irreducible",
    "strongly-irreducible",
    "z-maximal",
    "z-prime",
    "z-semiprime",
    "z-irreducible",
    "z-strongly-irreducible",
];

fn flags(ctx: &ZContext, a: ElemSet) -> Vec<&'static str> {
    let l = ctx.lattice();
    let tests = [
        ctx.is_z_ideal(a),
        l.is_maximal(a),
        l.is_prime(a),
        l.is_semiprime(a),
        l.is_irreducible(a),
        l.is_strongly_irreducible(a),
        ctx.is_z_maximal(a),
        ctx.is_z_prime(a),
        ctx.is_z_semiprime(a),
        ctx.is_z_irreducible(a),
        ctx.is_z_strongly_irreducible(a),
    ];
    FLAGS
        .iter()
        .zip(tests)
        .filter_map(|(f, on)| on.then_some(*f))
        .collect()
}

fn cmd_check(file: &Path) -> Result<u8, Failure> {
    let text = fs::read_to_string(file).map_err(|e| io_failure(file, e))?;
    let table = parse_semiring(&text).map_err(|error| {
        let code = match error {
            TableError::Overflow { .. } => EXIT_TOO_LARGE,
            _ => EXIT_FILE,
        };
        Failure {
            code,
            message: format!("{}: {error}", file.display()),
        }
    })?;
    let report = validate(&table);
    write_output(None, &report.to_string())?;
    Ok(if report.ok { 0 } else { 1 })
}

fn cmd_ideals(file: &Path, only: Option<&str>, format: Format, limits: &Limits) -> Result<u8, Failure> {
    if let Some(flag) = only {
        if !FLAGS.contains(&flag) {
            return Err(Failure::usage(format!(
                "unknown flag `{flag}`; expected one of {}",
                FLAGS.join(", ")
            )));
        }
    }
    let ctx = context(file, limits)?;
    let rows: Vec<(ElemSet, Vec<&str>)> = ctx
        .lattice()
        .ideals()
        .iter()
        .map(|&a| (a, flags(&ctx, a)))
        .filter(|(_, f)| only.is_none_or(|flag| f.contains(&flag)))
        .collect();
    let out = match format {
        Format::Json => {
            let items: Vec<_> = rows
                .iter()
                .map(|(a, f)| json!({ "ideal": a, "flags": f }))
                .collect();
            let mut s = serde_json::to_string_pretty(&items).expect("serializable");
            s.push('\n');
            s
        }
        Format::Text => {
            let width = rows.iter().map(|(a, _)| a.to_string().len()).max().unwrap_or(0);
            rows.iter()
                .map(|(a, f)| {
                    let line = format!("{:<width$}  {}", a.to_string(), f.join(" "));
                    format!("{}\n", line.trim_end())
                })
                .collect()
        }
    };
    write_output(None, &out)?;
    Ok(0)
}

fn cmd_closure(file: &Path, elements: &str, limits: &Limits) -> Result<u8, Failure> {
    let seed = parse_element_list(elements).map_err(Failure::usage)?;
    let ctx = context(file, limits)?;
    let n = ctx.table().order();
    if let Some(x) = seed.iter().find(|&x| x >= n) {
        return Err(Failure::usage(format!("element {x} is out of range for order {n}")));
    }
    let a = ctx.lattice().generated(seed);
    let closure = ctx.z_closure(a);
    let mut out = format!(
        "ideal:     {a}\nz-closure: {closure}\nradical:   {}\n",
        ctx.lattice().radical(a)
    );
    if let Ok(r) = ctx.z_radical(a) {
        let _ = writeln!(out, "z-radical: {r}");
    }
    write_output(None, &out)?;
    Ok(0)
}

fn cmd_verify(args: &VerifyArgs, limits: &Limits) -> Result<u8, Failure> {
    if args.parallel == 0 {
        return Err(Failure::usage("--parallel must be at least 1"));
    }
    let specs = select_claims(&args.claims)?;
    let entries = match &args.path {
        Some(p) if p.is_dir() => load_dir(p, limits)?,
        Some(p) => vec![load(p, limits)?],
        None => zideal::corpus::DEFAULT_CORPUS
            .iter()
            .map(|e| zideal::builtin(e, limits))
            .collect::<Result<_, _>>()?,
    };
    let opts = VerifyOptions {
        parallelism: args.parallel,
        timings: args.timings,
        limits: *limits,
    };
    let report = verify_corpus(&specs, &entries, &opts)?;
    let out = match args.format {
        Format::Json => report.to_json(),
        Format::Text => render_text(&report),
    };
    write_output(None, &out)?;
    Ok(report.summary.status as u8)
}

fn cmd_hunt(order: usize, claim: &str, seed: u64, budget: usize) -> Result<u8, Failure> {
    let outcome = hunt(order, claim, budget, seed)?;
    let mut out = format!(
        "examined {} semiring(s) of order {order}; {} failure(s) of {claim}\n",
        outcome.examined,
        outcome.failures.len()
    );
    for Finding { table, result } in &outcome.failures {
        let w = result.witness.as_ref().map(|w| w.to_string()).unwrap_or_default();
        let _ = write!(out, "\n{}: {w}\n{}", table.name(), serialize_semiring(table));
    }
    write_output(None, &out)?;
    Ok(0)
}

fn cmd_catalog(emit: Option<&str>, out: Option<&Path>, limits: &Limits) -> Result<u8, Failure> {
    match emit {
        None => {
            let rows = builtin_catalog();
            let width = rows.iter().map(|(n, _)| n.len()).max().unwrap_or(0);
            let mut out = String::new();
            for (name, doc) in rows {
                let _ = writeln!(out, "{name:<width$}  {doc}");
            }
            let _ = writeln!(out, "\ndefault corpus: {}", zideal::corpus::DEFAULT_CORPUS.join(" "));
            write_output(None, &out)?;
        }
        Some(name) => {
            let table: SemiringTable = builtin_table(name, limits)?;
            write_output(out, &serialize_semiring(&table))?;
        }
    }
    Ok(0)
}

fn cmd_dot(file: &Path, out: Option<&Path>, limits: &Limits) -> Result<u8, Failure> {
    let ctx = context(file, limits)?;
    write_output(out, &to_dot(&ctx))?;
    Ok(0)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let limits = Limits {
        max_order: cli.max_order,
        scan_max_order: cli.scan_max_order,
    };
    match &cli.command {
        Command::Check { file } => cmd_check(file),
        Command::Ideals { file, only, format } => cmd_ideals(file, only.as_deref(), *format, &limits),
        Command::Closure { file, elements } => cmd_closure(file, elements, &limits),
        Command::Verify(args) => cmd_verify(args, &limits),
        Command::Hunt {
            order,
            claim,
            seed,
            budget,
        } => cmd_hunt(*order, claim, *seed, *budget),
        Command::Catalog { emit, o, .. } => cmd_catalog(emit.as_deref(), o.as_deref(), &limits),
        Command::Dot { file, o } => cmd_dot(file, o.as_deref(), &limits),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("zideal: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
