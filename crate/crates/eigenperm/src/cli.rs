//! Command-line surface: argument definitions and command implementations.
//!
//! Exit codes are a stable contract: 0 = success, 1 = verification or
//! mathematical failure, 2 = usage or parse error. Primary output goes to
//! stdout; diagnostics and --progress go to stderr.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::BigInt;

use crate::bijection::{perm_to_tree, tree_to_perm, CycleLabeledTree};
use crate::error::{Error, Result};
use crate::lagrange::{fixed_point_sequence, lagrange_revert_reciprocal};
use crate::perm::{count_avoiders_with, CheckMethod, Permutation};
use crate::seqfile::{read_count_sequence, read_series};
use crate::series::{
    eigensequence, functional_sqrt, revert_reciprocal, revert_reciprocal_modified,
    self_composition,
};
use crate::tree::{weighted_tree_count, WeightedMode, MAX_WEIGHTED_ENUM_EDGES};
use crate::verify::{self, Suite};

/// Hard cap on sequence lengths printed by `seq`.
pub const MAX_SEQ_TERMS: usize = 200;
/// Environment variable overriding built-in depth defaults; flags win.
pub const MAX_N_ENV: &str = "EIGENPERM_MAX_N";

const EXIT_OK: i32 = 0;
const EXIT_MATH: i32 = 1;
const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "eigenperm",
    about = "Exact transforms, pattern-avoidance counts, and tree bijections \
             for the self-composition eigensequence, cross-verified",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Print progress for long enumerations to stderr.
    #[arg(long, global = true)]
    pub progress: bool,
}

#[derive(Subcommand)]
pub enum Command {
    /// Print a sequence: the self-composition eigensequence or the
    /// partition-sum fixed point (they coincide).
    Seq(SeqArgs),
    /// Apply a sequence transform to a sequence file.
    Transform(TransformArgs),
    /// Count barred-pattern-avoiding permutations of [n] by one of four
    /// independent methods.
    Count(CountArgs),
    /// Map a permutation to its cycle-labeled tree or back.
    Bijection(BijectionArgs),
    /// Run cross-verification suites.
    Verify(VerifyArgs),
}

#[derive(Args)]
pub struct SeqArgs {
    #[arg(value_enum)]
    pub kind: SeqKind,
    /// Number of terms to print (at most 200; the fixpoint route is
    /// partition-bounded at 51).
    #[arg(long)]
    pub terms: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Also compute the other route and fail unless both agree.
    #[arg(long)]
    pub check: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeqKind {
    Eigen,
    Fixpoint,
}

#[derive(Args)]
pub struct TransformArgs {
    #[arg(value_enum)]
    pub kind: TransformKind,
    /// Sequence file: one coefficient per line, `#` comments allowed.
    #[arg(long)]
    pub input: PathBuf,
    /// Number of output terms.
    #[arg(long)]
    pub terms: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TransformKind {
    /// Revert-reciprocal transform (x/(1+A))^<-1>, series route.
    Rr,
    /// Modified revert-reciprocal: forced leading 1 deleted, entries shifted.
    RrMod,
    /// Self-composition A(A(x)).
    SelfComp,
    /// Functional square root of self-composition.
    Fsqrt,
    /// Revert-reciprocal via the explicit partition sum (integer input only).
    LagrangeRr,
}

#[derive(Args)]
pub struct CountArgs {
    /// Permutation length n; counts |S_n| avoiding the barred pattern.
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum)]
    pub method: CountMethodArg,
    /// Raise the exhaustive-method bound to 11 (long run).
    #[arg(long)]
    pub allow_long: bool,
    /// JSON result cache; computed values are checked against it and a
    /// stored mismatch fails the run.
    #[arg(long)]
    pub cache: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountMethodArg {
    /// Exhaustive enumeration with the direct pattern checker.
    Brute,
    /// Partition-sum fixed-point recurrence.
    Recurrence,
    /// Weighted count over enumerated ordered trees.
    Trees,
    /// Coefficient of the self-composition eigensequence.
    Eigen,
}

impl CountMethodArg {
    fn label(self) -> &'static str {
        match self {
            CountMethodArg::Brute => "brute",
            CountMethodArg::Recurrence => "recurrence",
            CountMethodArg::Trees => "trees",
            CountMethodArg::Eigen => "eigen",
        }
    }
}

#[derive(Args)]
pub struct BijectionArgs {
    #[arg(value_enum)]
    pub direction: Direction,
    /// to-tree: the permutation as a quoted word, e.g. "3 1 2".
    /// to-perm: path to a tree JSON file.
    pub input: String,
    /// Run the inverse direction too and fail unless the round trip is
    /// the identity.
    #[arg(long)]
    pub check: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    ToTree,
    ToPerm,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    pub suite: SuiteArg,
    /// Exhaustive depth; defaults per suite, bounded per suite.
    #[arg(long)]
    pub max_n: Option<usize>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    All,
    Series,
    Counts,
    Bijection,
    Trees,
    Agreement,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Series => Suite::Series,
            SuiteArg::Counts => Suite::Counts,
            SuiteArg::Bijection => Suite::Bijection,
            SuiteArg::Trees => Suite::Trees,
            SuiteArg::Agreement => Suite::Agreement,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

/// Run a parsed command line; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    let outcome = match cli.command {
        Command::Seq(args) => cmd_seq(&args),
        Command::Transform(args) => cmd_transform(&args),
        Command::Count(args) => cmd_count(&args, cli.progress),
        Command::Bijection(args) => cmd_bijection(&args),
        Command::Verify(args) => cmd_verify(&args),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::Io(_)
        | Error::OrderTooSmall { .. }
        | Error::LimitExceeded { .. }
        | Error::PartsSumMismatch { .. }
        | Error::WeightsTooShort { .. }
        | Error::InvalidCensus(_)
        | Error::InvalidPermutation(_) => EXIT_USAGE,
        Error::NonInvertible
        | Error::NotARationalSquare(_)
        | Error::NonPositiveLeading(_)
        | Error::NonUniqueStep { .. }
        | Error::EmptyPermutation
        | Error::ConditionIViolation(_)
        | Error::InvalidTree(_) => EXIT_MATH,
    }
}

/// Depth resolution: explicit flag beats EIGENPERM_MAX_N beats the default.
fn env_max_n() -> Option<usize> {
    std::env::var(MAX_N_ENV).ok().and_then(|v| v.parse().ok())
}

fn seq_values(kind: SeqKind, terms: usize) -> Result<Vec<String>> {
    match kind {
        SeqKind::Eigen => Ok(eigensequence(terms)
            .coeffs()
            .iter()
            .map(|c| c.to_string())
            .collect()),
        SeqKind::Fixpoint => Ok(fixed_point_sequence(terms)?
            .terms()
            .iter()
            .map(|t| t.to_string())
            .collect()),
    }
}

fn cmd_seq(args: &SeqArgs) -> Result<i32> {
    if args.terms == 0 {
        return Err(Error::Parse("terms must be positive".into()));
    }
    if args.terms > MAX_SEQ_TERMS {
        return Err(Error::LimitExceeded {
            what: "seq terms",
            limit: MAX_SEQ_TERMS,
            requested: args.terms,
        });
    }
    let values = seq_values(args.kind, args.terms)?;
    if args.check {
        let other = match args.kind {
            SeqKind::Eigen => SeqKind::Fixpoint,
            SeqKind::Fixpoint => SeqKind::Eigen,
        };
        let cross = seq_values(other, args.terms)?;
        if cross != values {
            eprintln!("error: eigen and fixpoint routes disagree");
            return Ok(EXIT_MATH);
        }
    }
    print!("{}", render_values(&values, args.format));
    Ok(EXIT_OK)
}

fn cmd_transform(args: &TransformArgs) -> Result<i32> {
    if args.terms == 0 {
        return Err(Error::Parse("terms must be positive".into()));
    }
    let values: Vec<String> = match args.kind {
        TransformKind::Rr => {
            let s = read_series(&args.input)?;
            render_coeffs(&revert_reciprocal(&s, args.terms)?)
        }
        TransformKind::RrMod => {
            let s = read_series(&args.input)?;
            render_coeffs(&revert_reciprocal_modified(&s, args.terms)?)
        }
        TransformKind::SelfComp => {
            let s = read_series(&args.input)?;
            render_coeffs(&self_composition(&s, args.terms)?)
        }
        TransformKind::Fsqrt => {
            let s = read_series(&args.input)?;
            render_coeffs(&functional_sqrt(&s, args.terms)?)
        }
        TransformKind::LagrangeRr => {
            let cs = read_count_sequence(&args.input)?;
            lagrange_revert_reciprocal(&cs, args.terms)?
                .terms()
                .iter()
                .map(|t| t.to_string())
                .collect()
        }
    };
    print!("{}", render_values(&values, args.format));
    Ok(EXIT_OK)
}

fn render_coeffs(s: &crate::series::TruncatedSeries) -> Vec<String> {
    s.coeffs().iter().map(|c| c.to_string()).collect()
}

fn cmd_count(args: &CountArgs, progress: bool) -> Result<i32> {
    let n = args.n;
    let value: BigInt = match args.method {
        CountMethodArg::Brute => {
            let limit = if args.allow_long {
                11
            } else {
                env_max_n().unwrap_or(10)
            };
            let total = factorial_u64(n);
            count_avoiders_with(n, CheckMethod::Direct, limit, |visited| {
                if progress {
                    eprintln!("progress: {visited}/{total} permutations");
                }
            })?
        }
        CountMethodArg::Recurrence => {
            // |S_n| is term n+1 of the fixed point
            fixed_point_sequence(n + 1)?.term(n + 1).clone()
        }
        CountMethodArg::Trees => {
            if n > MAX_WEIGHTED_ENUM_EDGES {
                return Err(Error::LimitExceeded {
                    what: "tree-enumeration count",
                    limit: MAX_WEIGHTED_ENUM_EDGES,
                    requested: n,
                });
            }
            let weights = fixed_point_sequence(n.max(1))?;
            weighted_tree_count(n, &weights, WeightedMode::Enumerate)?
        }
        CountMethodArg::Eigen => {
            if n + 1 > MAX_SEQ_TERMS {
                return Err(Error::LimitExceeded {
                    what: "eigensequence count",
                    limit: MAX_SEQ_TERMS - 1,
                    requested: n,
                });
            }
            let e = eigensequence(n + 1);
            e.coeff(n + 1).numer().clone()
        }
    };

    if let Some(cache_path) = &args.cache {
        let key = format!("count:{}:{}", args.method.label(), n);
        return check_cache(cache_path, &key, &value);
    }
    println!("{value}");
    Ok(EXIT_OK)
}

fn factorial_u64(n: usize) -> u64 {
    (1..=n as u64).product::<u64>().max(1)
}

// The cache never short-circuits computation; it is a persisted consistency
// check. A stored value that disagrees with the fresh computation fails the
// run with exit 1.
fn check_cache(path: &Path, key: &str, value: &BigInt) -> Result<i32> {
    let mut map: BTreeMap<String, String> = if path.exists() {
        let text = std::fs::read_to_string(path)?;
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("cache file: {e}")))?
    } else {
        BTreeMap::new()
    };
    if let Some(stored) = map.get(key) {
        if stored != &value.to_string() {
            eprintln!("error: cache mismatch for {key}: stored {stored}, computed {value}");
            return Ok(EXIT_MATH);
        }
    } else {
        map.insert(key.to_string(), value.to_string());
        std::fs::write(path, serde_json::to_string_pretty(&map).expect("cache serializes"))?;
    }
    println!("{value}");
    Ok(EXIT_OK)
}

fn cmd_bijection(args: &BijectionArgs) -> Result<i32> {
    match args.direction {
        Direction::ToTree => {
            let p = Permutation::from_str(&args.input)?;
            let tree = perm_to_tree(&p)?;
            if args.check {
                let back = tree_to_perm(&tree)?;
                if back != p {
                    eprintln!("error: round trip changed the permutation: {back}");
                    return Ok(EXIT_MATH);
                }
            }
            println!("{}", serde_json::to_string(&tree).expect("tree serializes"));
        }
        Direction::ToPerm => {
            let text = std::fs::read_to_string(&args.input)?;
            let tree: CycleLabeledTree = serde_json::from_str(&text)
                .map_err(|e| Error::Parse(format!("tree JSON: {e}")))?;
            let p = tree_to_perm(&tree)?;
            if args.check {
                let back = perm_to_tree(&p)?;
                if back != tree {
                    eprintln!("error: round trip changed the tree");
                    return Ok(EXIT_MATH);
                }
            }
            println!("{p}");
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(args: &VerifyArgs) -> Result<i32> {
    let max_n = args.max_n.or_else(env_max_n);
    let reports = verify::run(args.suite.into(), max_n)?;
    match args.format {
        ReportFormat::Text => {
            for r in &reports {
                print!("{}", r.render_text());
            }
        }
        ReportFormat::Json => {
            if reports.len() == 1 {
                println!("{}", reports[0].to_json());
            } else {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&reports).expect("reports serialize")
                );
            }
        }
    }
    if reports.iter().all(|r| r.passed()) {
        Ok(EXIT_OK)
    } else {
        Ok(EXIT_MATH)
    }
}

fn render_values(values: &[String], format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => {
            let mut line = values.join(" ");
            line.push('\n');
            line
        }
        OutputFormat::Json => {
            let mut s = serde_json::to_string(values).expect("strings serialize");
            s.push('\n');
            s
        }
        OutputFormat::Csv => {
            let mut out = String::from("index,value\n");
            for (i, v) in values.iter().enumerate() {
                out.push_str(&format!("{},{}\n", i + 1, v));
            }
            out
        }
    }
}
