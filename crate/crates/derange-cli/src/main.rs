//! `derange` — command-line surface for the derangement toolkit.
//!
//! Verbs:
//!
//! - `map`: apply the pair injection to a pair of derangements.
//! - `invert`: recover the unique preimage of a candidate image pair, or
//!   report `NOT-IN-IMAGE`.
//! - `classify`: print the classification tag of a pair.
//! - `seq`: print a counting-sequence table (plain, CSV, or JSON).
//! - `verify`: run the exhaustive verification suites.
//! - `explore-d`: print the empirical even/odd `inv_D` split table
//!   (labeled EXPLORATORY; no verdict is asserted).
//!
//! Exit codes: 0 on success or a fully passing `verify`; 1 on a failing
//! verification or a `NOT-IN-IMAGE` inversion; 2 on usage errors, including
//! malformed permutation text.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use derange::error::Error;
use derange::perm::Permutation;
use derange::seq::{self, SeqFamily};
use derange::signed::SignedPermutation;
use derange::type_a::{classify_a, lambda_inv, psi};
use derange::type_bd::{classify_b, phi, theta};
use derange::verify::{run_suite, SuiteKind};

#[derive(Parser)]
#[command(
    name = "derange",
    version,
    about = "Derangement pair injections, counting sequences, and verification suites"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Apply the pair injection: a degree-n pair maps to a (n-1, n+1) pair.
    Map(PairArgs),
    /// Invert the pair injection on a candidate (n-1, n+1) image pair.
    Invert(PairArgs),
    /// Print the classification tag of a degree-n pair.
    Classify(PairArgs),
    /// Print a counting-sequence table.
    Seq(SeqArgs),
    /// Run exhaustive verification suites and print a pass/fail report.
    Verify(VerifyArgs),
    /// Print the empirical even/odd inv_D split table (EXPLORATORY).
    ExploreD(ExploreArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PairType {
    /// Unsigned derangement pairs; cycle or one-line form.
    #[value(name = "A", alias = "a")]
    A,
    /// Signed derangement pairs; window form.
    #[value(name = "B", alias = "b")]
    B,
}

#[derive(Args)]
struct PairArgs {
    /// Pair family: A (unsigned) or B (signed).
    #[arg(long = "type", value_enum)]
    kind: PairType,
    /// Degree of the source pair.
    #[arg(long)]
    n: usize,
    /// The two permutations separated by ';'.
    #[arg(long)]
    pair: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeqFormat {
    Csv,
    Json,
}

#[derive(Args)]
struct SeqArgs {
    /// Family name: h, hB, hD, hBminusD, hPlus, hMinus, hBPlus, hBMinus, hDPlus, hDMinus.
    #[arg(long)]
    family: String,
    /// Largest index to tabulate.
    #[arg(long)]
    to: usize,
    /// Output format; plain `n:value` pairs when omitted.
    #[arg(long, value_enum)]
    format: Option<SeqFormat>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite to run: examples, a, bd, parity, sequences, or all.
    #[arg(long, default_value = "all")]
    suite: String,
    /// Ceiling override for the selected suites' sweeps.
    #[arg(long)]
    max_n: Option<usize>,
    /// Worker pool size (default: available parallelism).
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args)]
struct ExploreArgs {
    /// Largest degree to enumerate (exhaustive; capped).
    #[arg(long)]
    to: usize,
}

/// A failed invocation: what to print on stderr and which code to exit with.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: 2,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn dispatch(cli: Cli) -> Result<u8, Failure> {
    match cli.verb {
        Verb::Map(args) => cmd_map(&args),
        Verb::Invert(args) => cmd_invert(&args),
        Verb::Classify(args) => cmd_classify(&args),
        Verb::Seq(args) => cmd_seq(&args),
        Verb::Verify(args) => cmd_verify(&args),
        Verb::ExploreD(args) => cmd_explore(&args),
    }
}

/// Splits `--pair` text on the single `;` separator.
fn split_pair(pair: &str) -> Result<(&str, &str), Failure> {
    let mut parts = pair.splitn(2, ';');
    let first = parts.next().unwrap_or("");
    let second = parts
        .next()
        .ok_or_else(|| Failure::usage("expected two permutations separated by ';'"))?;
    if second.contains(';') {
        return Err(Failure::usage("expected exactly one ';' in --pair"));
    }
    Ok((first.trim(), second.trim()))
}

fn parse_unsigned(text: &str, n: usize) -> Result<Permutation, Failure> {
    Ok(Permutation::parse_with_degree(text, n)?)
}

fn parse_signed(text: &str, n: usize) -> Result<SignedPermutation, Failure> {
    if text.trim_start().starts_with('(') {
        return Err(Failure::usage(
            "cycle form is accepted only for type A; use window form [..] for type B",
        ));
    }
    let p: SignedPermutation = text.parse()?;
    if p.degree() != n {
        return Err(Error::DegreeMismatch {
            expected: n,
            actual: p.degree(),
        }
        .into());
    }
    Ok(p)
}

fn cycle_text(p: &Permutation) -> String {
    p.cycle_decompose().to_string()
}

fn cmd_map(args: &PairArgs) -> Result<u8, Failure> {
    let (first, second) = split_pair(&args.pair)?;
    match args.kind {
        PairType::A => {
            let pi = parse_unsigned(first, args.n)?;
            let sigma = parse_unsigned(second, args.n)?;
            let class = classify_a(&pi, &sigma)?;
            let (z, x) = psi(args.n, &pi, &sigma)?;
            println!("tag: {class}");
            println!("image: ({};{})", cycle_text(&z), cycle_text(&x));
        }
        PairType::B => {
            let pi = parse_signed(first, args.n)?;
            let sigma = parse_signed(second, args.n)?;
            let class = classify_b(&pi, &sigma)?;
            let (z, x) = phi(args.n, &pi, &sigma)?;
            println!("tag: {class}");
            println!("image: ({z};{x})");
        }
    }
    Ok(0)
}

fn cmd_invert(args: &PairArgs) -> Result<u8, Failure> {
    let (first, second) = split_pair(&args.pair)?;
    match args.kind {
        PairType::A => {
            let z = parse_unsigned(first, args.n - 1)?;
            let x = parse_unsigned(second, args.n + 1)?;
            match lambda_inv(args.n, &z, &x) {
                Ok((pi, sigma)) => {
                    println!("preimage: ({};{})", cycle_text(&pi), cycle_text(&sigma));
                    Ok(0)
                }
                Err(Error::NotInImage) => {
                    println!("NOT-IN-IMAGE");
                    Ok(1)
                }
                Err(e) => Err(e.into()),
            }
        }
        PairType::B => {
            let z = parse_signed(first, args.n - 1)?;
            let x = parse_signed(second, args.n + 1)?;
            match theta(args.n, &z, &x) {
                Ok((pi, sigma)) => {
                    println!("preimage: ({pi};{sigma})");
                    Ok(0)
                }
                Err(Error::NotInImage) => {
                    println!("NOT-IN-IMAGE");
                    Ok(1)
                }
                Err(e) => Err(e.into()),
            }
        }
    }
}

fn cmd_classify(args: &PairArgs) -> Result<u8, Failure> {
    let (first, second) = split_pair(&args.pair)?;
    match args.kind {
        PairType::A => {
            let pi = parse_unsigned(first, args.n)?;
            let sigma = parse_unsigned(second, args.n)?;
            println!("{}", classify_a(&pi, &sigma)?);
        }
        PairType::B => {
            let pi = parse_signed(first, args.n)?;
            let sigma = parse_signed(second, args.n)?;
            println!("{}", classify_b(&pi, &sigma)?);
        }
    }
    Ok(0)
}

fn cmd_seq(args: &SeqArgs) -> Result<u8, Failure> {
    let family: SeqFamily = args.family.parse()?;
    if args.to < 1 {
        return Err(Failure::usage("--to must be at least 1"));
    }
    let table = seq::table(family, args.to)?;
    match args.format {
        None => {
            let line = table
                .values
                .iter()
                .enumerate()
                .map(|(off, v)| format!("{}:{}", table.start_index + off, v))
                .collect::<Vec<_>>()
                .join(" ");
            println!("{line}");
        }
        Some(SeqFormat::Csv) => print!("{}", table.to_csv()),
        Some(SeqFormat::Json) => println!("{}", table.to_json()),
    }
    Ok(0)
}

fn selected_suites(name: &str) -> Result<Vec<SuiteKind>, Failure> {
    match name {
        "examples" => Ok(vec![SuiteKind::Examples]),
        "a" => Ok(vec![SuiteKind::A]),
        "bd" => Ok(vec![SuiteKind::Bd]),
        "parity" => Ok(vec![SuiteKind::Parity]),
        "sequences" => Ok(vec![SuiteKind::Sequences]),
        "all" => Ok(vec![
            SuiteKind::Examples,
            SuiteKind::A,
            SuiteKind::Bd,
            SuiteKind::Parity,
            SuiteKind::Sequences,
        ]),
        other => Err(Failure::usage(format!(
            "unknown suite {other:?}; expected examples, a, bd, parity, sequences, or all"
        ))),
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<u8, Failure> {
    let suites = selected_suites(&args.suite)?;
    let run = || -> Vec<derange::verify::SuiteReport> {
        suites.iter().map(|&k| run_suite(k, args.max_n)).collect()
    };
    let reports = match args.jobs {
        Some(jobs) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.max(1))
                .build()
                .map_err(|e| Failure::usage(format!("could not build worker pool: {e}")))?;
            pool.install(run)
        }
        None => run(),
    };
    let mut failed = 0usize;
    let mut total = 0usize;
    for report in &reports {
        print!("{}", report.render());
        total += report.checks.len();
        failed += report.checks.iter().filter(|c| !c.passed).count();
    }
    if failed == 0 {
        println!("verify: ok ({total} checks)");
        Ok(0)
    } else {
        println!("verify: FAILED ({failed} of {total} checks)");
        Ok(1)
    }
}

fn cmd_explore(args: &ExploreArgs) -> Result<u8, Failure> {
    if args.to < 1 {
        return Err(Failure::usage("--to must be at least 1"));
    }
    let plus = seq::enumerated_table(SeqFamily::HDPlus, args.to)?;
    let minus = seq::enumerated_table(SeqFamily::HDMinus, args.to)?;
    println!(
        "EXPLORATORY: even/odd inv_D split of the even-negative derangement counts, n <= {}",
        args.to
    );
    println!("n hDPlus hDMinus");
    for n in 1..=args.to {
        println!(
            "{n} {} {}",
            plus.get(n).expect("tabulated"),
            minus.get(n).expect("tabulated")
        );
    }
    // observations on the positive windows only; small-n terms are zero
    for (table, name) in [(&plus, "hDPlus"), (&minus, "hDMinus")] {
        if args.to >= 2 {
            let window = derange::seq::SequenceTable {
                name: table.name.clone(),
                start_index: 2,
                values: (2..=args.to)
                    .map(|n| table.get(n).expect("tabulated").clone())
                    .collect(),
            };
            match seq::is_log_convex(&window) {
                Ok(v) => println!("observed {name} on 2..={}: {v} (empirical only)", args.to),
                Err(e) => println!("observed {name} on 2..={}: not scanned ({e})", args.to),
            }
        }
    }
    println!("no verdict asserted; the split's logarithmic behavior is an open exploration");
    Ok(0)
}
