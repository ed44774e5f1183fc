//! Command-line front end.
//!
//! Six subcommands: `index` scores a tree read from an edge-list file,
//! `enumerate` streams tree censuses, `family` materializes named families,
//! `transform` applies one rewrite to a tree, `verify` runs one `(n, k)`
//! minimum-verification, and `lemmas` runs an inequality suite. Data goes to
//! standard output (or `--out FILE`) as CSV or text; diagnostics go to
//! standard error. Exit codes: 0 success, 1 domain error, 2 usage error.
//!
//! Identical invocations produce byte-identical output; `--threads` changes
//! only how the sweeps are scheduled, never the result.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::enumerate::EnumSpec;
use crate::families::FamilyDescriptor;
use crate::indices::{tree_index, IndexKind};
use crate::io::{format_tree, parse_tree};
use crate::transforms::{contract_edge, replace_with_3regular_default, split_vertex, SplitSpec};
use crate::tree::Tree;
use crate::verify::{
    lemma_suite, min_abs_bruteforce, verify_theorem_with_tolerance, LemmaId, VerificationReport,
    VerifyError,
};

/// Default upper vertex bound for `lemmas` sweeps.
const DEFAULT_LEMMA_MAX_N: usize = 10;

#[derive(Parser)]
#[command(
    name = "abstree",
    version,
    about = "Degree-based topological indices of trees and exhaustive extremal verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write data output to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,

    /// Tolerance for value comparisons in reports.
    #[arg(long, global = true, default_value_t = 1e-9, value_name = "REAL")]
    tolerance: f64,

    /// Worker threads for sweeps (default: all cores). Output is identical
    /// for every thread count.
    #[arg(long, global = true, value_name = "INT")]
    threads: Option<usize>,

    /// Reserved. All computation is deterministic; the flag is accepted and
    /// ignored.
    #[arg(long, global = true, value_name = "INT")]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one topological index of a tree.
    Index {
        /// Which index to compute.
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Exponent for the general sum-connectivity index (required iff
        /// `--kind gensumconn`).
        #[arg(long, value_name = "REAL", allow_negative_numbers = true)]
        alpha: Option<f64>,
        /// Edge-list file to read.
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    /// Enumerate non-isomorphic trees.
    Enumerate {
        /// Vertex count.
        #[arg(long)]
        n: usize,
        /// Keep only trees with exactly K leaves.
        #[arg(long)]
        k: Option<usize>,
        /// Keep only trees with maximum degree at most 4.
        #[arg(long)]
        chemical: bool,
        /// Print only the number of trees.
        #[arg(long)]
        count_only: bool,
    },
    /// Emit the members of a named tree family.
    Family {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Vertex count (path, star, tstar).
        #[arg(long)]
        n: Option<usize>,
        /// Leaf count (k3regular, tstar).
        #[arg(long)]
        k: Option<usize>,
        /// Comma-separated leg lengths (spider).
        #[arg(long, value_name = "CSV-INTS")]
        legs: Option<String>,
        /// Print only the number of members.
        #[arg(long)]
        count_only: bool,
    },
    /// Apply one tree transformation and print the result.
    Transform {
        /// Which transformation to apply.
        #[arg(long, value_enum)]
        kind: TransformArg,
        /// Edge-list file to read.
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        /// Integer operands: `u,v` for contract (the edge); `v,a,b,...` for
        /// split (vertex, then the neighbors kept on the original label);
        /// `v` for replace3.
        #[arg(long, value_name = "CSV-INTS")]
        legs: String,
    },
    /// Verify the closed-form minimum for one (n, k) pair by brute force.
    Verify {
        /// Vertex count.
        #[arg(long)]
        n: usize,
        /// Leaf count.
        #[arg(long)]
        k: usize,
        /// Restrict the class to maximum degree 4.
        #[arg(long)]
        chemical: bool,
    },
    /// Run one inequality suite over all trees up to a vertex bound.
    Lemmas {
        /// Suite identifier.
        #[arg(long, value_enum)]
        lemma: LemmaArg,
        /// Largest vertex count to sweep (default 10; suite 2.1 is a fixed
        /// grid and ignores this).
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Abs,
    Randic,
    Sumconn,
    Gensumconn,
    Harmonic,
    Abc,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Path,
    Star,
    Spider,
    #[value(name = "k3regular")]
    K3Regular,
    Tstar,
}

#[derive(Clone, Copy, ValueEnum)]
enum TransformArg {
    Contract,
    Split,
    Replace3,
}

#[derive(Clone, Copy, ValueEnum)]
enum LemmaArg {
    #[value(name = "2.1")]
    GapMonotonicity,
    #[value(name = "2.2")]
    ContractReattach,
    #[value(name = "2.3")]
    PendentShift,
    #[value(name = "2.4")]
    DegreeFourReplacement,
    #[value(name = "2.5")]
    HighDegreeReplacement,
    #[value(name = "2.6")]
    E2CountBound,
}

impl From<LemmaArg> for LemmaId {
    fn from(arg: LemmaArg) -> LemmaId {
        match arg {
            LemmaArg::GapMonotonicity => LemmaId::GapMonotonicity,
            LemmaArg::ContractReattach => LemmaId::ContractReattach,
            LemmaArg::PendentShift => LemmaId::PendentShift,
            LemmaArg::DegreeFourReplacement => LemmaId::DegreeFourReplacement,
            LemmaArg::HighDegreeReplacement => LemmaId::HighDegreeReplacement,
            LemmaArg::E2CountBound => LemmaId::E2CountBound,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Text,
}

enum CliError {
    Usage(String),
    Domain(String),
    /// The consumer closed the output stream; treated as success.
    BrokenPipe,
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> CliError {
        if err.kind() == std::io::ErrorKind::BrokenPipe {
            CliError::BrokenPipe
        } else {
            CliError::Domain(format!("output failed: {err}"))
        }
    }
}

fn usage(message: impl Into<String>) -> CliError {
    CliError::Usage(message.into())
}

fn domain(err: impl std::fmt::Display) -> CliError {
    CliError::Domain(err.to_string())
}

/// Parses `argv` and runs the selected command. Returns the process exit
/// code: 0 on success, 1 on domain errors, 2 on usage errors.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    let outcome = match cli.threads {
        Some(0) => Err(usage("--threads must be at least 1")),
        Some(threads) => match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
            Ok(pool) => pool.install(|| execute(&cli)),
            Err(err) => Err(CliError::Domain(format!("cannot build thread pool: {err}"))),
        },
        None => execute(&cli),
    };
    match outcome {
        Ok(()) | Err(CliError::BrokenPipe) => 0,
        Err(CliError::Usage(message)) => {
            eprintln!("usage error: {message}");
            2
        }
        Err(CliError::Domain(message)) => {
            eprintln!("error: {message}");
            1
        }
    }
}

fn execute(cli: &Cli) -> Result<(), CliError> {
    if !cli.tolerance.is_finite() || cli.tolerance < 0.0 {
        return Err(usage("--tolerance must be a nonnegative finite real"));
    }
    let mut sink: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(
            fs::File::create(path)
                .map_err(|e| CliError::Domain(format!("cannot create {}: {e}", path.display())))?,
        ),
        None => Box::new(std::io::stdout().lock()),
    };
    match &cli.command {
        Command::Index { kind, alpha, input } => {
            let kind = resolve_kind(*kind, *alpha)?;
            let tree = read_tree(input)?;
            let value = tree_index(&tree, kind).value;
            match cli.format {
                FormatArg::Csv => {
                    writeln!(sink, "kind,value")?;
                    writeln!(sink, "{},{:.9}", kind.label(), value)?;
                }
                FormatArg::Text => {
                    writeln!(sink, "{} = {:.9}", kind.label(), value)?;
                }
            }
        }
        Command::Enumerate {
            n,
            k,
            chemical,
            count_only,
        } => {
            let spec = EnumSpec {
                n: *n,
                leaf_count: *k,
                max_degree: chemical.then_some(4),
            };
            let stream = spec.trees().map_err(domain)?;
            if *count_only {
                writeln!(sink, "{}", stream.count())?;
            } else {
                write_blocks(&mut sink, stream)?;
            }
        }
        Command::Family {
            family,
            n,
            k,
            legs,
            count_only,
        } => {
            let descriptor = resolve_family(*family, *n, *k, legs.as_deref())?;
            let members = descriptor.build().map_err(domain)?;
            if *count_only {
                writeln!(sink, "{}", members.len())?;
            } else {
                write_blocks(&mut sink, members.into_iter())?;
            }
        }
        Command::Transform { kind, input, legs } => {
            let tree = read_tree(input)?;
            let operands = parse_csv_ints(legs)?;
            let result = apply_transform(*kind, &tree, &operands)?;
            write!(sink, "{}", format_tree(&result))?;
        }
        Command::Verify { n, k, chemical } => {
            run_verify(&mut sink, cli, *n, *k, *chemical)?;
        }
        Command::Lemmas { lemma, n } => {
            let max_n = n.unwrap_or(DEFAULT_LEMMA_MAX_N);
            let records = lemma_suite((*lemma).into(), 1..=max_n).map_err(domain)?;
            match cli.format {
                FormatArg::Csv => {
                    writeln!(sink, "lemma,instance,lhs,rhs,outcome")?;
                    for r in &records {
                        let outcome = if r.holds { "pass" } else { "fail" };
                        writeln!(
                            sink,
                            "{},{},{:.9},{:.9},{outcome}",
                            r.lemma, r.instance, r.lhs, r.rhs
                        )?;
                    }
                }
                FormatArg::Text => {
                    let failures = records.iter().filter(|r| !r.holds).count();
                    for r in &records {
                        let relation = if r.strict { ">" } else { ">=" };
                        let outcome = if r.holds { "ok" } else { "VIOLATED" };
                        writeln!(
                            sink,
                            "{} {}: {:.9} {relation} {:.9} {outcome}",
                            r.lemma, r.instance, r.lhs, r.rhs
                        )?;
                    }
                    writeln!(
                        sink,
                        "checked {} instances, {failures} failures",
                        records.len()
                    )?;
                }
            }
        }
    }
    Ok(())
}

fn read_tree(path: &PathBuf) -> Result<Tree, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Domain(format!("cannot read {}: {e}", path.display())))?;
    parse_tree(&text).map_err(domain)
}

fn write_blocks(
    sink: &mut Box<dyn Write>,
    trees: impl Iterator<Item = Tree>,
) -> Result<(), CliError> {
    let mut first = true;
    for tree in trees {
        if !first {
            writeln!(sink)?;
        }
        first = false;
        write!(sink, "{}", format_tree(&tree))?;
    }
    Ok(())
}

fn resolve_kind(kind: KindArg, alpha: Option<f64>) -> Result<IndexKind, CliError> {
    match (kind, alpha) {
        (KindArg::Gensumconn, Some(a)) if a.is_finite() => Ok(IndexKind::GeneralSumConnectivity(a)),
        (KindArg::Gensumconn, Some(_)) => Err(usage("--alpha must be finite")),
        (KindArg::Gensumconn, None) => Err(usage("--kind gensumconn requires --alpha")),
        (_, Some(_)) => Err(usage("--alpha applies only to --kind gensumconn")),
        (KindArg::Abs, None) => Ok(IndexKind::Abs),
        (KindArg::Randic, None) => Ok(IndexKind::Randic),
        (KindArg::Sumconn, None) => Ok(IndexKind::SumConnectivity),
        (KindArg::Harmonic, None) => Ok(IndexKind::Harmonic),
        (KindArg::Abc, None) => Ok(IndexKind::Abc),
    }
}

fn resolve_family(
    family: FamilyArg,
    n: Option<usize>,
    k: Option<usize>,
    legs: Option<&str>,
) -> Result<FamilyDescriptor, CliError> {
    let need = |value: Option<usize>, flag: &str, family: &str| {
        value.ok_or_else(|| usage(format!("--family {family} requires {flag}")))
    };
    match family {
        FamilyArg::Path => Ok(FamilyDescriptor::Path {
            n: need(n, "--n", "path")?,
        }),
        FamilyArg::Star => Ok(FamilyDescriptor::Star {
            n: need(n, "--n", "star")?,
        }),
        FamilyArg::Spider => {
            let legs = legs.ok_or_else(|| usage("--family spider requires --legs"))?;
            Ok(FamilyDescriptor::Spider {
                legs: parse_csv_ints(legs)?,
            })
        }
        FamilyArg::K3Regular => Ok(FamilyDescriptor::KThreeRegular {
            k: need(k, "--k", "k3regular")?,
        }),
        FamilyArg::Tstar => Ok(FamilyDescriptor::TStar {
            n: need(n, "--n", "tstar")?,
            k: need(k, "--k", "tstar")?,
        }),
    }
}

fn parse_csv_ints(text: &str) -> Result<Vec<usize>, CliError> {
    text.split(',')
        .map(|token| {
            token.trim().parse::<usize>().map_err(|_| {
                usage(format!(
                    "--legs expects comma-separated integers, got `{token}`"
                ))
            })
        })
        .collect()
}

fn apply_transform(kind: TransformArg, tree: &Tree, operands: &[usize]) -> Result<Tree, CliError> {
    match kind {
        TransformArg::Contract => {
            let [u, v] = operands else {
                return Err(usage("--kind contract needs --legs u,v"));
            };
            contract_edge(tree, (*u, *v))
                .map(|(t, _)| t)
                .map_err(domain)
        }
        TransformArg::Split => {
            if operands.len() < 2 {
                return Err(usage("--kind split needs --legs v,a[,b...]"));
            }
            let spec = SplitSpec::from_left(tree, operands[0], operands[1..].iter().copied())
                .map_err(domain)?;
            split_vertex(tree, &spec).map_err(domain)
        }
        TransformArg::Replace3 => {
            let [v] = operands else {
                return Err(usage("--kind replace3 needs --legs v"));
            };
            replace_with_3regular_default(tree, *v).map_err(domain)
        }
    }
}

fn run_verify(
    sink: &mut Box<dyn Write>,
    cli: &Cli,
    n: usize,
    k: usize,
    chemical: bool,
) -> Result<(), CliError> {
    match verify_theorem_with_tolerance(n, k, chemical, cli.tolerance) {
        Ok(report) => write_report(sink, cli.format, &report),
        // outside the closed-form range the minimum is still computed and
        // flagged, exposing the boundary empirically
        Err(VerifyError::OutOfRange(_)) => {
            let (minimum, _) = min_abs_bruteforce(n, k, chemical).map_err(domain)?;
            match cli.format {
                FormatArg::Csv => {
                    writeln!(sink, "n,k,formula,bruteforce,verdict")?;
                    writeln!(sink, "{n},{k},,{minimum:.9},formula-not-applicable")?;
                }
                FormatArg::Text => {
                    writeln!(sink, "(n, k) = ({n}, {k}){}", chemical_tag(chemical))?;
                    writeln!(sink, "brute-force minimum: {minimum:.9}")?;
                    writeln!(
                        sink,
                        "closed form not applicable: requires 3 <= k <= floor((n+2)/3)"
                    )?;
                }
            }
            Ok(())
        }
        Err(err) => Err(domain(err)),
    }
}

fn chemical_tag(chemical: bool) -> &'static str {
    if chemical {
        "  [max degree 4]"
    } else {
        ""
    }
}

fn write_report(
    sink: &mut Box<dyn Write>,
    format: FormatArg,
    report: &VerificationReport,
) -> Result<(), CliError> {
    match format {
        FormatArg::Csv => {
            writeln!(sink, "n,k,formula,bruteforce,verdict")?;
            writeln!(
                sink,
                "{},{},{:.9},{:.9},{}",
                report.n, report.k, report.formula_value, report.bruteforce_min, report.verdict
            )?;
        }
        FormatArg::Text => {
            writeln!(
                sink,
                "(n, k) = ({}, {}){}",
                report.n,
                report.k,
                chemical_tag(report.chemical)
            )?;
            writeln!(sink, "closed-form minimum:  {:.9}", report.formula_value)?;
            writeln!(sink, "brute-force minimum:  {:.9}", report.bruteforce_min)?;
            writeln!(
                sink,
                "minimizers: {} tree(s); expected family: {} tree(s)",
                report.argmin_codes.len(),
                report.tstar_codes.len()
            )?;
            match &report.verdict {
                crate::verify::Verdict::Pass => writeln!(sink, "verdict: pass")?,
                crate::verify::Verdict::Fail { reason } => {
                    writeln!(sink, "verdict: fail ({reason})")?
                }
            }
        }
    }
    Ok(())
}
