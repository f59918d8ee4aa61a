//! Command-line front end: documents in, reports out.
//!
//! Exit statuses: 0 all pass, 1 some fail, 2 inconclusive, 3 usage or
//! parse error.

mod document;
mod print;
mod report;

use std::path::PathBuf;
use std::sync::Arc;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

pub use document::{parse_document, parse_file, DiagramDecl, DiagramNames, DocumentError, Kind, SourceDocument};
pub use print::{print_algebra, print_document, print_hom, print_oset, print_theory};
pub use report::{Entry, Report};

use crate::algebra::{comma_algebra, kernel_comma_with, Algebra, AlgebraError, Side};
use crate::checks::{
    check_degenerate, check_maltsev, check_noncoherent_ideals, check_ord_maltsev, check_permutability, check_proto,
    check_ss5l_instance, CheckResult, Counterexample,
};
use crate::clone::SearchBudget;
use crate::demo::run_demo;
use crate::relations::{compose, enumerate_congruences, generate_relation, ClosureMode, DEFAULT_CAP};

pub const USAGE_ERROR: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "ordalg", version, about = "Checks on finite ordered algebras")]
struct Cli {
    /// Definition document to load; repeatable.
    #[arg(long = "file", short = 'f', global = true, value_name = "PATH")]
    files: Vec<String>,
    /// Also write the JSON mirror of the report to PATH.
    #[arg(long, global = true, value_name = "PATH")]
    report: Option<PathBuf>,
    #[arg(long, global = true, hide = true)]
    seed: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse and validate documents.
    Validate { paths: Vec<String> },
    /// Comma object of two homomorphisms with a common codomain.
    Comma { f: String, g: String },
    /// Kernel comma of a homomorphism into a pointed algebra.
    Kernel {
        f: String,
        #[arg(long)]
        colax: bool,
    },
    /// Enumerate congruences.
    Congruences {
        alg: String,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
    },
    /// Generate R and S from seed pairs `a:b,c:d` and compose them.
    Compose {
        alg: String,
        r: String,
        s: String,
        #[arg(long, value_enum, default_value_t = Mode::Congruence)]
        mode: Mode,
    },
    #[command(subcommand)]
    Check(Check),
    /// Run the acceptance corpus.
    Demo,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Subalgebra,
    Ideal,
    Congruence,
}

impl From<Mode> for ClosureMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Subalgebra => ClosureMode::Subalgebra,
            Mode::Ideal => ClosureMode::Ideal,
            Mode::Congruence => ClosureMode::Congruence,
        }
    }
}

#[derive(Debug, clap::Args)]
struct Budget {
    #[arg(long)]
    depth: Option<usize>,
    #[arg(long)]
    max_clone_size: Option<usize>,
    /// Seconds.
    #[arg(long)]
    time_limit: Option<u64>,
}

impl Budget {
    fn get(&self) -> SearchBudget {
        let mut b = SearchBudget::default();
        if let Some(d) = self.depth {
            b.max_term_depth = d;
        }
        if let Some(s) = self.max_clone_size {
            b.max_clone_size = s;
        }
        if let Some(t) = self.time_limit {
            b.time_limit = Duration::from_secs(t);
        }
        b
    }
}

#[derive(Debug, Subcommand)]
enum Check {
    /// Search for a Mal'tsev operation.
    Maltsev {
        alg: String,
        #[arg(long)]
        exhaustive: bool,
        #[command(flatten)]
        budget: Budget,
    },
    /// Search for (co)lax witnesses alpha_1..alpha_n, theta.
    Proto {
        alg: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        colax: bool,
        #[command(flatten)]
        budget: Budget,
    },
    /// Zig-zag property of every ideal ALG -> ALG2.
    OrdMaltsev {
        alg: String,
        alg2: Option<String>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
    },
    /// Pairwise permutability of congruences.
    Permutability {
        alg: String,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
    },
    /// Whether the carrier order is symmetric.
    Degenerate { alg: String },
    /// Short five lemma instance.
    Ss5l {
        diagram: String,
        #[arg(long)]
        colax: bool,
    },
    /// Ideal argument for a truncated-subtraction algebra.
    Noncoherent {
        alg: String,
        alg2: Option<String>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
    },
}

/// What a command printed and how it ended.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub status: i32,
    pub report: Option<Report>,
}

impl Outcome {
    fn error(msg: impl std::fmt::Display) -> Outcome {
        Outcome { stdout: String::new(), stderr: format!("error: {msg}\n"), status: USAGE_ERROR, report: None }
    }
}

/// Parses `args` (program name first), runs the command and writes the
/// JSON mirror when `--report` is given.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let status = if e.use_stderr() { USAGE_ERROR } else { 0 };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: text, status, report: None }
            } else {
                Outcome { stdout: text, stderr: String::new(), status, report: None }
            };
        }
    };
    if cli.seed.is_some() {
        return Outcome::error("--seed is not accepted: every algorithm is deterministic");
    }
    let command: Vec<String> = std::iter::once("ordalg".to_string())
        .chain(args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()))
        .collect();
    let report = match execute(&cli, command) {
        Ok(r) => r,
        Err(msg) => return Outcome::error(msg),
    };
    if let Some(path) = &cli.report {
        if let Err(e) = std::fs::write(path, report.to_json()) {
            return Outcome::error(format!("{}: {e}", path.display()));
        }
    }
    Outcome { stdout: report.to_text(), stderr: String::new(), status: report.exit_code(), report: Some(report) }
}

fn load(files: &[String]) -> Result<SourceDocument, String> {
    let mut doc = SourceDocument::default();
    for f in files {
        doc.merge(parse_file(f)?).map_err(|e| format!("{f}: {e}"))?;
    }
    Ok(doc)
}

fn algebra<'a>(doc: &'a SourceDocument, name: &str) -> Result<&'a Arc<Algebra>, String> {
    doc.algebra(name).ok_or_else(|| format!("no algebra named `{name}` (load documents with --file)"))
}

fn hom<'a>(doc: &'a SourceDocument, name: &str) -> Result<&'a crate::algebra::Homomorphism, String> {
    doc.hom(name).ok_or_else(|| format!("no hom named `{name}` (load documents with --file)"))
}

/// Parses `a:b,c:d` into element index pairs.
fn seeds(a: &Algebra, text: &str) -> Result<Vec<(usize, usize)>, String> {
    let el = |s: &str| a.carrier().index_of(s.trim()).ok_or_else(|| format!("`{s}` is not an element"));
    text.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            let (x, y) = p.split_once(':').ok_or_else(|| format!("seed `{p}` is not of the form a:b"))?;
            Ok((el(x)?, el(y)?))
        })
        .collect()
}

fn names(a: &Algebra, items: impl IntoIterator<Item = usize>) -> Vec<String> {
    items.into_iter().map(|x| a.name(x).to_string()).collect()
}

fn execute(cli: &Cli, command: Vec<String>) -> Result<Report, String> {
    let mut report = Report::new(command.clone());
    if let Command::Demo = cli.command {
        return Ok(Report::from_demo(command, &run_demo()));
    }
    if let Command::Validate { paths } = &cli.command {
        for f in cli.files.iter().chain(paths) {
            report.push(f.clone(), validate_file(f)?);
        }
        if report.results.is_empty() {
            return Err("validate needs at least one file".into());
        }
        return Ok(report);
    }
    let doc = load(&cli.files)?;
    match &cli.command {
        Command::Comma { f, g } => {
            let (f, g) = (hom(&doc, f)?, hom(&doc, g)?);
            let mut r = CheckResult::new("comma");
            match comma_algebra(f, g) {
                Ok(c) => {
                    r.note("elements", json!(c.algebra.carrier().names()));
                    let le = c.algebra.carrier().strict_pairs();
                    r.note("le", json!(le.iter().map(|&(x, y)| format!("{} <= {}", c.algebra.name(x), c.algebra.name(y))).collect::<Vec<_>>()));
                }
                Err(AlgebraError::NotClosed { op, tuple, value }) => r.fail(Counterexample::new(
                    format!("pairs with f(a) <= g(c) are not closed under `{op}`"),
                    vec![("op", op), ("tuple", tuple), ("value", value)],
                )),
                Err(e) => return Err(e.to_string()),
            }
            report.push(command[command.len() - 2..].join(" "), r);
        }
        Command::Kernel { f, colax } => {
            let h = hom(&doc, f)?;
            let side = if *colax { Side::Colax } else { Side::Lax };
            let k = kernel_comma_with(h, side).map_err(|e| e.to_string())?;
            let mut r = CheckResult::new("kernel");
            r.note("side", json!(side));
            r.note("members", json!(names(h.dom(), k.members.iter().copied())));
            report.push(f.clone(), r);
        }
        Command::Congruences { alg, cap } => {
            let a = algebra(&doc, alg)?;
            let e = enumerate_congruences(a, *cap);
            let mut r = CheckResult::new("congruences");
            r.note("count", e.relations.len());
            r.note("method", json!(e.method));
            r.note("exact", e.exact);
            r.note("congruences", json!(e.relations.iter().map(|x| x.pairs_text()).collect::<Vec<_>>()));
            report.push(alg.clone(), r);
        }
        Command::Compose { alg, r: rs, s: ss, mode } => {
            let a = algebra(&doc, alg)?;
            let gen = |text: &str| {
                let seeds = seeds(a, text)?;
                generate_relation(a.clone(), a.clone(), &seeds, (*mode).into()).map_err(|e| e.to_string())
            };
            let (rr, sr) = (gen(rs)?, gen(ss)?);
            let c = compose(&rr, &sr).map_err(|e| e.to_string())?;
            let mut r = CheckResult::new("compose");
            r.note("r", rr.pairs_text());
            r.note("s", sr.pairs_text());
            r.note("set_composite", json!(c.set_composite.iter().map(|&p| c.relation.pair_name(p)).collect::<Vec<_>>()));
            r.note("composite", c.relation.pairs_text());
            r.note("added_by_operations", c.added_by_operations);
            r.note("added_by_ideal_closure", c.added_by_ideal_closure);
            report.push(alg.clone(), r);
        }
        Command::Check(check) => run_check(&doc, check, &mut report)?,
        Command::Validate { .. } | Command::Demo => unreachable!(),
    }
    Ok(report)
}

fn run_check(doc: &SourceDocument, check: &Check, report: &mut Report) -> Result<(), String> {
    match check {
        Check::Maltsev { alg, exhaustive, budget } => {
            report.push(alg.clone(), check_maltsev(algebra(doc, alg)?, &budget.get(), *exhaustive));
        }
        Check::Proto { alg, n, colax, budget } => {
            let side = if *colax { Side::Colax } else { Side::Lax };
            let r = check_proto(algebra(doc, alg)?, *n, &budget.get(), side).map_err(|e| e.to_string())?;
            report.push(alg.clone(), r);
        }
        Check::OrdMaltsev { alg, alg2, cap } => {
            let a = algebra(doc, alg)?;
            let b = match alg2 {
                Some(n) => algebra(doc, n)?,
                None => a,
            };
            let subject = format!("{alg} -> {}", alg2.as_deref().unwrap_or(alg));
            report.push(subject, check_ord_maltsev(a, b, *cap).map_err(|e| e.to_string())?);
        }
        Check::Permutability { alg, cap } => report.push(alg.clone(), check_permutability(algebra(doc, alg)?, *cap)),
        Check::Degenerate { alg } => report.push(alg.clone(), check_degenerate(algebra(doc, alg)?)),
        Check::Ss5l { diagram, colax } => {
            let d = doc.diagram(diagram).ok_or_else(|| format!("no diagram named `{diagram}`"))?;
            let side = if *colax { Side::Colax } else { Side::Lax };
            let r = check_ss5l_instance(&d.diagram, side).map_err(|e| format!("diagram `{diagram}`: {e}"))?;
            report.push(diagram.clone(), r);
        }
        Check::Noncoherent { alg, alg2, cap } => {
            let a = algebra(doc, alg)?;
            let b = match alg2 {
                Some(n) => algebra(doc, n)?,
                None => a,
            };
            let r = check_noncoherent_ideals(a, b, *cap)
                .map_err(|e| format!("`{alg}` does not have the truncated-subtraction shape: {e}"))?;
            report.push(alg.clone(), r);
        }
    }
    Ok(())
}

/// Syntax and resolution errors are usage errors; invalid objects are a
/// failed validation.
fn validate_file(path: &str) -> Result<CheckResult, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    let mut r = CheckResult::new("validate");
    match parse_document(&text) {
        Ok(doc) => {
            let kinds = [(Kind::Oset, "osets"), (Kind::Theory, "theories"), (Kind::Algebra, "algebras"), (Kind::Hom, "homs"), (Kind::Diagram, "diagrams")];
            for (kind, key) in kinds {
                r.note(key, doc.order.iter().filter(|(k, _)| *k == kind).count());
            }
        }
        Err(DocumentError::Invalid { pos, kind, name, problems }) => {
            for p in problems {
                r.fail(Counterexample::new(
                    format!("{kind} `{name}`: {p}"),
                    vec![("declaration", name.clone()), ("at", format!("{path}:{pos}"))],
                ));
            }
        }
        Err(e) => return Err(format!("{path}:{e}")),
    }
    Ok(r)
}
