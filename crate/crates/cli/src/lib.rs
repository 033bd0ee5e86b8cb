//! Command-line front end for the sc-lab automata toolkit.

pub mod dot;
pub mod format;

use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use sc_lab_core::combined::{
    cat_rev_direct, cat_star, catenation_bound, composed_bound_cat_rev, composed_bound_cat_star,
    tight_bound_cat_rev, tight_bound_cat_star, upper_bound_cat_rev, upper_bound_cat_star,
    BoundQuery, StarCase,
};
use sc_lab_core::harness::{
    sweep, write_tsv, Operation, RandomCorpus, SweepRow, SweepSource, SweepSpec,
};
use sc_lab_core::ops::{
    antimorphic_involution, catenate_nfa, map_letters, reverse_nfa, star_nfa, LetterMap,
};
use sc_lab_core::witness::{
    gen_cat_rev_witness, gen_cat_star_witness, search_witness, Constraint, SearchBudget,
    SearchMode, SearchOp, WitnessPair,
};

use crate::format::{parse, serialize, Automaton, ParseError};

pub const THREADS_VAR: &str = "SC_LAB_THREADS";

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error(transparent)]
    Core(#[from] sc_lab_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("write failed: {0}")]
    Output(#[from] std::io::Error),
}

type CliResult<T> = Result<T, CliError>;

#[derive(Parser, Debug)]
#[command(
    name = "sc-lab",
    version,
    about = "Finite automata and state complexity of combined operations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimize an automaton (NFAs are determinized first).
    Min { file: PathBuf },
    /// Check two automata for equivalence; prints a shortest distinguishing word.
    Equiv { first: PathBuf, second: PathBuf },
    /// Apply one operation to one or two automata.
    Apply {
        #[arg(long)]
        op: ApplyOp,
        #[arg(required = true, num_args = 1..=2)]
        files: Vec<PathBuf>,
        /// Letter map for hom and theta, e.g. a=b,b=a,c=c
        #[arg(long)]
        map: Option<String>,
        /// Determinize and minimize the result.
        #[arg(long)]
        minimize: bool,
    },
    /// Print a witness pair.
    Witness {
        #[arg(long)]
        family: FamilyArg,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: Option<u32>,
        /// Write the first operand here instead of stdout.
        #[arg(long, requires = "out_b")]
        out_a: Option<PathBuf>,
        #[arg(long, requires = "out_a")]
        out_b: Option<PathBuf>,
    },
    /// Verify a grid of cells and print one TSV row per pair.
    Sweep {
        #[arg(long)]
        op: OpArg,
        #[arg(long, default_value = "witness")]
        source: SourceArg,
        #[arg(long, value_parser = parse_range)]
        m: RangeInclusive<u32>,
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<u32>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random pairs per cell.
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Alphabet size (random: default 3, search: default 2).
        #[arg(long)]
        alphabet: Option<usize>,
        #[arg(long, default_value_t = 0.3)]
        density: f64,
        #[arg(long, default_value_t = 10_000_000)]
        max_candidates: u64,
    },
    /// Search for operands whose combined result has a given size.
    Search {
        #[arg(long)]
        op: SearchOpArg,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        /// Target size (defaults to the tight bound).
        #[arg(long)]
        target: Option<usize>,
        #[arg(long, default_value = "none")]
        constraint: ConstraintArg,
        #[arg(long, default_value_t = 2)]
        alphabet: usize,
        #[arg(long, default_value_t = 10_000_000)]
        max_candidates: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Sample pairs instead of enumerating them.
        #[arg(long)]
        random: bool,
    },
    /// Evaluate a closed-form bound. With --k1 and --k2 the upper bound, otherwise the tight one.
    Bound {
        #[arg(long)]
        op: BoundOpArg,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, requires = "k2")]
        k1: Option<u32>,
        #[arg(long, requires = "k1")]
        k2: Option<u32>,
        #[arg(long, default_value = "general")]
        case: CaseArg,
    },
    /// Print an automaton in Graphviz DOT.
    Dot { file: PathBuf },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ApplyOp {
    Cat,
    Star,
    Rev,
    Hom,
    Theta,
    CatStar,
    CatRev,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FamilyArg {
    CatStar,
    CatRev,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum OpArg {
    CatStar,
    CatRev,
}

impl From<OpArg> for Operation {
    fn from(op: OpArg) -> Self {
        match op {
            OpArg::CatStar => Operation::CatStar,
            OpArg::CatRev => Operation::CatRev,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum SourceArg {
    Witness,
    Random,
    Search,
}

#[allow(clippy::enum_variant_names)]
#[derive(ValueEnum, Clone, Copy, Debug)]
enum SearchOpArg {
    CatStar,
    CatRev,
    CatPhi,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ConstraintArg {
    None,
    SecondFinalsAreInitial,
    FirstUniversal,
    SecondUniversal,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum BoundOpArg {
    CatStar,
    CatRev,
    Catenation,
    ComposedCatStar,
    ComposedCatRev,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CaseArg {
    General,
    FinalIsInitial,
}

/// `a..b` (inclusive) or a single number.
fn parse_range(s: &str) -> Result<RangeInclusive<u32>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<u32>()
            .map_err(|_| format!("invalid number {t:?} in range {s:?}"))
    };
    let range = match s.split_once("..") {
        Some((lo, hi)) => num(lo)?..=num(hi)?,
        None => num(s)?..=num(s)?,
    };
    if range.is_empty() {
        return Err(format!("empty range {s:?}"));
    }
    Ok(range)
}

fn threads_from_env() -> CliResult<Option<usize>> {
    match std::env::var(THREADS_VAR) {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(t) if t > 0 => Ok(Some(t)),
            _ => Err(CliError::Usage(format!(
                "{THREADS_VAR} must be a positive integer, got {v:?}"
            ))),
        },
    }
}

fn read(path: &Path) -> CliResult<Automaton> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.into(),
        source,
    })?;
    parse(&text).map_err(|source| CliError::Parse {
        path: path.into(),
        source,
    })
}

fn read_dfa(path: &Path) -> CliResult<sc_lab_core::Dfa> {
    Ok(read(path)?.into_dfa())
}

fn parse_map(automaton: &Automaton, spec: Option<&str>, involutive: bool) -> CliResult<LetterMap> {
    let spec = spec.ok_or_else(|| CliError::Usage("this operation needs --map".into()))?;
    let pairs = spec
        .split(',')
        .map(|p| p.split_once('=').map(|(a, b)| (a.trim(), b.trim())))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| {
            CliError::Usage(format!("malformed --map {spec:?}, expected a=b,b=a,..."))
        })?;
    Ok(LetterMap::from_pairs(
        automaton.alphabet(),
        &pairs,
        involutive,
    )?)
}

fn write_pair(out: &mut dyn Write, w: &WitnessPair) -> std::io::Result<()> {
    writeln!(
        out,
        "# {} witness, m={} n={}, predicted size {}",
        w.family, w.m, w.n, w.predicted
    )?;
    writeln!(out, "# first operand")?;
    out.write_all(serialize(&Automaton::Dfa(w.a.clone())).as_bytes())?;
    writeln!(out)?;
    writeln!(out, "# second operand")?;
    out.write_all(serialize(&Automaton::Dfa(w.b.clone())).as_bytes())
}

/// Runs the CLI on `argv` (including the program name) and returns the exit
/// code: 0 on success, 1 when a verification fails, 2 on usage or input errors.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let stream: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(stream, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<i32> {
    match command {
        Command::Min { file } => {
            let min = read_dfa(&file)?.minimize();
            out.write_all(serialize(&Automaton::Dfa(min)).as_bytes())?;
            Ok(0)
        }
        Command::Equiv { first, second } => {
            let (a, b) = (read_dfa(&first)?, read_dfa(&second)?);
            match a.distinguishing_word(&b)? {
                None => {
                    writeln!(out, "equivalent")?;
                    Ok(0)
                }
                Some(word) => {
                    writeln!(out, "\"{}\"", a.alphabet().render(&word))?;
                    Ok(1)
                }
            }
        }
        Command::Apply {
            op,
            files,
            map,
            minimize,
        } => {
            let binary = matches!(op, ApplyOp::Cat | ApplyOp::CatStar | ApplyOp::CatRev);
            if files.len() != if binary { 2 } else { 1 } {
                return Err(CliError::Usage(format!(
                    "{op:?} takes {} automaton file(s)",
                    if binary { 2 } else { 1 }
                )));
            }
            let first = read(&files[0])?;
            let letter_map = match op {
                ApplyOp::Hom => Some(parse_map(&first, map.as_deref(), false)?),
                ApplyOp::Theta => Some(parse_map(&first, map.as_deref(), true)?),
                _ => None,
            };
            let a = first.into_dfa();
            let second = if binary {
                Some(read_dfa(&files[1])?)
            } else {
                None
            };
            let result = match (op, second, letter_map) {
                (ApplyOp::Cat, Some(b), _) => Automaton::Nfa(catenate_nfa(&a, &b)?),
                (ApplyOp::Star, ..) => Automaton::Nfa(star_nfa(&a)),
                (ApplyOp::Rev, ..) => Automaton::Nfa(reverse_nfa(&a)),
                (ApplyOp::Hom, _, Some(f)) => Automaton::Dfa(map_letters(&a, &f)?),
                (ApplyOp::Theta, _, Some(f)) => Automaton::Nfa(antimorphic_involution(&a, &f)?),
                (ApplyOp::CatStar, Some(b), _) => Automaton::Dfa(cat_star(&a, &b)?.0),
                (ApplyOp::CatRev, Some(b), _) => Automaton::Dfa(cat_rev_direct(&a, &b)?),
                _ => unreachable!("operand arity checked above"),
            };
            let result = if minimize {
                Automaton::Dfa(result.into_dfa().minimize())
            } else {
                result
            };
            out.write_all(serialize(&result).as_bytes())?;
            Ok(0)
        }
        Command::Witness {
            family,
            m,
            n,
            out_a,
            out_b,
        } => {
            let w = match family {
                FamilyArg::CatStar => {
                    if n.is_some_and(|n| n != 2) {
                        return Err(CliError::Usage(
                            "the cat-star family is defined for n = 2 only".into(),
                        ));
                    }
                    gen_cat_star_witness(m)?
                }
                FamilyArg::CatRev => {
                    let n =
                        n.ok_or_else(|| CliError::Usage("cat-rev witnesses need --n".into()))?;
                    gen_cat_rev_witness(m, n)?
                }
            };
            match (out_a, out_b) {
                (Some(pa), Some(pb)) => {
                    for (path, d) in [(pa, &w.a), (pb, &w.b)] {
                        fs::write(&path, serialize(&Automaton::Dfa(d.clone())))
                            .map_err(|source| CliError::Io { path, source })?;
                    }
                    writeln!(out, "{}", w.predicted)?;
                }
                _ => write_pair(out, &w)?,
            }
            Ok(0)
        }
        Command::Sweep {
            op,
            source,
            m,
            n,
            seed,
            count,
            alphabet,
            density,
            max_candidates,
        } => {
            let threads = threads_from_env()?;
            let source_spec = match source {
                SourceArg::Witness => SweepSource::Witness,
                SourceArg::Random => SweepSource::Random(RandomCorpus {
                    seed,
                    count,
                    alphabet_size: alphabet.unwrap_or(3),
                    final_density: density,
                }),
                SourceArg::Search => SweepSource::Search(SearchBudget {
                    alphabet_size: alphabet.unwrap_or(2),
                    max_candidates,
                    seed,
                    mode: SearchMode::Exhaustive,
                }),
            };
            let spec = SweepSpec {
                op: op.into(),
                m_range: m,
                n_range: n,
                source: source_spec,
            };
            let rows = sweep(&spec, threads)?;
            write_tsv(&rows, &mut *out)?;
            let expect_tight = source != SourceArg::Random;
            let mut failed = false;
            for row in &rows {
                let (cm, cn) = row.cell();
                match row {
                    SweepRow::Skipped { reason, .. } => {
                        writeln!(err, "skipped m={cm} n={cn}: {reason}")?
                    }
                    SweepRow::Report { sample, report } => {
                        for v in report.violations(expect_tight) {
                            failed = true;
                            writeln!(err, "FAIL m={cm} n={cn} sample {sample}: {v}")?;
                        }
                    }
                }
            }
            Ok(failed as i32)
        }
        Command::Search {
            op,
            m,
            n,
            target,
            constraint,
            alphabet,
            max_candidates,
            seed,
            random,
        } => {
            let (op, constraint) = (search_op(op), search_constraint(constraint));
            let target = match target {
                Some(t) => t,
                None => default_target(op, m, n, constraint)? as usize,
            };
            let mode = if random {
                SearchMode::Random
            } else {
                SearchMode::Exhaustive
            };
            let budget = SearchBudget {
                alphabet_size: alphabet,
                max_candidates,
                seed,
                mode,
            };
            let report = search_witness(op, m, n, target, constraint, &budget)?;
            writeln!(out, "# {report}")?;
            match &report.witness {
                Some(w) => {
                    write_pair(out, w)?;
                    Ok(0)
                }
                None => Ok(1),
            }
        }
        Command::Bound {
            op,
            m,
            n,
            k1,
            k2,
            case,
        } => {
            let case = match case {
                CaseArg::General => StarCase::General,
                CaseArg::FinalIsInitial => StarCase::FinalIsInitial,
            };
            let value = match (op, k1.zip(k2)) {
                (BoundOpArg::CatStar, Some((k1, k2))) => {
                    upper_bound_cat_star(&BoundQuery::cat_star(m, n, k1, k2))?
                }
                (BoundOpArg::CatStar, None) => tight_bound_cat_star(m, n, case)?,
                (BoundOpArg::CatRev, Some((k1, k2))) => {
                    upper_bound_cat_rev(&BoundQuery::cat_rev(m, n, k1, k2))?
                }
                (BoundOpArg::CatRev, None) => tight_bound_cat_rev(m, n)?,
                (BoundOpArg::Catenation, _) => catenation_bound(m, n)?,
                (BoundOpArg::ComposedCatStar, _) => composed_bound_cat_star(m, n)?,
                (BoundOpArg::ComposedCatRev, _) => composed_bound_cat_rev(m, n)?,
            };
            writeln!(out, "{value}")?;
            Ok(0)
        }
        Command::Dot { file } => {
            out.write_all(dot::to_dot(&read(&file)?).as_bytes())?;
            Ok(0)
        }
    }
}

fn search_op(op: SearchOpArg) -> SearchOp {
    match op {
        SearchOpArg::CatStar => SearchOp::CatStar,
        SearchOpArg::CatRev => SearchOp::CatRev,
        SearchOpArg::CatPhi => SearchOp::CatPhi,
    }
}

fn search_constraint(c: ConstraintArg) -> Constraint {
    match c {
        ConstraintArg::None => Constraint::None,
        ConstraintArg::SecondFinalsAreInitial => Constraint::SecondFinalsAreInitial,
        ConstraintArg::FirstUniversal => Constraint::FirstUniversal,
        ConstraintArg::SecondUniversal => Constraint::SecondUniversal,
    }
}

fn default_target(op: SearchOp, m: u32, n: u32, constraint: Constraint) -> CliResult<u64> {
    Ok(match (op, constraint) {
        (SearchOp::CatStar, Constraint::SecondFinalsAreInitial) => {
            tight_bound_cat_star(m, n, StarCase::FinalIsInitial)?
        }
        (SearchOp::CatStar, _) => tight_bound_cat_star(m, n, StarCase::General)?,
        (SearchOp::CatRev, _) => tight_bound_cat_rev(m, n)?,
        (SearchOp::CatPhi, _) => catenation_bound(m, n)?,
    })
}
