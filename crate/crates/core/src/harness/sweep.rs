use std::io::{self, Write};
use std::ops::RangeInclusive;

use rayon::prelude::*;

use crate::alphabet::Alphabet;
use crate::automata::Dfa;
use crate::combined::{tight_bound_cat_rev, tight_bound_cat_star, StarCase};
use crate::error::{Error, Result};
use crate::harness::{random_dfa, verify_pair, Operation, VerifyReport};
use crate::witness::{
    gen_cat_rev_witness, gen_cat_star_witness, search_witness, Constraint, SearchBudget, SearchOp,
};

/// Column header of the sweep TSV output.
pub const TSV_HEADER: &str =
    "op\tm\tn\tk1\tk2\tdirect_size\tminimal_size\tpredicted_upper\tpredicted_tight\tagree\telapsed_ms";

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RandomCorpus {
    pub seed: u64,
    /// Pairs per cell.
    pub count: usize,
    pub alphabet_size: usize,
    pub final_density: f64,
}

impl Default for RandomCorpus {
    fn default() -> Self {
        RandomCorpus {
            seed: 0,
            count: 100,
            alphabet_size: 3,
            final_density: 0.3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SweepSource {
    /// The explicit witness family of the operation.
    Witness,
    Random(RandomCorpus),
    /// Per cell, search for a pair reaching the tight bound.
    Search(SearchBudget),
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepSpec {
    pub op: Operation,
    pub m_range: RangeInclusive<u32>,
    pub n_range: RangeInclusive<u32>,
    pub source: SweepSource,
}

#[derive(Clone, Debug)]
pub enum SweepRow {
    Report {
        sample: usize,
        report: VerifyReport,
    },
    Skipped {
        op: Operation,
        m: u32,
        n: u32,
        reason: String,
    },
}

impl SweepRow {
    pub fn cell(&self) -> (u32, u32) {
        match self {
            SweepRow::Report { report, .. } => (report.m, report.n),
            SweepRow::Skipped { m, n, .. } => (*m, *n),
        }
    }

    pub fn report(&self) -> Option<&VerifyReport> {
        match self {
            SweepRow::Report { report, .. } => Some(report),
            SweepRow::Skipped { .. } => None,
        }
    }

    pub fn to_tsv(&self) -> String {
        let opt = |v: Option<u64>| v.map_or_else(|| "-".to_string(), |v| v.to_string());
        match self {
            SweepRow::Report { report: r, .. } => format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.op,
                r.m,
                r.n,
                r.k1,
                r.k2,
                r.direct_size,
                r.minimal_size,
                opt(r.predicted_upper),
                opt(r.predicted_tight),
                r.languages_agree,
                r.elapsed.as_millis(),
            ),
            SweepRow::Skipped { op, m, n, .. } => {
                format!("{op}\t{m}\t{n}\t-\t-\t-\t-\t-\t-\tskip\t0")
            }
        }
    }
}

/// Writes the header and one line per row.
pub fn write_tsv<W: Write>(rows: &[SweepRow], mut out: W) -> io::Result<()> {
    writeln!(out, "{TSV_HEADER}")?;
    for row in rows {
        writeln!(out, "{}", row.to_tsv())?;
    }
    Ok(())
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Seed of one random sample, derived from the sweep seed and the sample's
/// coordinates only, so results do not depend on scheduling.
pub fn cell_seed(seed: u64, m: u32, n: u32, sample: usize) -> u64 {
    [m as u64, n as u64, sample as u64]
        .into_iter()
        .fold(splitmix64(seed), |h, x| splitmix64(h ^ x))
}

enum Job {
    Pair {
        sample: usize,
        a: Dfa,
        b: Dfa,
    },
    Search {
        m: u32,
        n: u32,
        budget: SearchBudget,
    },
    Skip {
        m: u32,
        n: u32,
        reason: String,
    },
}

/// Runs every cell of the grid. Rows come back sorted by `(m, n, sample)`
/// and are identical for any thread count; `threads` caps parallelism.
pub fn sweep(spec: &SweepSpec, threads: Option<usize>) -> Result<Vec<SweepRow>> {
    if spec.m_range.is_empty() || spec.n_range.is_empty() {
        return Err(Error::Precondition("sweep ranges must be nonempty".into()));
    }
    if *spec.m_range.start() == 0 || *spec.n_range.start() == 0 {
        return Err(Error::Precondition(
            "automata need at least one state".into(),
        ));
    }
    if let SweepSource::Random(corpus) = &spec.source {
        if corpus.count == 0 {
            return Err(Error::Precondition(
                "random sweeps need at least one sample per cell".into(),
            ));
        }
        if !(1..=26).contains(&corpus.alphabet_size) {
            return Err(Error::Precondition(
                "alphabet size must be within 1..=26".into(),
            ));
        }
        if !(0.0..=1.0).contains(&corpus.final_density) {
            return Err(Error::Precondition(
                "final density must lie in [0, 1]".into(),
            ));
        }
    }

    let mut jobs = Vec::new();
    for m in spec.m_range.clone() {
        for n in spec.n_range.clone() {
            match &spec.source {
                SweepSource::Witness => {
                    let pair = match spec.op {
                        Operation::CatStar if n != 2 => {
                            Err("the cat-star family is only defined for n = 2".to_string())
                        }
                        Operation::CatStar => gen_cat_star_witness(m).map_err(|e| e.to_string()),
                        Operation::CatRev => gen_cat_rev_witness(m, n).map_err(|e| e.to_string()),
                    };
                    jobs.push(match pair {
                        Ok(w) => Job::Pair {
                            sample: 0,
                            a: w.a,
                            b: w.b,
                        },
                        Err(reason) => Job::Skip { m, n, reason },
                    });
                }
                SweepSource::Random(corpus) => {
                    let alphabet = Alphabet::letters(corpus.alphabet_size);
                    for sample in 0..corpus.count {
                        let seed = cell_seed(corpus.seed, m, n, sample);
                        let a = random_dfa(m as usize, &alphabet, corpus.final_density, seed);
                        let b = random_dfa(
                            n as usize,
                            &alphabet,
                            corpus.final_density,
                            splitmix64(seed),
                        );
                        jobs.push(Job::Pair { sample, a, b });
                    }
                }
                SweepSource::Search(budget) => jobs.push(Job::Search {
                    m,
                    n,
                    budget: *budget,
                }),
            }
        }
    }

    let op = spec.op;
    let run = |job: &Job| -> Result<SweepRow> {
        match job {
            Job::Pair { sample, a, b } => Ok(SweepRow::Report {
                sample: *sample,
                report: verify_pair(op, a, b)?,
            }),
            Job::Skip { m, n, reason } => Ok(SweepRow::Skipped {
                op,
                m: *m,
                n: *n,
                reason: reason.clone(),
            }),
            Job::Search { m, n, budget } => search_cell(op, *m, *n, budget),
        }
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.unwrap_or(0))
        .build()
        .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
    pool.install(|| jobs.par_iter().map(run).collect())
}

fn search_cell(op: Operation, m: u32, n: u32, budget: &SearchBudget) -> Result<SweepRow> {
    let (search_op, target) = match op {
        Operation::CatStar => (
            SearchOp::CatStar,
            tight_bound_cat_star(m, n, StarCase::General)?,
        ),
        Operation::CatRev => (SearchOp::CatRev, tight_bound_cat_rev(m, n)?),
    };
    let skip = |reason: String| Ok(SweepRow::Skipped { op, m, n, reason });
    let report = match search_witness(search_op, m, n, target as usize, Constraint::None, budget) {
        Ok(report) => report,
        Err(e @ (Error::InfeasibleBudget { .. } | Error::Precondition(_))) => {
            return skip(e.to_string())
        }
        Err(e) => return Err(e),
    };
    match report.witness {
        Some(w) => Ok(SweepRow::Report {
            sample: 0,
            report: verify_pair(op, &w.a, &w.b)?,
        }),
        None => skip(report.to_string()),
    }
}
