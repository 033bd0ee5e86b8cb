//! Random instances, per-pair verification against the naive pipelines and
//! the closed-form bounds, and grid sweeps.

pub mod oracle;
mod sweep;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alphabet::Alphabet;
use crate::automata::Dfa;
use crate::combined::{
    cat_rev_direct, cat_star, catenation_bound, tight_bound_cat_rev, tight_bound_cat_star,
    upper_bound_cat_rev, upper_bound_cat_star, BoundQuery, CatStarRoute, StarCase,
};
use crate::error::{Error, Result};

pub use sweep::{
    cell_seed, sweep, write_tsv, RandomCorpus, SweepRow, SweepSource, SweepSpec, TSV_HEADER,
};

/// The combined operations the harness verifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Operation {
    CatStar,
    CatRev,
}

impl fmt::Display for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Operation::CatStar => "cat-star",
            Operation::CatRev => "cat-rev",
        })
    }
}

impl FromStr for Operation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cat-star" => Ok(Operation::CatStar),
            "cat-rev" => Ok(Operation::CatRev),
            other => Err(Error::Precondition(format!("unknown operation {other:?}"))),
        }
    }
}

/// Uniformly random complete DFA with initial state 0.
///
/// Each state is final with probability `final_density`; if that leaves no
/// final state and the density is positive, the finals are drawn once more.
pub fn random_dfa(states: usize, alphabet: &Alphabet, final_density: f64, seed: u64) -> Dfa {
    assert!(states >= 1, "a dfa needs at least one state");
    assert!(
        (0.0..=1.0).contains(&final_density),
        "final density must lie in [0, 1]"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let table = (0..states * alphabet.len())
        .map(|_| rng.gen_range(0..states))
        .collect();
    let draw = |rng: &mut ChaCha8Rng| {
        (0..states)
            .filter(|_| rng.gen_bool(final_density))
            .collect::<Vec<_>>()
    };
    let mut finals = draw(&mut rng);
    if finals.is_empty() && final_density > 0.0 {
        finals = draw(&mut rng);
    }
    Dfa::from_table(alphabet.clone(), states, 0, finals, table).expect("random table is in range")
}

/// Outcome of running one operand pair through the direct construction and
/// the naive pipeline.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub op: Operation,
    pub m: u32,
    pub n: u32,
    pub k1: u32,
    pub k2: u32,
    /// Which construction produced `direct_size` (catenation-with-star only).
    pub route: Option<CatStarRoute>,
    /// Reachable states of the direct construction.
    pub direct_size: usize,
    /// Direct construction after minimization.
    pub minimal_size: usize,
    /// Naive pipeline after minimization.
    pub oracle_size: usize,
    /// Upper bound for these parameters; `None` outside the formula's range.
    pub predicted_upper: Option<u64>,
    /// Worst case over all operands of sizes `m`, `n`.
    pub predicted_tight: Option<u64>,
    pub languages_agree: bool,
    pub elapsed: Duration,
}

impl VerifyReport {
    /// Every way this report contradicts a correct construction or a bound.
    /// With `expect_tight` the minimal size must also equal the tight bound,
    /// which is what witness pairs promise.
    pub fn violations(&self, expect_tight: bool) -> Vec<String> {
        let mut out = Vec::new();
        if !self.languages_agree {
            out.push(
                "direct construction and naive pipeline accept different languages".to_string(),
            );
        }
        if self.minimal_size != self.oracle_size {
            out.push(format!(
                "minimal size {} != oracle size {}",
                self.minimal_size, self.oracle_size
            ));
        }
        if self.minimal_size > self.direct_size {
            out.push(format!(
                "minimal size {} > direct size {}",
                self.minimal_size, self.direct_size
            ));
        }
        if let Some(upper) = self.predicted_upper {
            if self.direct_size as u64 > upper {
                out.push(format!(
                    "direct size {} exceeds upper bound {upper}",
                    self.direct_size
                ));
            }
        }
        if let Some(tight) = self.predicted_tight {
            if self.minimal_size as u64 > tight {
                out.push(format!(
                    "minimal size {} exceeds worst case {tight}",
                    self.minimal_size
                ));
            }
            if expect_tight && self.minimal_size as u64 != tight {
                out.push(format!(
                    "minimal size {} != predicted {tight}",
                    self.minimal_size
                ));
            }
        } else if expect_tight {
            out.push("no tight bound to compare against".to_string());
        }
        out
    }

    /// Equality of everything except the elapsed time.
    pub fn same_outcome(&self, other: &VerifyReport) -> bool {
        let strip = |r: &VerifyReport| {
            (
                r.op,
                r.m,
                r.n,
                r.k1,
                r.k2,
                r.route,
                r.direct_size,
                r.minimal_size,
                r.oracle_size,
                r.predicted_upper,
                r.predicted_tight,
                r.languages_agree,
            )
        };
        strip(self) == strip(other)
    }
}

/// Runs the direct construction and the naive pipeline on one pair.
pub fn verify_pair(op: Operation, first: &Dfa, second: &Dfa) -> Result<VerifyReport> {
    if first.alphabet() != second.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let started = Instant::now();
    let (m, n) = (first.state_count() as u32, second.state_count() as u32);
    let (direct, route, oracle, query, predicted_upper, predicted_tight) = match op {
        Operation::CatStar => {
            let query = BoundQuery::of_cat_star(first, second);
            let (direct, route) = cat_star(first, second)?;
            let upper = match route {
                CatStarRoute::Direct => Some(upper_bound_cat_star(&query)?),
                CatStarRoute::Catenation => Some(catenation_bound(m, n)?),
                CatStarRoute::FirstOperand => Some(m as u64),
            };
            let tight = if m == 1 {
                Some(1)
            } else if query.k2 >= 1 {
                Some(tight_bound_cat_star(m, n, StarCase::General)?)
            } else if second.final_count() == 1 {
                Some(tight_bound_cat_star(m, n, StarCase::FinalIsInitial)?)
            } else {
                None
            };
            (
                direct,
                Some(route),
                oracle::naive_cat_star(first, second)?,
                query,
                upper,
                tight,
            )
        }
        Operation::CatRev => {
            let query = BoundQuery::of_cat_rev(first, second);
            let upper = if query.k1 >= 1 && query.k2 >= 1 {
                Some(upper_bound_cat_rev(&query)?)
            } else {
                None
            };
            let direct = cat_rev_direct(first, second)?;
            let tight = Some(tight_bound_cat_rev(m, n)?);
            (
                direct,
                None,
                oracle::naive_cat_rev(first, second)?,
                query,
                upper,
                tight,
            )
        }
    };
    let minimal = direct.minimize();
    let languages_agree = direct.is_equivalent(&oracle)?;
    Ok(VerifyReport {
        op,
        m,
        n,
        k1: query.k1,
        k2: query.k2,
        route,
        direct_size: direct.state_count(),
        minimal_size: minimal.state_count(),
        oracle_size: oracle.state_count(),
        predicted_upper,
        predicted_tight,
        languages_agree,
        elapsed: started.elapsed(),
    })
}
