use std::collections::HashSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::alphabet::Alphabet;
use crate::automata::Dfa;
use crate::combined::{cat_rev_direct, cat_star};
use crate::error::{Error, Result};
use crate::ops::{catenate_nfa, map_letters, LetterMap};
use crate::witness::{Family, WitnessPair};

/// Combined operation a search targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SearchOp {
    /// `L1·L2*`
    CatStar,
    /// `L1·L2^R`
    CatRev,
    /// `L1·φ(L2)` with φ swapping the first two symbols (identity over one letter).
    CatPhi,
}

impl SearchOp {
    /// The letter map used by [`SearchOp::CatPhi`].
    pub fn phi(alphabet: &Alphabet) -> LetterMap {
        let mut image: Vec<usize> = (0..alphabet.len()).collect();
        if image.len() >= 2 {
            image.swap(0, 1);
        }
        LetterMap::from_indices(alphabet, image, true).expect("a transposition is an involution")
    }

    /// A (not necessarily minimal) DFA for the combined operation.
    pub fn apply(self, a: &Dfa, b: &Dfa) -> Result<Dfa> {
        match self {
            SearchOp::CatStar => cat_star(a, b).map(|(d, _)| d),
            SearchOp::CatRev => cat_rev_direct(a, b),
            SearchOp::CatPhi => {
                let mapped = map_letters(b, &SearchOp::phi(b.alphabet()))?;
                Ok(catenate_nfa(a, &mapped)?.determinize().0)
            }
        }
    }

    pub fn minimal_size(self, a: &Dfa, b: &Dfa) -> Result<usize> {
        Ok(self.apply(a, b)?.minimize().state_count())
    }
}

impl fmt::Display for SearchOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SearchOp::CatStar => "cat-star",
            SearchOp::CatRev => "cat-rev",
            SearchOp::CatPhi => "cat-phi",
        })
    }
}

/// Structural requirement on the candidate operands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Constraint {
    None,
    /// The second operand's only final state is its initial state.
    SecondFinalsAreInitial,
    /// The first operand is the 1-state automaton for `Σ*`.
    FirstUniversal,
    /// The second operand is the 1-state automaton for `Σ*`.
    SecondUniversal,
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Constraint::None => "none",
            Constraint::SecondFinalsAreInitial => "second-finals-initial",
            Constraint::FirstUniversal => "first-universal",
            Constraint::SecondUniversal => "second-universal",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SearchMode {
    Exhaustive,
    Random,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SearchBudget {
    /// Number of letters, 1 to 4.
    pub alphabet_size: usize,
    /// Exhaustive mode: largest admissible raw candidate space.
    /// Random mode: number of sampled pairs.
    pub max_candidates: u64,
    pub seed: u64,
    pub mode: SearchMode,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            alphabet_size: 2,
            max_candidates: 10_000_000,
            seed: 0,
            mode: SearchMode::Exhaustive,
        }
    }
}

/// Outcome of a search. Without a witness in exhaustive mode this is an
/// exhaustion certificate: no minimal operand pair of the stated sizes over
/// the stated alphabet reaches the target.
#[derive(Clone, Debug)]
pub struct SearchReport {
    pub op: SearchOp,
    pub m: u32,
    pub n: u32,
    pub target: usize,
    pub constraint: Constraint,
    pub budget: SearchBudget,
    pub witness: Option<WitnessPair>,
    /// Raw candidate pairs (all tables with initial state 0, all final sets).
    pub space_size: u128,
    /// Raw operand candidates drawn (random mode) or enumerated (exhaustive mode).
    pub examined: u64,
    /// Pairwise distinct pairs of minimal, canonical operands evaluated.
    pub distinct_pairs: u64,
    /// Largest minimal result size seen.
    pub best_size: Option<usize>,
}

impl SearchReport {
    pub fn is_exhaustion_certificate(&self) -> bool {
        self.witness.is_none() && self.budget.mode == SearchMode::Exhaustive
    }
}

impl fmt::Display for SearchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let outcome = match (&self.witness, self.budget.mode) {
            (Some(_), _) => "found",
            (None, SearchMode::Exhaustive) => "exhausted",
            (None, SearchMode::Random) => "budget-exhausted",
        };
        write!(
            f,
            "{outcome}: op={} m={} n={} target={} constraint={} alphabet={} mode={:?} space={} examined={} distinct_pairs={} best={}",
            self.op,
            self.m,
            self.n,
            self.target,
            self.constraint,
            self.budget.alphabet_size,
            self.budget.mode,
            self.space_size,
            self.examined,
            self.distinct_pairs,
            self.best_size.map_or("-".to_string(), |b| b.to_string()),
        )
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum OperandRule {
    Any,
    FinalsAreInitial,
    Universal,
}

impl OperandRule {
    fn raw_space(self, states: usize, k: usize) -> u128 {
        let tables = (states as u128)
            .checked_pow((states * k) as u32)
            .unwrap_or(u128::MAX);
        match self {
            OperandRule::Universal => 1,
            OperandRule::FinalsAreInitial => tables,
            OperandRule::Any => tables.saturating_mul(1u128 << states.min(127)),
        }
    }

    /// Final-state sets in ascending popcount order, then ascending value.
    fn final_sets(self, states: usize) -> Vec<Vec<usize>> {
        match self {
            OperandRule::Universal | OperandRule::FinalsAreInitial => vec![vec![0]],
            OperandRule::Any => {
                let mut masks: Vec<u32> = (0..1u32 << states).collect();
                masks.sort_by_key(|m| (m.count_ones(), *m));
                masks
                    .into_iter()
                    .map(|m| (0..states).filter(|&q| m >> q & 1 == 1).collect())
                    .collect()
            }
        }
    }
}

/// Searches for operands of sizes `m` and `n` whose combined result has
/// exactly `target` states after minimization.
pub fn search_witness(
    op: SearchOp,
    m: u32,
    n: u32,
    target: usize,
    constraint: Constraint,
    budget: &SearchBudget,
) -> Result<SearchReport> {
    if !(1..=4).contains(&budget.alphabet_size) {
        return Err(Error::Precondition(format!(
            "alphabet size must be within 1..=4, got {}",
            budget.alphabet_size
        )));
    }
    if budget.max_candidates == 0 {
        return Err(Error::Precondition(
            "max_candidates must be positive".into(),
        ));
    }
    if m == 0 || n == 0 || m > 8 || n > 8 {
        return Err(Error::Precondition(format!(
            "operand sizes must be within 1..=8, got m={m}, n={n}"
        )));
    }
    let (first_rule, second_rule) = match constraint {
        Constraint::None => (OperandRule::Any, OperandRule::Any),
        Constraint::SecondFinalsAreInitial => (OperandRule::Any, OperandRule::FinalsAreInitial),
        Constraint::FirstUniversal if m == 1 => (OperandRule::Universal, OperandRule::Any),
        Constraint::SecondUniversal if n == 1 => (OperandRule::Any, OperandRule::Universal),
        Constraint::FirstUniversal | Constraint::SecondUniversal => {
            return Err(Error::Precondition(format!(
                "constraint {constraint} needs a 1-state operand"
            )))
        }
    };
    let k = budget.alphabet_size;
    let space_size = first_rule
        .raw_space(m as usize, k)
        .saturating_mul(second_rule.raw_space(n as usize, k));
    let mut report = SearchReport {
        op,
        m,
        n,
        target,
        constraint,
        budget: *budget,
        witness: None,
        space_size,
        examined: 0,
        distinct_pairs: 0,
        best_size: None,
    };
    let alphabet = Alphabet::letters(k);
    match budget.mode {
        SearchMode::Exhaustive => {
            if space_size > budget.max_candidates as u128 {
                return Err(Error::InfeasibleBudget {
                    space: space_size,
                    limit: budget.max_candidates as u128,
                });
            }
            let (firsts, seen_a) = enumerate_operands(&alphabet, m as usize, first_rule);
            let (seconds, seen_b) = enumerate_operands(&alphabet, n as usize, second_rule);
            report.examined = seen_a + seen_b;
            for a in &firsts {
                let sizes = seconds
                    .par_iter()
                    .map(|b| op.minimal_size(a, b))
                    .collect::<Result<Vec<_>>>()?;
                if let Some(pos) = sizes.iter().position(|&s| s == target) {
                    report.distinct_pairs += pos as u64 + 1;
                    report.best_size = report.best_size.max(sizes[..=pos].iter().copied().max());
                    report.witness =
                        Some(witness(op, a.clone(), seconds[pos].clone(), m, n, target));
                    return Ok(report);
                }
                report.distinct_pairs += sizes.len() as u64;
                report.best_size = report.best_size.max(sizes.into_iter().max());
            }
        }
        SearchMode::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
            let mut seen = HashSet::new();
            for _ in 0..budget.max_candidates {
                report.examined += 1;
                let a = sample_operand(&mut rng, &alphabet, m as usize, first_rule);
                let b = sample_operand(&mut rng, &alphabet, n as usize, second_rule);
                let (Some(a), Some(b)) = (a, b) else { continue };
                if !seen.insert((a.clone(), b.clone())) {
                    continue;
                }
                report.distinct_pairs += 1;
                let size = op.minimal_size(&a, &b)?;
                report.best_size = report.best_size.max(Some(size));
                if size == target {
                    report.witness = Some(witness(op, a, b, m, n, target));
                    break;
                }
            }
        }
    }
    Ok(report)
}

fn witness(op: SearchOp, a: Dfa, b: Dfa, m: u32, n: u32, target: usize) -> WitnessPair {
    WitnessPair {
        a,
        b,
        family: Family::Search(op),
        m,
        n,
        predicted: target as u64,
    }
}

/// True when numbering states by breadth-first discovery from state 0
/// reproduces the table, i.e. the table is accessible and canonical.
fn is_canonical_table(table: &[usize], k: usize) -> bool {
    let mut discovered = 1;
    for (q, row) in table.chunks(k).enumerate() {
        if q >= discovered {
            return false;
        }
        for &t in row {
            if t == discovered {
                discovered += 1;
            } else if t > discovered {
                return false;
            }
        }
    }
    true
}

/// Minimal canonical operands in enumeration order, and the number of raw
/// candidates looked at.
fn enumerate_operands(alphabet: &Alphabet, states: usize, rule: OperandRule) -> (Vec<Dfa>, u64) {
    if rule == OperandRule::Universal {
        return (vec![Dfa::universal(alphabet.clone())], 1);
    }
    let k = alphabet.len();
    let finals = rule.final_sets(states);
    let mut table = vec![0usize; states * k];
    let mut out = Vec::new();
    let mut examined = 0u64;
    loop {
        examined += finals.len() as u64;
        if is_canonical_table(&table, k) {
            for f in &finals {
                let d = Dfa::from_table(
                    alphabet.clone(),
                    states,
                    0,
                    f.iter().copied(),
                    table.clone(),
                )
                .expect("enumerated tables are in range");
                if d.minimize().state_count() == states {
                    out.push(d);
                }
            }
        }
        // Odometer step, first entry most significant.
        let mut pos = table.len();
        loop {
            if pos == 0 {
                return (out, examined);
            }
            pos -= 1;
            table[pos] += 1;
            if table[pos] < states {
                break;
            }
            table[pos] = 0;
        }
    }
}

/// A random operand in canonical form, or `None` when the draw is not minimal.
fn sample_operand(
    rng: &mut ChaCha8Rng,
    alphabet: &Alphabet,
    states: usize,
    rule: OperandRule,
) -> Option<Dfa> {
    if rule == OperandRule::Universal {
        return Some(Dfa::universal(alphabet.clone()));
    }
    let table = (0..states * alphabet.len())
        .map(|_| rng.gen_range(0..states))
        .collect();
    let finals: Vec<usize> = match rule {
        OperandRule::FinalsAreInitial => vec![0],
        _ => (0..states).filter(|_| rng.gen_bool(0.5)).collect(),
    };
    let d = Dfa::from_table(alphabet.clone(), states, 0, finals, table)
        .expect("sampled tables are in range");
    let min = d.minimize();
    (min.state_count() == states).then(|| min.canonicalize().expect("minimal dfas are accessible"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_table_check() {
        // 0 -> 1 -> 2 discovered in order
        assert!(is_canonical_table(&[1, 2, 0], 1));
        assert!(!is_canonical_table(&[2, 1, 0], 1));
        // state 1 unreachable
        assert!(!is_canonical_table(&[0, 0], 1));
        assert!(is_canonical_table(&[0, 1, 0, 0], 2));
    }

    #[test]
    fn enumerated_operands_are_distinct_and_canonical() {
        let sigma = Alphabet::letters(2);
        let (ops, examined) = enumerate_operands(&sigma, 2, OperandRule::Any);
        assert_eq!(examined, 16 * 4);
        let unique: HashSet<_> = ops.iter().collect();
        assert_eq!(unique.len(), ops.len());
        for d in &ops {
            assert_eq!(&d.canonicalize().unwrap(), d);
            assert_eq!(d.minimize().state_count(), 2);
        }
        // two-state minimal dfas have exactly one final state
        let counts: Vec<_> = ops.iter().map(|d| d.final_count()).collect();
        assert!(counts.iter().all(|&c| c == 1));
    }

    #[test]
    fn budget_validation() {
        let mut budget = SearchBudget {
            alphabet_size: 3,
            max_candidates: 10,
            ..Default::default()
        };
        assert!(matches!(
            search_witness(SearchOp::CatRev, 2, 2, 5, Constraint::None, &budget),
            Err(Error::InfeasibleBudget { .. })
        ));
        budget.alphabet_size = 5;
        assert!(search_witness(SearchOp::CatRev, 1, 1, 1, Constraint::None, &budget).is_err());
        let budget = SearchBudget::default();
        assert!(search_witness(
            SearchOp::CatRev,
            2,
            2,
            5,
            Constraint::FirstUniversal,
            &budget
        )
        .is_err());
    }

    #[test]
    fn target_above_upper_bound_is_never_found() {
        let budget = SearchBudget {
            alphabet_size: 2,
            ..Default::default()
        };
        // upper bound for (1, 2) is 2
        let r = search_witness(SearchOp::CatRev, 1, 2, 3, Constraint::None, &budget).unwrap();
        assert!(r.witness.is_none());
        assert!(r.is_exhaustion_certificate());
        assert!(r.best_size.unwrap() <= 2);
    }

    #[test]
    fn random_mode_is_reproducible() {
        let budget = SearchBudget {
            alphabet_size: 2,
            max_candidates: 200,
            seed: 7,
            mode: SearchMode::Random,
        };
        let a = search_witness(SearchOp::CatRev, 2, 2, 99, Constraint::None, &budget).unwrap();
        let b = search_witness(SearchOp::CatRev, 2, 2, 99, Constraint::None, &budget).unwrap();
        assert_eq!(a.distinct_pairs, b.distinct_pairs);
        assert_eq!(a.best_size, b.best_size);
        assert!(a.witness.is_none());
    }
}
