use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

use crate::alphabet::Alphabet;
use crate::automata::nfa::Nfa;
use crate::error::{Error, Result};

/// A complete deterministic finite automaton.
///
/// States are the dense ids `0..state_count`. The transition table is total:
/// every `(state, symbol)` pair has exactly one successor.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Dfa {
    alphabet: Alphabet,
    state_count: usize,
    initial: usize,
    finals: Vec<bool>,
    // Row-major: delta[state * |alphabet| + symbol].
    delta: Vec<usize>,
}

impl Dfa {
    /// Builds a DFA from per-state rows; `rows[q][a]` is the successor of
    /// `q` on the `a`-th symbol.
    pub fn new<F>(
        alphabet: Alphabet,
        initial: usize,
        finals: F,
        rows: Vec<Vec<usize>>,
    ) -> Result<Self>
    where
        F: IntoIterator<Item = usize>,
    {
        let k = alphabet.len();
        let state_count = rows.len();
        let mut delta = Vec::with_capacity(state_count * k);
        for row in &rows {
            if row.len() != k {
                return Err(Error::IncompleteTable {
                    expected: state_count * k,
                    found: row.len(),
                });
            }
            delta.extend_from_slice(row);
        }
        Dfa::from_table(alphabet, state_count, initial, finals, delta)
    }

    /// Builds a DFA from a flat row-major table of `state_count * |alphabet|` entries.
    pub fn from_table<F>(
        alphabet: Alphabet,
        state_count: usize,
        initial: usize,
        finals: F,
        delta: Vec<usize>,
    ) -> Result<Self>
    where
        F: IntoIterator<Item = usize>,
    {
        if state_count == 0 {
            return Err(Error::NoStates);
        }
        let in_range = |state: usize| {
            if state < state_count {
                Ok(state)
            } else {
                Err(Error::StateOutOfRange { state, state_count })
            }
        };
        in_range(initial)?;
        let expected = state_count * alphabet.len();
        if delta.len() != expected {
            return Err(Error::IncompleteTable {
                expected,
                found: delta.len(),
            });
        }
        for &target in &delta {
            in_range(target)?;
        }
        let mut is_final = vec![false; state_count];
        for f in finals {
            is_final[in_range(f)?] = true;
        }
        Ok(Dfa {
            alphabet,
            state_count,
            initial,
            finals: is_final,
            delta,
        })
    }

    /// The 1-state automaton accepting nothing.
    pub fn empty_language(alphabet: Alphabet) -> Self {
        let k = alphabet.len();
        Dfa {
            alphabet,
            state_count: 1,
            initial: 0,
            finals: vec![false],
            delta: vec![0; k],
        }
    }

    /// The 1-state automaton accepting every word.
    pub fn universal(alphabet: Alphabet) -> Self {
        let k = alphabet.len();
        Dfa {
            alphabet,
            state_count: 1,
            initial: 0,
            finals: vec![true],
            delta: vec![0; k],
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn is_final(&self, state: usize) -> bool {
        self.finals[state]
    }

    pub fn finals(&self) -> impl Iterator<Item = usize> + '_ {
        self.finals
            .iter()
            .enumerate()
            .filter(|(_, &f)| f)
            .map(|(q, _)| q)
    }

    pub fn final_count(&self) -> usize {
        self.finals.iter().filter(|&&f| f).count()
    }

    #[inline]
    pub fn next(&self, state: usize, symbol: usize) -> usize {
        self.delta[state * self.alphabet.len() + symbol]
    }

    pub fn row(&self, state: usize) -> &[usize] {
        let k = self.alphabet.len();
        &self.delta[state * k..(state + 1) * k]
    }

    pub fn table(&self) -> &[usize] {
        &self.delta
    }

    /// Extended transition function.
    pub fn run(&self, from: usize, word: &[usize]) -> usize {
        word.iter().fold(from, |q, &a| self.next(q, a))
    }

    pub fn accepts_word(&self, word: &[usize]) -> bool {
        self.finals[self.run(self.initial, word)]
    }

    /// Membership test for a word given by symbol names.
    pub fn accepts<S: AsRef<str>>(&self, word: &[S]) -> Result<bool> {
        let word = self.alphabet.encode(word)?;
        Ok(self.accepts_word(&word))
    }

    pub fn reachable(&self) -> FixedBitSet {
        let mut seen = FixedBitSet::with_capacity(self.state_count);
        let mut stack = vec![self.initial];
        seen.insert(self.initial);
        while let Some(q) = stack.pop() {
            for &t in self.row(q) {
                if !seen.put(t) {
                    stack.push(t);
                }
            }
        }
        seen
    }

    pub fn is_accessible(&self) -> bool {
        self.reachable().count_ones(..) == self.state_count
    }

    /// Drops unreachable states, keeping the relative order of the rest.
    pub fn trim_unreachable(&self) -> Dfa {
        let reachable = self.reachable();
        if reachable.count_ones(..) == self.state_count {
            return self.clone();
        }
        let mut new_id = vec![usize::MAX; self.state_count];
        for (i, q) in reachable.ones().enumerate() {
            new_id[q] = i;
        }
        let delta = reachable
            .ones()
            .flat_map(|q| self.row(q).iter().map(|&t| new_id[t]))
            .collect::<Vec<_>>();
        let finals = reachable
            .ones()
            .filter(|&q| self.finals[q])
            .map(|q| new_id[q]);
        Dfa::from_table(
            self.alphabet.clone(),
            reachable.count_ones(..),
            new_id[self.initial],
            finals,
            delta,
        )
        .expect("renumbering preserves validity")
    }

    /// Renumbers states in breadth-first discovery order from the initial
    /// state, visiting symbols in alphabet order. Isomorphic accessible DFAs
    /// have identical canonical forms.
    pub fn canonicalize(&self) -> Result<Dfa> {
        let mut order = Vec::with_capacity(self.state_count);
        let mut new_id = vec![usize::MAX; self.state_count];
        let mut queue = VecDeque::from([self.initial]);
        new_id[self.initial] = 0;
        while let Some(q) = queue.pop_front() {
            order.push(q);
            for &t in self.row(q) {
                if new_id[t] == usize::MAX {
                    new_id[t] = order.len() + queue.len();
                    queue.push_back(t);
                }
            }
        }
        if order.len() != self.state_count {
            return Err(Error::UnreachableStates);
        }
        let delta = order
            .iter()
            .flat_map(|&q| self.row(q).iter().map(|&t| new_id[t]))
            .collect();
        let finals = order.iter().map(|&q| self.finals[q]).collect();
        Ok(Dfa {
            alphabet: self.alphabet.clone(),
            state_count: self.state_count,
            initial: 0,
            finals,
            delta,
        })
    }

    /// Applies a state permutation: state `q` becomes `perm[q]`.
    pub fn renumber(&self, perm: &[usize]) -> Result<Dfa> {
        let n = self.state_count;
        let mut seen = FixedBitSet::with_capacity(n);
        if perm.len() != n || perm.iter().any(|&p| p >= n || seen.put(p)) {
            return Err(Error::Precondition(
                "renumbering must be a permutation of the states".into(),
            ));
        }
        let k = self.alphabet.len();
        let mut delta = vec![0; n * k];
        for q in 0..n {
            for (a, &t) in self.row(q).iter().enumerate() {
                delta[perm[q] * k + a] = perm[t];
            }
        }
        Dfa::from_table(
            self.alphabet.clone(),
            n,
            perm[self.initial],
            self.finals().map(|q| perm[q]),
            delta,
        )
    }

    /// The same automaton read as an NFA with singleton transitions.
    pub fn to_nfa(&self) -> Nfa {
        let transitions = (0..self.state_count)
            .flat_map(|q| self.row(q).iter().enumerate().map(move |(a, &t)| (q, a, t)));
        Nfa::new(
            self.alphabet.clone(),
            self.state_count,
            [self.initial],
            self.finals(),
            transitions,
        )
        .expect("a valid dfa is a valid nfa")
    }
}
