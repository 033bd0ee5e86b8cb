use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::alphabet::Alphabet;
use crate::automata::dfa::Dfa;
use crate::error::{Error, Result};

/// A set of NFA state ids.
pub type StateSet = FixedBitSet;

/// A nondeterministic automaton without ε-moves and with a set of initial states.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Nfa {
    alphabet: Alphabet,
    state_count: usize,
    initials: StateSet,
    finals: StateSet,
    // delta[state * |alphabet| + symbol]
    delta: Vec<StateSet>,
}

impl Nfa {
    /// Builds an NFA from `(source, symbol index, target)` triples.
    pub fn new<I, F, T>(
        alphabet: Alphabet,
        state_count: usize,
        initials: I,
        finals: F,
        transitions: T,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
        F: IntoIterator<Item = usize>,
        T: IntoIterator<Item = (usize, usize, usize)>,
    {
        if state_count == 0 {
            return Err(Error::NoStates);
        }
        let check = |state: usize| {
            if state < state_count {
                Ok(state)
            } else {
                Err(Error::StateOutOfRange { state, state_count })
            }
        };
        let mut initial_set = StateSet::with_capacity(state_count);
        for q in initials {
            initial_set.insert(check(q)?);
        }
        if initial_set.is_clear() {
            return Err(Error::NoInitialStates);
        }
        let mut final_set = StateSet::with_capacity(state_count);
        for q in finals {
            final_set.insert(check(q)?);
        }
        let k = alphabet.len();
        let mut delta = vec![StateSet::with_capacity(state_count); state_count * k];
        for (p, a, q) in transitions {
            check(p)?;
            check(q)?;
            if a >= k {
                return Err(Error::UnknownSymbol(format!("#{a}")));
            }
            delta[p * k + a].insert(q);
        }
        Ok(Nfa {
            alphabet,
            state_count,
            initials: initial_set,
            finals: final_set,
            delta,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn initials(&self) -> &StateSet {
        &self.initials
    }

    pub fn finals(&self) -> &StateSet {
        &self.finals
    }

    pub fn is_final(&self, state: usize) -> bool {
        self.finals.contains(state)
    }

    pub fn successors(&self, state: usize, symbol: usize) -> &StateSet {
        &self.delta[state * self.alphabet.len() + symbol]
    }

    /// All transitions as `(source, symbol, target)`, sorted.
    pub fn transitions(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let k = self.alphabet.len();
        (0..self.state_count).flat_map(move |p| {
            (0..k).flat_map(move |a| self.successors(p, a).ones().map(move |q| (p, a, q)))
        })
    }

    /// Image of a state set under one symbol.
    pub fn step(&self, from: &StateSet, symbol: usize) -> StateSet {
        let mut next = StateSet::with_capacity(self.state_count);
        for p in from.ones() {
            next.union_with(self.successors(p, symbol));
        }
        next
    }

    /// Membership by direct set simulation, without determinizing.
    pub fn accepts_word(&self, word: &[usize]) -> bool {
        let current = word
            .iter()
            .fold(self.initials.clone(), |set, &a| self.step(&set, a));
        !current.is_disjoint(&self.finals)
    }

    pub fn accepts<S: AsRef<str>>(&self, word: &[S]) -> Result<bool> {
        let word = self.alphabet.encode(word)?;
        Ok(self.accepts_word(&word))
    }

    /// Reverses every transition and swaps initial and final states.
    ///
    /// Without final states the language is empty and so is its reversal;
    /// that case yields state 0 as the sole initial state and no finals.
    pub fn reversed(&self) -> Nfa {
        let (initials, finals) = if self.finals.is_clear() {
            let mut start = StateSet::with_capacity(self.state_count);
            start.insert(0);
            (start, StateSet::with_capacity(self.state_count))
        } else {
            (self.finals.clone(), self.initials.clone())
        };
        let k = self.alphabet.len();
        let mut delta = vec![StateSet::with_capacity(self.state_count); self.state_count * k];
        for (p, a, q) in self.transitions() {
            delta[q * k + a].insert(p);
        }
        Nfa {
            alphabet: self.alphabet.clone(),
            state_count: self.state_count,
            initials,
            finals,
            delta,
        }
    }

    /// Relabels symbols: a transition on symbol `a` moves to symbol `map[a]`.
    /// `map` must be a permutation of the symbol indices.
    pub(crate) fn permute_symbols(&self, map: &[usize]) -> Nfa {
        let k = self.alphabet.len();
        let mut delta = vec![StateSet::with_capacity(self.state_count); self.state_count * k];
        for p in 0..self.state_count {
            for (a, &b) in map.iter().enumerate() {
                delta[p * k + b] = self.successors(p, a).clone();
            }
        }
        Nfa {
            delta,
            ..self.clone()
        }
    }

    /// Accessible subset construction. The result is complete: the empty
    /// subset appears as a sink whenever it is reachable.
    pub fn determinize(&self) -> (Dfa, SubsetLabel) {
        let k = self.alphabet.len();
        let mut ids: HashMap<StateSet, usize> = HashMap::new();
        let mut labels = vec![self.initials.clone()];
        ids.insert(self.initials.clone(), 0);
        let mut delta = Vec::new();
        let mut next = 0;
        while next < labels.len() {
            for a in 0..k {
                let target = self.step(&labels[next], a);
                let id = match ids.get(&target) {
                    Some(&id) => id,
                    None => {
                        let id = labels.len();
                        ids.insert(target.clone(), id);
                        labels.push(target);
                        id
                    }
                };
                delta.push(id);
            }
            next += 1;
        }
        let finals = labels
            .iter()
            .enumerate()
            .filter(|(_, set)| !set.is_disjoint(&self.finals))
            .map(|(i, _)| i);
        let dfa = Dfa::from_table(self.alphabet.clone(), labels.len(), 0, finals, delta)
            .expect("subset construction yields a complete table");
        (dfa, SubsetLabel { labels })
    }
}

/// The NFA state subset behind every state of a determinized automaton.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubsetLabel {
    labels: Vec<StateSet>,
}

impl SubsetLabel {
    pub fn get(&self, state: usize) -> &StateSet {
        &self.labels[state]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &StateSet> {
        self.labels.iter()
    }

    /// The determinized state labelled by `set`, if any.
    pub fn state_of(&self, set: &StateSet) -> Option<usize> {
        self.labels.iter().position(|l| l == set)
    }
}
