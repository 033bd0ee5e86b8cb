use std::collections::HashMap;

use crate::automata::{Dfa, StateSet};
use crate::error::{Error, Result};
use crate::ops::reverse_nfa;

/// A state `⟨i, j⟩` of the catenation-with-reversal automaton: `i` is a
/// state of the first operand and `j` the current subset of the reversed
/// second operand. All pairs with `j = Q_N` collapse into one state, which
/// keeps the `i` of the first such pair discovered.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CatRevState {
    pub i: usize,
    pub j: StateSet,
}

#[derive(Clone, Debug)]
pub struct CatRevConstruction {
    pub dfa: Dfa,
    pub states: Vec<CatRevState>,
}

/// Direct DFA for `L(m)·L(n)^R`.
pub fn cat_rev_direct(m: &Dfa, n: &Dfa) -> Result<Dfa> {
    cat_rev_construction(m, n).map(|c| c.dfa)
}

pub fn cat_rev_construction(m: &Dfa, n: &Dfa) -> Result<CatRevConstruction> {
    if m.alphabet() != n.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let size = n.state_count();
    let reversed = reverse_nfa(n);
    let mut f_n = StateSet::with_capacity(size);
    f_n.extend(n.finals());
    let mut full = StateSet::with_capacity(size);
    full.insert_range(..);

    let mut start = CatRevState {
        i: m.initial(),
        j: StateSet::with_capacity(size),
    };
    if m.is_final(m.initial()) {
        start.j.union_with(&f_n);
    }

    // Key of the merged Q_N state.
    let key = |s: &CatRevState| {
        if s.j == full {
            (usize::MAX, full.clone())
        } else {
            (s.i, s.j.clone())
        }
    };
    let mut ids: HashMap<(usize, StateSet), usize> = HashMap::from([(key(&start), 0)]);
    let mut states = vec![start];
    let mut delta = Vec::new();
    let mut next = 0;
    while next < states.len() {
        for sym in 0..m.alphabet().len() {
            let i = m.next(states[next].i, sym);
            let mut j = reversed.step(&states[next].j, sym);
            if m.is_final(i) {
                j.union_with(&f_n);
            }
            let target = CatRevState { i, j };
            assert!(!m.is_final(target.i) || f_n.is_subset(&target.j));
            let id = *ids.entry(key(&target)).or_insert_with(|| {
                states.push(target);
                states.len() - 1
            });
            delta.push(id);
        }
        next += 1;
    }
    let finals = states
        .iter()
        .enumerate()
        .filter(|(_, s)| s.j.contains(n.initial()))
        .map(|(i, _)| i);
    let dfa = Dfa::from_table(m.alphabet().clone(), states.len(), 0, finals, delta)?;
    Ok(CatRevConstruction { dfa, states })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;

    #[test]
    fn universal_operands_collapse_to_one_state() {
        let all = Dfa::universal(Alphabet::letters(2));
        let d = cat_rev_direct(&all, &all).unwrap();
        assert_eq!(d.state_count(), 1);
        assert!(d.is_final(0));
    }

    #[test]
    fn full_subset_is_an_accepting_sink() {
        let sigma = Alphabet::letters(1);
        let m = Dfa::universal(sigma.clone());
        // a(aa)*: odd length words
        let n = Dfa::new(sigma, 0, [1], vec![vec![1], vec![0]]).unwrap();
        let c = cat_rev_construction(&m, &n).unwrap();
        let sink = c
            .states
            .iter()
            .position(|s| s.j.count_ones(..) == 2)
            .unwrap();
        assert!(c.dfa.is_final(sink));
        assert_eq!(c.dfa.row(sink), &[sink]);
        assert_eq!(
            c.states.iter().filter(|s| s.j.count_ones(..) == 2).count(),
            1
        );
    }

    #[test]
    fn mismatched_alphabets() {
        let a = Dfa::universal(Alphabet::letters(1));
        let b = Dfa::universal(Alphabet::letters(2));
        assert_eq!(cat_rev_direct(&a, &b).err(), Some(Error::AlphabetMismatch));
    }
}
