use std::collections::HashMap;

use crate::automata::{Dfa, StateSet};
use crate::error::{Error, Result};
use crate::ops::catenate_nfa;

/// A state of the catenation-with-star automaton: the current state of the
/// first operand, whether a factor of the star may start right now (the
/// sentinel), and the states of the second operand reached by the factors
/// in progress.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CatStarState {
    pub q: usize,
    pub has_sentinel: bool,
    pub g: StateSet,
}

/// The reachable part of the direct construction together with the label
/// of every state.
#[derive(Clone, Debug)]
pub struct CatStarConstruction {
    pub dfa: Dfa,
    pub states: Vec<CatStarState>,
}

/// Direct DFA for `L(a)·L(b)*`.
///
/// Requires `a` and `b` to have at least two states each and `b` to have a
/// final state other than its initial state.
pub fn cat_star_direct(a: &Dfa, b: &Dfa) -> Result<Dfa> {
    cat_star_construction(a, b).map(|c| c.dfa)
}

pub fn cat_star_construction(a: &Dfa, b: &Dfa) -> Result<CatStarConstruction> {
    if a.alphabet() != b.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    if a.state_count() < 2 || b.state_count() < 2 {
        return Err(Error::Precondition(format!(
            "catenation-with-star construction needs operands with at least 2 states, got {} and {}",
            a.state_count(),
            b.state_count()
        )));
    }
    let n = b.state_count();
    let s2 = b.initial();
    // F0: finals of b other than its initial state.
    let mut f0 = StateSet::with_capacity(n);
    f0.extend(b.finals().filter(|&q| q != s2));
    if f0.is_clear() {
        return Err(Error::Precondition(
            "second operand has no final state besides its initial state; use plain catenation"
                .into(),
        ));
    }
    let mut f2 = StateSet::with_capacity(n);
    f2.extend(b.finals());

    let k = a.alphabet().len();
    let start = CatStarState {
        q: a.initial(),
        has_sentinel: a.is_final(a.initial()),
        g: StateSet::with_capacity(n),
    };
    let mut ids: HashMap<CatStarState, usize> = HashMap::from([(start.clone(), 0)]);
    let mut states = vec![start];
    let mut delta = Vec::new();
    let mut next = 0;
    while next < states.len() {
        for sym in 0..k {
            let target = step(a, b, &f0, &states[next], sym);
            debug_assert_eq!(target.has_sentinel, a.is_final(target.q));
            assert!(
                target.g.is_disjoint(&f0) || target.g.contains(s2),
                "combined state left P: {target:?}"
            );
            let id = *ids.entry(target.clone()).or_insert_with(|| {
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
        .filter(|(_, s)| s.has_sentinel || !s.g.is_disjoint(&f2))
        .map(|(i, _)| i);
    let dfa = Dfa::from_table(a.alphabet().clone(), states.len(), 0, finals, delta)?;
    Ok(CatStarConstruction { dfa, states })
}

/// How [`cat_star`] obtained its automaton.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CatStarRoute {
    /// The direct construction.
    Direct,
    /// The second operand's only final state is its initial state, so
    /// `L(b)* = L(b)` and plain catenation is used.
    Catenation,
    /// The result is the first operand's language: either `a` has a single
    /// state (`∅` or `Σ*`, absorbing any star) or `b` has no final state
    /// (`L(b)* = {λ}`).
    FirstOperand,
}

/// A DFA for `L(a)·L(b)*` for any pair of operands, falling back to plain
/// catenation or the first operand where the direct construction does not
/// apply.
pub fn cat_star(a: &Dfa, b: &Dfa) -> Result<(Dfa, CatStarRoute)> {
    if a.alphabet() != b.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    if a.state_count() == 1 || b.final_count() == 0 {
        return Ok((a.trim_unreachable(), CatStarRoute::FirstOperand));
    }
    if b.finals().all(|q| q == b.initial()) {
        let (dfa, _) = catenate_nfa(a, b)?.determinize();
        return Ok((dfa, CatStarRoute::Catenation));
    }
    // b has a final state besides its initial one, so it has at least two states.
    Ok((cat_star_direct(a, b)?, CatStarRoute::Direct))
}

fn step(a: &Dfa, b: &Dfa, f0: &StateSet, from: &CatStarState, sym: usize) -> CatStarState {
    let s2 = b.initial();
    let q = a.next(from.q, sym);
    let has_sentinel = a.is_final(q);

    let mut g = StateSet::with_capacity(b.state_count());
    if from.has_sentinel {
        g.insert(b.next(s2, sym));
    }
    g.extend(from.g.ones().map(|p| b.next(p, sym)));
    let restarts = !g.is_disjoint(f0);
    if restarts {
        g.insert(s2);
    } else if has_sentinel {
        // With the sentinel present s2 adds nothing: keep the twin without it.
        g.set(s2, false);
    }
    CatStarState { q, has_sentinel, g }
}
