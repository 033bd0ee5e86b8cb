//! Naive pipelines: compose the individual operations as NFAs, determinize
//! and minimize. These never touch the direct constructions and serve as
//! the reference for both language and size.

use crate::automata::Dfa;
use crate::error::Result;
use crate::ops::{
    antimorphic_involution, catenate_nfa, map_letters, reverse_nfa, star_nfa, LetterMap,
};

/// Minimal DFA for `L(a)·L(b)*`.
pub fn naive_cat_star(a: &Dfa, b: &Dfa) -> Result<Dfa> {
    let (star, _) = star_nfa(b).determinize();
    let (cat, _) = catenate_nfa(a, &star)?.determinize();
    Ok(cat.minimize())
}

/// Minimal DFA for `L(m)·L(n)^R`.
pub fn naive_cat_rev(m: &Dfa, n: &Dfa) -> Result<Dfa> {
    let (rev, _) = reverse_nfa(n).determinize();
    let (cat, _) = catenate_nfa(m, &rev)?.determinize();
    Ok(cat.minimize())
}

/// Minimal DFA for `L(a)·φ(L(b))`.
pub fn naive_cat_phi(a: &Dfa, b: &Dfa, phi: &LetterMap) -> Result<Dfa> {
    let (cat, _) = catenate_nfa(a, &map_letters(b, phi)?)?.determinize();
    Ok(cat.minimize())
}

/// Minimal DFA for `L(a)·θ(L(b))`.
pub fn naive_cat_theta(a: &Dfa, b: &Dfa, theta: &LetterMap) -> Result<Dfa> {
    let (image, _) = antimorphic_involution(b, theta)?.determinize();
    let (cat, _) = catenate_nfa(a, &image)?.determinize();
    Ok(cat.minimize())
}
