//! The individual regular operations: catenation, star, reversal, letter
//! mapping and antimorphic involution. All constructions are ε-free.

use crate::alphabet::Alphabet;
use crate::automata::{Dfa, Nfa};
use crate::error::{Error, Result};

/// A total map from the alphabet to itself, applied letter by letter.
///
/// With the involutive flag set the map is guaranteed to be its own
/// inverse, which is what the antimorphic involution needs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LetterMap {
    alphabet: Alphabet,
    image: Vec<usize>,
    involutive: bool,
}

impl LetterMap {
    /// Builds a map from `(from, to)` symbol pairs covering every symbol once.
    pub fn from_pairs<S: AsRef<str>>(
        alphabet: &Alphabet,
        pairs: &[(S, S)],
        involutive: bool,
    ) -> Result<Self> {
        let mut image = vec![None; alphabet.len()];
        for (from, to) in pairs {
            let (from, to) = (from.as_ref(), to.as_ref());
            let i = alphabet.index_of(from)?;
            if image[i].is_some() {
                return Err(Error::PartialLetterMap(format!(
                    "symbol {from:?} mapped twice"
                )));
            }
            image[i] = Some(alphabet.index_of(to)?);
        }
        let image = image
            .into_iter()
            .enumerate()
            .map(|(i, t)| {
                t.ok_or_else(|| {
                    Error::PartialLetterMap(format!("no image for {:?}", alphabet.symbol(i)))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        LetterMap::from_indices(alphabet, image, involutive)
    }

    pub fn from_indices(alphabet: &Alphabet, image: Vec<usize>, involutive: bool) -> Result<Self> {
        if image.len() != alphabet.len() {
            return Err(Error::PartialLetterMap(format!(
                "{} images for {} symbols",
                image.len(),
                alphabet.len()
            )));
        }
        if let Some(&bad) = image.iter().find(|&&t| t >= alphabet.len()) {
            return Err(Error::UnknownSymbol(format!("#{bad}")));
        }
        let map = LetterMap {
            alphabet: alphabet.clone(),
            image,
            involutive,
        };
        if involutive && !map.squares_to_identity() {
            return Err(Error::NotInvolutive);
        }
        Ok(map)
    }

    pub fn identity(alphabet: &Alphabet) -> Self {
        LetterMap {
            alphabet: alphabet.clone(),
            image: (0..alphabet.len()).collect(),
            involutive: true,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn apply(&self, symbol: usize) -> usize {
        self.image[symbol]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_involutive(&self) -> bool {
        self.involutive
    }

    pub fn is_bijective(&self) -> bool {
        let mut hit = vec![false; self.image.len()];
        self.image
            .iter()
            .all(|&t| !std::mem::replace(&mut hit[t], true))
    }

    fn squares_to_identity(&self) -> bool {
        self.image
            .iter()
            .enumerate()
            .all(|(a, &b)| self.image[b] == a)
    }

    /// Letter-wise image of a word.
    pub fn map_word(&self, word: &[usize]) -> Vec<usize> {
        word.iter().map(|&a| self.apply(a)).collect()
    }
}

/// ε-free catenation `L(a)·L(b)`. States `0..m` copy `a`, states `m..m+n` copy `b`.
pub fn catenate_nfa(a: &Dfa, b: &Dfa) -> Result<Nfa> {
    if a.alphabet() != b.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let m = a.state_count();
    let k = a.alphabet().len();
    let b_start = m + b.initial();
    let mut transitions = Vec::new();
    for p in 0..m {
        for s in 0..k {
            let q = a.next(p, s);
            transitions.push((p, s, q));
            if a.is_final(q) {
                transitions.push((p, s, b_start));
            }
        }
    }
    for p in 0..b.state_count() {
        for s in 0..k {
            transitions.push((m + p, s, m + b.next(p, s)));
        }
    }
    let mut initials = vec![a.initial()];
    if a.is_final(a.initial()) {
        initials.push(b_start);
    }
    Nfa::new(
        a.alphabet().clone(),
        m + b.state_count(),
        initials,
        b.finals().map(|q| m + q),
        transitions,
    )
}

/// ε-free star `L(b)*`. A fresh state `n` is the only initial state and is
/// final; it copies the outgoing transitions of `b`'s initial state. Every
/// transition entering a final state is doubled by one entering `b`'s
/// initial state, which restarts the next factor.
pub fn star_nfa(b: &Dfa) -> Nfa {
    let n = b.state_count();
    let k = b.alphabet().len();
    let fresh = n;
    let s = b.initial();
    let mut transitions = Vec::new();
    for p in 0..n {
        for a in 0..k {
            let q = b.next(p, a);
            transitions.push((p, a, q));
            if b.is_final(q) {
                transitions.push((p, a, s));
            }
        }
    }
    for a in 0..k {
        let q = b.next(s, a);
        transitions.push((fresh, a, q));
        if b.is_final(q) {
            transitions.push((fresh, a, s));
        }
    }
    Nfa::new(
        b.alphabet().clone(),
        n + 1,
        [fresh],
        b.finals().chain([fresh]),
        transitions,
    )
    .expect("star construction references valid states")
}

/// Reversal: transitions flipped, initial states are `n`'s finals and the
/// only final state is `n`'s initial state.
pub fn reverse_nfa(n: &Dfa) -> Nfa {
    n.to_nfa().reversed()
}

/// Relabels every transition of `d` through the bijection `f`; accepts `φ(L(d))`.
pub fn map_letters(d: &Dfa, f: &LetterMap) -> Result<Dfa> {
    if d.alphabet() != f.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    if !f.is_bijective() {
        return Err(Error::NotBijective);
    }
    let k = d.alphabet().len();
    let mut delta = vec![0; d.state_count() * k];
    for q in 0..d.state_count() {
        for (a, &t) in d.row(q).iter().enumerate() {
            delta[q * k + f.apply(a)] = t;
        }
    }
    Dfa::from_table(
        d.alphabet().clone(),
        d.state_count(),
        d.initial(),
        d.finals(),
        delta,
    )
}

/// Relabels the transitions of an NFA through the bijection `f`.
pub fn map_letters_nfa(n: &Nfa, f: &LetterMap) -> Result<Nfa> {
    if n.alphabet() != f.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    if !f.is_bijective() {
        return Err(Error::NotBijective);
    }
    Ok(n.permute_symbols(f.image()))
}

/// `θ(L(d)) = φ(L(d)^R)` for an involutive letter map `f`.
pub fn antimorphic_involution(d: &Dfa, f: &LetterMap) -> Result<Nfa> {
    if !f.is_involutive() {
        return Err(Error::NotInvolutive);
    }
    map_letters_nfa(&reverse_nfa(d), f)
}
