use std::collections::hash_map::Entry;
use std::collections::{HashMap, VecDeque};

use crate::automata::dfa::Dfa;
use crate::error::{Error, Result};

type Pair = (usize, usize);

impl Dfa {
    /// Shortest word on which the two automata disagree, or `None` when
    /// they accept the same language. Breadth-first over the product,
    /// symbols in alphabet order, so the answer is deterministic.
    pub fn distinguishing_word(&self, other: &Dfa) -> Result<Option<Vec<usize>>> {
        if self.alphabet() != other.alphabet() {
            return Err(Error::AlphabetMismatch);
        }
        let start = (self.initial(), other.initial());
        let mut parent: HashMap<Pair, Option<(Pair, usize)>> = HashMap::new();
        parent.insert(start, None);
        let mut queue = VecDeque::from([start]);
        while let Some(pair @ (p, q)) = queue.pop_front() {
            if self.is_final(p) != other.is_final(q) {
                let mut word = Vec::new();
                let mut cursor = pair;
                while let Some(&Some((prev, a))) = parent.get(&cursor) {
                    word.push(a);
                    cursor = prev;
                }
                word.reverse();
                return Ok(Some(word));
            }
            for a in 0..self.alphabet().len() {
                let next = (self.next(p, a), other.next(q, a));
                if let Entry::Vacant(slot) = parent.entry(next) {
                    slot.insert(Some((pair, a)));
                    queue.push_back(next);
                }
            }
        }
        Ok(None)
    }

    pub fn is_equivalent(&self, other: &Dfa) -> Result<bool> {
        Ok(self.distinguishing_word(other)?.is_none())
    }
}
