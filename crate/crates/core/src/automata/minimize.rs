//! Two independent minimization procedures: Hopcroft partition refinement,
//! used everywhere, and Brzozowski's double reversal, kept as a cross-check.

use crate::automata::dfa::Dfa;

impl Dfa {
    /// The minimal complete DFA for this automaton's language.
    ///
    /// Unreachable states are dropped and equivalent states merged. Each
    /// block of merged states takes the position of its smallest member, so
    /// an input that is already minimal comes back unchanged.
    pub fn minimize(&self) -> Dfa {
        let dfa = self.trim_unreachable();
        let block_of = hopcroft(&dfa);
        quotient(&dfa, &block_of)
    }

    /// Minimization by determinizing the reversal twice.
    pub fn minimize_brzozowski(&self) -> Dfa {
        reverse_determinize(&reverse_determinize(self))
    }
}

/// Accessible DFA for the reversed language. An automaton without final
/// states maps straight to the 1-state empty language, since its reversal
/// has no initial states to start the subset construction from.
fn reverse_determinize(d: &Dfa) -> Dfa {
    if d.final_count() == 0 {
        return Dfa::empty_language(d.alphabet().clone());
    }
    d.to_nfa().reversed().determinize().0
}

/// Coarsest partition of the states of `dfa` compatible with acceptance and
/// the transitions; returns the block index of every state.
fn hopcroft(dfa: &Dfa) -> Vec<usize> {
    let n = dfa.state_count();
    let k = dfa.alphabet().len();

    // inverse[a][q] = predecessors of q on a
    let mut inverse = vec![vec![Vec::new(); n]; k];
    for p in 0..n {
        for (a, &q) in dfa.row(p).iter().enumerate() {
            inverse[a][q].push(p);
        }
    }

    let (finals, others): (Vec<usize>, Vec<usize>) = (0..n).partition(|&q| dfa.is_final(q));
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut block_of = vec![0; n];
    for part in [finals, others] {
        if !part.is_empty() {
            for &q in &part {
                block_of[q] = blocks.len();
            }
            blocks.push(part);
        }
    }

    let mut pending: Vec<Vec<bool>> = vec![vec![false; k]; blocks.len()];
    let mut worklist = Vec::new();
    if blocks.len() == 2 {
        let smaller = if blocks[0].len() <= blocks[1].len() {
            0
        } else {
            1
        };
        for a in 0..k {
            worklist.push((smaller, a));
            pending[smaller][a] = true;
        }
    }

    let mut marked = vec![false; n];
    while let Some((splitter, a)) = worklist.pop() {
        pending[splitter][a] = false;
        let preimage: Vec<usize> = blocks[splitter]
            .iter()
            .flat_map(|&q| inverse[a][q].iter().copied())
            .collect();
        let mut touched = Vec::new();
        for &p in &preimage {
            if !marked[p] {
                marked[p] = true;
                let b = block_of[p];
                if !touched.contains(&b) {
                    touched.push(b);
                }
            }
        }
        for b in touched {
            let (inside, outside): (Vec<usize>, Vec<usize>) =
                blocks[b].iter().partition(|&&q| marked[q]);
            if outside.is_empty() {
                continue;
            }
            let new = blocks.len();
            let (keep, moved) = if inside.len() <= outside.len() {
                (outside, inside)
            } else {
                (inside, outside)
            };
            for &q in &moved {
                block_of[q] = new;
            }
            blocks[b] = keep;
            blocks.push(moved);
            pending.push(vec![false; k]);
            // Whether or not (b, c) is still pending, queueing the smaller
            // half keeps the worklist a valid set of splitters.
            for c in 0..k {
                pending[new][c] = true;
                worklist.push((new, c));
            }
        }
        for p in preimage {
            marked[p] = false;
        }
    }
    block_of
}

fn quotient(dfa: &Dfa, block_of: &[usize]) -> Dfa {
    let n = dfa.state_count();
    // Number blocks by their smallest member.
    let mut rank = vec![usize::MAX; n];
    let mut representatives = Vec::new();
    for q in 0..n {
        let b = block_of[q];
        if rank[b] == usize::MAX {
            rank[b] = representatives.len();
            representatives.push(q);
        }
    }
    let delta = representatives
        .iter()
        .flat_map(|&q| dfa.row(q).iter().map(|&t| rank[block_of[t]]))
        .collect();
    let finals = representatives
        .iter()
        .enumerate()
        .filter(|(_, &q)| dfa.is_final(q))
        .map(|(i, _)| i);
    Dfa::from_table(
        dfa.alphabet().clone(),
        representatives.len(),
        rank[block_of[dfa.initial()]],
        finals,
        delta,
    )
    .expect("quotient of a complete dfa is complete")
}

#[cfg(test)]
mod tests {
    use crate::alphabet::Alphabet;
    use crate::automata::dfa::Dfa;

    #[test]
    fn single_state_is_unchanged() {
        let d = Dfa::universal(Alphabet::letters(2));
        assert_eq!(d.minimize(), d);
        let e = Dfa::empty_language(Alphabet::letters(2));
        assert_eq!(e.minimize(), e);
        assert_eq!(e.minimize_brzozowski().state_count(), 1);
    }

    #[test]
    fn merges_identical_final_rows() {
        // 0 -> 1 -> 2 -> 1 with 1 and 2 final: both accept a*.
        let d = Dfa::new(
            Alphabet::letters(1),
            0,
            [1, 2],
            vec![vec![1], vec![2], vec![1]],
        )
        .unwrap();
        let m = d.minimize();
        assert_eq!(m.state_count(), 2);
        assert_eq!(d.minimize_brzozowski().state_count(), 2);
    }

    #[test]
    fn minimal_input_is_returned_unchanged() {
        // words over {a,b} whose number of a's is 2 mod 3
        let d = Dfa::new(
            Alphabet::letters(2),
            0,
            [2],
            vec![vec![1, 0], vec![2, 1], vec![0, 2]],
        )
        .unwrap();
        assert_eq!(d.minimize(), d);
    }

    #[test]
    fn drops_unreachable_states() {
        let d = Dfa::new(Alphabet::letters(1), 0, [0, 1], vec![vec![0], vec![1]]).unwrap();
        assert_eq!(d.minimize().state_count(), 1);
    }
}
