//! Brute-force oracles shared by the integration tests. Nothing here calls
//! determinization, minimization or the combined constructions.
#![allow(dead_code)]

use sc_lab_core::Dfa;

/// All words over `k` symbols of length at most `max_len`, shortest first.
pub fn words(k: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<usize>| {
                (0..k).map(move |a| {
                    let mut v = w.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Membership in `L*` given membership in `L`, by dynamic programming over
/// split points.
pub fn in_star(word: &[usize], member: impl Fn(&[usize]) -> bool) -> bool {
    let n = word.len();
    let mut ok = vec![false; n + 1];
    ok[0] = true;
    for end in 1..=n {
        ok[end] = (0..end).any(|start| ok[start] && member(&word[start..end]));
    }
    ok[n]
}

/// Membership in `L1·L2` by trying every split.
pub fn in_catenation(
    word: &[usize],
    first: impl Fn(&[usize]) -> bool,
    second: impl Fn(&[usize]) -> bool,
) -> bool {
    (0..=word.len()).any(|i| first(&word[..i]) && second(&word[i..]))
}

pub fn reversed(word: &[usize]) -> Vec<usize> {
    word.iter().rev().copied().collect()
}

/// Table-filling: `dist[p][q]` is true iff some word separates `p` and `q`.
pub fn distinguishable_pairs(d: &Dfa) -> Vec<Vec<bool>> {
    let n = d.state_count();
    let k = d.alphabet().len();
    let mut dist = vec![vec![false; n]; n];
    for p in 0..n {
        for q in 0..n {
            dist[p][q] = d.is_final(p) != d.is_final(q);
        }
    }
    loop {
        let mut changed = false;
        for p in 0..n {
            for q in 0..n {
                if !dist[p][q] && (0..k).any(|a| dist[d.next(p, a)][d.next(q, a)]) {
                    dist[p][q] = true;
                    changed = true;
                }
            }
        }
        if !changed {
            return dist;
        }
    }
}

/// Number of states reachable from the initial state, by plain search.
pub fn reachable_count(d: &Dfa) -> usize {
    let mut seen = vec![false; d.state_count()];
    let mut stack = vec![d.initial()];
    seen[d.initial()] = true;
    while let Some(q) = stack.pop() {
        for a in 0..d.alphabet().len() {
            let t = d.next(q, a);
            if !seen[t] {
                seen[t] = true;
                stack.push(t);
            }
        }
    }
    seen.iter().filter(|&&s| s).count()
}

/// Size of the minimal DFA computed by brute force: reachable states
/// modulo the table-filling equivalence.
pub fn brute_minimal_size(d: &Dfa) -> usize {
    let dist = distinguishable_pairs(d);
    let mut seen = vec![false; d.state_count()];
    let mut stack = vec![d.initial()];
    seen[d.initial()] = true;
    while let Some(q) = stack.pop() {
        for a in 0..d.alphabet().len() {
            let t = d.next(q, a);
            if !seen[t] {
                seen[t] = true;
                stack.push(t);
            }
        }
    }
    let reach: Vec<usize> = (0..d.state_count()).filter(|&q| seen[q]).collect();
    let mut classes: Vec<usize> = Vec::new();
    for &q in &reach {
        if !classes.iter().any(|&r| !dist[r][q]) {
            classes.push(q);
        }
    }
    classes.len()
}
