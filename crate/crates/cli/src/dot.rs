//! Graphviz output. Parallel edges between the same pair of states are
//! merged into one edge with a comma-separated label.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::format::Automaton;

pub fn to_dot(automaton: &Automaton) -> String {
    let converted;
    let nfa = match automaton {
        Automaton::Dfa(d) => {
            converted = d.to_nfa();
            &converted
        }
        Automaton::Nfa(n) => n,
    };
    let alphabet = nfa.alphabet();

    let mut edges: BTreeMap<(usize, usize), Vec<&str>> = BTreeMap::new();
    for (p, a, q) in nfa.transitions() {
        edges.entry((p, q)).or_default().push(alphabet.symbol(a));
    }

    let mut s = String::new();
    s.push_str("digraph automaton {\n");
    s.push_str("\trankdir=LR;\n");
    for q in 0..nfa.state_count() {
        let shape = if nfa.is_final(q) {
            "doublecircle"
        } else {
            "circle"
        };
        writeln!(s, "\t{q} [shape={shape}];").unwrap();
    }
    for q in nfa.initials().ones() {
        writeln!(s, "\tstart{q} [shape=none,label=\"\",width=0,height=0];").unwrap();
        writeln!(s, "\tstart{q} -> {q};").unwrap();
    }
    for ((p, q), labels) in edges {
        writeln!(s, "\t{p} -> {q} [label=\"{}\"];", labels.join(",")).unwrap();
    }
    s.push_str("}\n");
    s
}
