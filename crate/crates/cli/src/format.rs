//! Line-oriented automaton files.
//!
//! ```text
//! type: dfa
//! alphabet: a b c
//! states: 4
//! initial: 0
//! final: 3
//! trans: 0 a 1
//! ```
//!
//! `#` starts a comment; blank lines are ignored. Serialization writes the
//! fields in the order above with transitions sorted by state, then symbol.

use std::fmt::Write as _;

use sc_lab_core::{Alphabet, Dfa, Nfa};
use thiserror::Error;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Automaton {
    Dfa(Dfa),
    Nfa(Nfa),
}

impl Automaton {
    pub fn alphabet(&self) -> &Alphabet {
        match self {
            Automaton::Dfa(d) => d.alphabet(),
            Automaton::Nfa(n) => n.alphabet(),
        }
    }

    /// The automaton as a DFA, determinizing if needed.
    pub fn into_dfa(self) -> Dfa {
        match self {
            Automaton::Dfa(d) => d,
            Automaton::Nfa(n) => n.determinize().0,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing field `{0}`")]
    Missing(&'static str),
    #[error("{0}")]
    Structure(String),
    #[error(transparent)]
    Invalid(#[from] sc_lab_core::Error),
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        msg: msg.into(),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Dfa,
    Nfa,
}

#[derive(Default)]
struct Fields {
    kind: Option<Kind>,
    alphabet: Option<Alphabet>,
    states: Option<usize>,
    initial: Option<Vec<usize>>,
    finals: Option<Vec<usize>>,
    // (line, state, symbol, target), symbols resolved once the alphabet is known
    trans: Vec<(usize, String, String, String)>,
}

fn set_once<T>(slot: &mut Option<T>, value: T, key: &str, line: usize) -> Result<(), ParseError> {
    if slot.is_some() {
        return Err(syntax(line, format!("duplicate field `{key}`")));
    }
    *slot = Some(value);
    Ok(())
}

fn number(word: &str, line: usize) -> Result<usize, ParseError> {
    word.parse()
        .map_err(|_| syntax(line, format!("expected a state number, found {word:?}")))
}

fn numbers(value: &str, line: usize) -> Result<Vec<usize>, ParseError> {
    value.split_whitespace().map(|w| number(w, line)).collect()
}

pub fn parse(text: &str) -> Result<Automaton, ParseError> {
    let mut f = Fields::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content
            .split_once(':')
            .ok_or_else(|| syntax(line, "expected `key: value`"))?;
        let value = value.trim();
        match key.trim() {
            "type" => {
                let kind = match value {
                    "dfa" => Kind::Dfa,
                    "nfa" => Kind::Nfa,
                    other => return Err(syntax(line, format!("unknown type {other:?}"))),
                };
                set_once(&mut f.kind, kind, "type", line)?;
            }
            "alphabet" => {
                let alphabet = Alphabet::new(value.split_whitespace())?;
                set_once(&mut f.alphabet, alphabet, "alphabet", line)?;
            }
            "states" => set_once(&mut f.states, number(value, line)?, "states", line)?,
            "initial" => set_once(&mut f.initial, numbers(value, line)?, "initial", line)?,
            "final" => set_once(&mut f.finals, numbers(value, line)?, "final", line)?,
            "trans" => match value.split_whitespace().collect::<Vec<_>>()[..] {
                [p, a, q] => f.trans.push((line, p.into(), a.into(), q.into())),
                _ => return Err(syntax(line, "expected `trans: <state> <symbol> <state>`")),
            },
            other => return Err(syntax(line, format!("unknown field {other:?}"))),
        }
    }

    let kind = f.kind.ok_or(ParseError::Missing("type"))?;
    let alphabet = f.alphabet.ok_or(ParseError::Missing("alphabet"))?;
    let states = f.states.ok_or(ParseError::Missing("states"))?;
    let initial = f.initial.ok_or(ParseError::Missing("initial"))?;
    let finals = f.finals.ok_or(ParseError::Missing("final"))?;
    let mut transitions = Vec::with_capacity(f.trans.len());
    for (line, p, a, q) in &f.trans {
        let a = alphabet.index_of(a)?;
        transitions.push((*line, number(p, *line)?, a, number(q, *line)?));
    }

    match kind {
        Kind::Dfa => {
            let [initial] = initial[..] else {
                return Err(ParseError::Structure(
                    "a dfa has exactly one initial state".into(),
                ));
            };
            let k = alphabet.len();
            let mut rows = vec![vec![None; k]; states];
            for &(line, p, a, q) in &transitions {
                let row = rows.get_mut(p).ok_or(sc_lab_core::Error::StateOutOfRange {
                    state: p,
                    state_count: states,
                })?;
                if row[a].replace(q).is_some() {
                    return Err(syntax(
                        line,
                        format!("second transition from {p} on {}", alphabet.symbol(a)),
                    ));
                }
            }
            let mut table = Vec::with_capacity(states);
            for (p, row) in rows.into_iter().enumerate() {
                let row = row
                    .into_iter()
                    .enumerate()
                    .map(|(a, q)| {
                        q.ok_or_else(|| {
                            ParseError::Structure(format!(
                                "no transition from {p} on {}",
                                alphabet.symbol(a)
                            ))
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                table.push(row);
            }
            Ok(Automaton::Dfa(Dfa::new(alphabet, initial, finals, table)?))
        }
        Kind::Nfa => {
            let transitions = transitions.into_iter().map(|(_, p, a, q)| (p, a, q));
            Ok(Automaton::Nfa(Nfa::new(
                alphabet,
                states,
                initial,
                finals,
                transitions,
            )?))
        }
    }
}

fn header(out: &mut String, kind: &str, alphabet: &Alphabet, states: usize) {
    writeln!(out, "type: {kind}").unwrap();
    writeln!(out, "alphabet: {alphabet}").unwrap();
    writeln!(out, "states: {states}").unwrap();
}

fn list(out: &mut String, key: &str, items: impl Iterator<Item = usize>) {
    out.push_str(key);
    out.push(':');
    for q in items {
        write!(out, " {q}").unwrap();
    }
    out.push('\n');
}

pub fn serialize(automaton: &Automaton) -> String {
    let mut out = String::new();
    match automaton {
        Automaton::Dfa(d) => {
            let alphabet = d.alphabet();
            header(&mut out, "dfa", alphabet, d.state_count());
            list(&mut out, "initial", std::iter::once(d.initial()));
            list(&mut out, "final", d.finals());
            for p in 0..d.state_count() {
                for (a, q) in d.row(p).iter().enumerate() {
                    writeln!(out, "trans: {p} {} {q}", alphabet.symbol(a)).unwrap();
                }
            }
        }
        Automaton::Nfa(n) => {
            let alphabet = n.alphabet();
            header(&mut out, "nfa", alphabet, n.state_count());
            list(&mut out, "initial", n.initials().ones());
            list(&mut out, "final", n.finals().ones());
            let mut transitions: Vec<_> = n.transitions().collect();
            transitions.sort_unstable();
            for (p, a, q) in transitions {
                writeln!(out, "trans: {p} {} {q}", alphabet.symbol(a)).unwrap();
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const A_PLUS: &str = "\
# a+ over {a, b}
type: dfa
alphabet: a b
states: 3
initial: 0
final: 1

trans: 0 a 1
trans: 0 b 2   # dead
trans: 1 a 1
trans: 1 b 2
trans: 2 a 2
trans: 2 b 2
";

    #[test]
    fn parses_and_serializes_canonically() {
        let parsed = parse(A_PLUS).unwrap();
        let text = serialize(&parsed);
        assert!(text.starts_with(
            "type: dfa\nalphabet: a b\nstates: 3\ninitial: 0\nfinal: 1\ntrans: 0 a 1\n"
        ));
        assert_eq!(parse(&text).unwrap(), parsed);
        assert_eq!(serialize(&parse(&text).unwrap()), text);
    }

    #[test]
    fn field_order_is_free_on_input() {
        let shuffled = "trans: 0 a 0\nfinal:\nstates: 1\ntype: dfa\ninitial: 0\nalphabet: a\n";
        let d = parse(shuffled).unwrap();
        assert_eq!(
            serialize(&d),
            "type: dfa\nalphabet: a\nstates: 1\ninitial: 0\nfinal:\ntrans: 0 a 0\n"
        );
    }

    #[test]
    fn nfa_round_trip_sorts_transitions() {
        let text = "type: nfa\nalphabet: a b\nstates: 2\ninitial: 1 0\nfinal: 1\ntrans: 1 a 0\ntrans: 0 b 1\ntrans: 0 a 1\ntrans: 0 a 0\n";
        let n = parse(text).unwrap();
        let out = serialize(&n);
        assert_eq!(
            out,
            "type: nfa\nalphabet: a b\nstates: 2\ninitial: 0 1\nfinal: 1\ntrans: 0 a 0\ntrans: 0 a 1\ntrans: 0 b 1\ntrans: 1 a 0\n"
        );
        assert_eq!(parse(&out).unwrap(), n);
    }

    #[test]
    fn rejects_malformed_files() {
        let base = "type: dfa\nalphabet: a\nstates: 1\ninitial: 0\nfinal: 0\n";
        assert!(matches!(parse(base), Err(ParseError::Structure(_))));
        assert!(matches!(
            parse(&format!("{base}trans: 0 a 0\ntrans: 0 a 0\n")),
            Err(ParseError::Syntax { line: 7, .. })
        ));
        assert!(matches!(
            parse(&format!("{base}trans: 0 z 0\n")),
            Err(ParseError::Invalid(_))
        ));
        assert!(matches!(
            parse(&format!("{base}trans: 0 a 3\n")),
            Err(ParseError::Invalid(_))
        ));
        assert!(matches!(
            parse(&format!("{base}trans: 0 a\n")),
            Err(ParseError::Syntax { line: 6, .. })
        ));
        assert!(matches!(
            parse(&format!("{base}states: 2\n")),
            Err(ParseError::Syntax { line: 6, .. })
        ));
        assert_eq!(parse("type: dfa\n"), Err(ParseError::Missing("alphabet")));
        assert!(
            parse("type: dfa\nalphabet: a\nstates: 1\ninitial: 0 0\nfinal:\ntrans: 0 a 0\n")
                .is_err()
        );
        assert!(parse("type: nfa\nalphabet: a\nstates: 1\ninitial:\nfinal:\n").is_err());
        assert!(parse("kind: dfa\n").is_err());
    }
}
