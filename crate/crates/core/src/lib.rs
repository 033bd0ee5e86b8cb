//! Finite automata and the combined regular operations `L1·L2*` and
//! `L1·L2^R`, with direct constructions, closed-form state-complexity
//! bounds, worst-case witness families and a verification harness that
//! checks measured minimal sizes against those bounds.

pub mod alphabet;
pub mod automata;
pub mod combined;
pub mod error;
pub mod harness;
pub mod ops;
pub mod witness;

pub use alphabet::Alphabet;
pub use automata::{Dfa, Nfa, StateSet, SubsetLabel};
pub use error::{Error, Result};
