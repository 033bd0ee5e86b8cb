//! Complete DFAs, ε-free NFAs, determinization, minimization and equivalence.

mod dfa;
mod equiv;
mod minimize;
mod nfa;

pub use dfa::Dfa;
pub use nfa::{Nfa, StateSet, SubsetLabel};
