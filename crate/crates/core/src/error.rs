use thiserror::Error;

/// Errors raised by automaton construction and the operations on top of it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,
    #[error("invalid symbol {0:?}: symbols must be non-empty and contain no whitespace, '#', ',' or '='")]
    InvalidSymbol(String),
    #[error("duplicate symbol {0:?} in alphabet")]
    DuplicateSymbol(String),
    #[error("symbol {0:?} is not in the alphabet")]
    UnknownSymbol(String),
    #[error("automaton must have at least one state")]
    NoStates,
    #[error("state {state} out of range (automaton has {state_count} states)")]
    StateOutOfRange { state: usize, state_count: usize },
    #[error("transition table has {found} entries, expected {expected}")]
    IncompleteTable { expected: usize, found: usize },
    #[error("nfa needs at least one initial state")]
    NoInitialStates,
    #[error("operands are over different alphabets")]
    AlphabetMismatch,
    #[error("automaton has unreachable states")]
    UnreachableStates,
    #[error("letter map must be total: {0}")]
    PartialLetterMap(String),
    #[error("letter map is not a bijection")]
    NotBijective,
    #[error("letter map is not an involution")]
    NotInvolutive,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("bound parameters out of range: {0}")]
    BoundRange(String),
    #[error("bound value overflows 64 bits")]
    Overflow,
    #[error("infeasible search budget: {space} candidates exceed the limit of {limit}")]
    InfeasibleBudget { space: u128, limit: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;
