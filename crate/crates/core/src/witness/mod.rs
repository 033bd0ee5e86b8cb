//! Worst-case operand families and a bounded search for witnesses that
//! have no explicit family.

mod search;

use std::fmt;

use crate::alphabet::Alphabet;
use crate::automata::Dfa;
use crate::combined::{tight_bound_cat_rev, tight_bound_cat_star, StarCase};
use crate::error::{Error, Result};

pub use search::{search_witness, Constraint, SearchBudget, SearchMode, SearchOp, SearchReport};

/// Where a witness pair came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// The explicit catenation-with-star family (second operand has 2 states).
    CatStar,
    /// The explicit catenation-with-reversal family.
    CatRev,
    /// Found by [`search_witness`] for the given operation.
    Search(SearchOp),
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::CatStar => f.write_str("cat-star"),
            Family::CatRev => f.write_str("cat-rev"),
            Family::Search(op) => write!(f, "search:{op}"),
        }
    }
}

/// An operand pair together with the minimal size its combined result is
/// predicted to reach.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessPair {
    pub a: Dfa,
    pub b: Dfa,
    pub family: Family,
    pub m: u32,
    pub n: u32,
    pub predicted: u64,
}

/// Operands `A` (m states) and `B` (2 states) over `{a, b, c}` whose
/// catenation-with-star needs `3m - 1` states.
pub fn gen_cat_star_witness(m: u32) -> Result<WitnessPair> {
    if m < 2 {
        return Err(Error::Precondition(format!(
            "cat-star witness needs m >= 2, got {m}"
        )));
    }
    let size = m as usize;
    let last = size - 1;
    let rows = (0..size)
        .map(|i| {
            let on_a = (i + 1) % size;
            // b and c advance like a below m-2, wrap from m-2 to 0 and
            // differ only on q_{m-1}.
            let advance = if i + 2 < size { i + 1 } else { 0 };
            if i == last {
                vec![on_a, size - 2, last]
            } else {
                vec![on_a, advance, advance]
            }
        })
        .collect();
    let a = Dfa::new(Alphabet::letters(3), 0, [last], rows)?;
    let b = Dfa::new(
        Alphabet::letters(3),
        0,
        [1],
        vec![vec![1, 0, 0], vec![0, 1, 0]],
    )?;
    Ok(WitnessPair {
        a,
        b,
        family: Family::CatStar,
        m,
        n: 2,
        predicted: tight_bound_cat_star(m, 2, StarCase::General)?,
    })
}

/// Operands `M` (m states) and `N` (n states) over `{a, b, c}` whose
/// catenation-with-reversal needs `m·2^n - 2^(n-1) - m + 1` states.
pub fn gen_cat_rev_witness(m: u32, n: u32) -> Result<WitnessPair> {
    if m < 2 || n < 2 {
        return Err(Error::Precondition(format!(
            "cat-rev witness needs m, n >= 2, got m={m}, n={n}"
        )));
    }
    let (ms, ns) = (m as usize, n as usize);
    let first = Dfa::new(
        Alphabet::letters(3),
        0,
        [ms - 1],
        (0..ms).map(|i| vec![i, i, (i + 1) % ms]).collect(),
    )?;
    let second = Dfa::new(
        Alphabet::letters(3),
        0,
        [0],
        (0..ns)
            .map(|i| {
                let on_a = if i == 0 { ns - 1 } else { i - 1 };
                let on_b = if i == 0 { 1 } else { i };
                let on_c = match i {
                    0 => 1,
                    1 => 0,
                    j => j,
                };
                vec![on_a, on_b, on_c]
            })
            .collect(),
    )?;
    Ok(WitnessPair {
        a: first,
        b: second,
        family: Family::CatRev,
        m,
        n,
        predicted: tight_bound_cat_rev(m, n)?,
    })
}
