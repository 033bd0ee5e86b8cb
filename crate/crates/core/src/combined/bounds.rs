//! Closed-form state counts for the combined operations, plus the
//! individual-operation bounds they are compared against.

use crate::automata::Dfa;
use crate::error::{Error, Result};

/// Which combined operation, and for catenation-with-star which regime of
/// the second operand, a bound query refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundCase {
    /// `L1·L2*` where the second DFA has a final state other than its initial state.
    StarGeneral,
    /// `L1·L2*` where the second DFA's only final state is its initial state.
    StarFinalIsInitial,
    /// `L1·L2^R`.
    Rev,
}

/// Regime of the second operand of catenation-with-star.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StarCase {
    General,
    FinalIsInitial,
}

/// Operand sizes and final-state counts.
///
/// For catenation-with-star `k2` counts the second operand's final states
/// other than its initial state; for catenation-with-reversal it counts all
/// of them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BoundQuery {
    pub m: u32,
    pub n: u32,
    pub k1: u32,
    pub k2: u32,
    pub case: BoundCase,
}

impl BoundQuery {
    pub fn cat_star(m: u32, n: u32, k1: u32, k2: u32) -> Self {
        BoundQuery {
            m,
            n,
            k1,
            k2,
            case: BoundCase::StarGeneral,
        }
    }

    pub fn cat_rev(m: u32, n: u32, k1: u32, k2: u32) -> Self {
        BoundQuery {
            m,
            n,
            k1,
            k2,
            case: BoundCase::Rev,
        }
    }

    /// Parameters of a concrete catenation-with-star instance. The case is
    /// `StarFinalIsInitial` when no final state besides the initial one exists.
    pub fn of_cat_star(a: &Dfa, b: &Dfa) -> Self {
        let k2 = b.finals().filter(|&q| q != b.initial()).count() as u32;
        BoundQuery {
            m: a.state_count() as u32,
            n: b.state_count() as u32,
            k1: a.final_count() as u32,
            k2,
            case: if k2 == 0 {
                BoundCase::StarFinalIsInitial
            } else {
                BoundCase::StarGeneral
            },
        }
    }

    pub fn of_cat_rev(m: &Dfa, n: &Dfa) -> Self {
        BoundQuery::cat_rev(
            m.state_count() as u32,
            n.state_count() as u32,
            m.final_count() as u32,
            n.final_count() as u32,
        )
    }
}

fn pow2(exp: u32) -> Result<u64> {
    1u64.checked_shl(exp).ok_or(Error::Overflow)
}

fn mul(a: u64, b: u64) -> Result<u64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

fn add(a: u64, b: u64) -> Result<u64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

fn sub(a: u64, b: u64) -> Result<u64> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

fn range(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::BoundRange(what()))
    }
}

/// `m(2^(n-1) + 2^(n-k2-1)) - k1·2^(n-k2-1)`.
pub fn upper_bound_cat_star(q: &BoundQuery) -> Result<u64> {
    range(q.case == BoundCase::StarGeneral, || {
        format!("case {:?} is not StarGeneral", q.case)
    })?;
    range(q.m >= 2 && q.n >= 2, || {
        format!("need m, n >= 2, got m={}, n={}", q.m, q.n)
    })?;
    range(q.k1 <= q.m, || format!("k1={} exceeds m={}", q.k1, q.m))?;
    range(q.k2 >= 1 && q.k2 < q.n, || {
        format!("need 1 <= k2 <= n-1, got k2={}", q.k2)
    })?;
    let tail = pow2(q.n - q.k2 - 1)?;
    let per_state = add(pow2(q.n - 1)?, tail)?;
    sub(mul(q.m as u64, per_state)?, mul(q.k1 as u64, tail)?)
}

/// `m·2^n - k1·2^(n-k2)·(2^k2 - 1) - m + 1`.
pub fn upper_bound_cat_rev(q: &BoundQuery) -> Result<u64> {
    range(q.case == BoundCase::Rev, || {
        format!("case {:?} is not Rev", q.case)
    })?;
    range(q.m >= 1 && q.n >= 1, || {
        format!("need m, n >= 1, got m={}, n={}", q.m, q.n)
    })?;
    range(q.k1 >= 1 && q.k1 <= q.m, || {
        format!("need 1 <= k1 <= m, got k1={}", q.k1)
    })?;
    range(q.k2 >= 1 && q.k2 <= q.n, || {
        format!("need 1 <= k2 <= n, got k2={}", q.k2)
    })?;
    let m = q.m as u64;
    let excluded = mul(mul(q.k1 as u64, pow2(q.n - q.k2)?)?, pow2(q.k2)? - 1)?;
    add(sub(sub(mul(m, pow2(q.n)?)?, excluded)?, m)?, 1)
}

/// Worst-case minimal size of `L1·L2*` for operands of sizes `m` and `n`.
pub fn tight_bound_cat_star(m: u32, n: u32, case: StarCase) -> Result<u64> {
    range(m >= 1 && n >= 1, || {
        format!("need m, n >= 1, got m={m}, n={n}")
    })?;
    if m == 1 {
        return Ok(1);
    }
    if n == 1 {
        return Ok(m as u64);
    }
    match case {
        StarCase::FinalIsInitial => catenation_bound(m, n),
        StarCase::General => mul(3 * m as u64 - 1, pow2(n - 2)?),
    }
}

/// Worst-case minimal size of `L1·L2^R`: `m·2^n - 2^(n-1) - m + 1`.
pub fn tight_bound_cat_rev(m: u32, n: u32) -> Result<u64> {
    range(m >= 1 && n >= 1, || {
        format!("need m, n >= 1, got m={m}, n={n}")
    })?;
    add(sub(catenation_bound(m, n)?, m as u64)?, 1)
}

/// Worst-case minimal size of plain catenation: `m·2^n - 2^(n-1)`.
pub fn catenation_bound(m: u32, n: u32) -> Result<u64> {
    range(m >= 1 && n >= 1, || {
        format!("need m, n >= 1, got m={m}, n={n}")
    })?;
    sub(mul(m as u64, pow2(n)?)?, pow2(n - 1)?)
}

/// Catenation bound applied to the star bound: `(2m-1)·2^(2^(n-1) + 2^(n-2) - 1)`.
pub fn composed_bound_cat_star(m: u32, n: u32) -> Result<u64> {
    range(m >= 1 && n >= 2, || {
        format!("need m >= 1, n >= 2, got m={m}, n={n}")
    })?;
    let star = add(pow2(n - 1)?, pow2(n - 2)?)?;
    let exp = u32::try_from(star - 1).map_err(|_| Error::Overflow)?;
    mul(2 * m as u64 - 1, pow2(exp)?)
}

/// Catenation bound applied to the reversal bound: `m·2^(2^n) - 2^(2^n - 1)`.
pub fn composed_bound_cat_rev(m: u32, n: u32) -> Result<u64> {
    range(m >= 1 && n >= 1, || {
        format!("need m, n >= 1, got m={m}, n={n}")
    })?;
    let rev = u32::try_from(pow2(n)?).map_err(|_| Error::Overflow)?;
    sub(mul(m as u64, pow2(rev)?)?, pow2(rev - 1)?)
}
