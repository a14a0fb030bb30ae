//! Degree-sequence invariants: the sub-total domination number and the
//! lower-bound chain `gamma_t >= sub_t >= n / max_degree`.
//!
//! Everything here is a pure function of immutable inputs and runs in time
//! linear in the number of vertices once degrees are extracted.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::graph::{DegreeSequence, Graph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    /// The invariant is undefined when any vertex has degree zero.
    #[error("graph has an isolated vertex; sub-total domination is undefined")]
    IsolatePresent,
    #[error("graph on {order} vertices is too small; need at least {min}")]
    OrderTooSmall { order: usize, min: usize },
}

/// An exact nonnegative rational, kept unreduced. Comparisons
/// cross-multiply in 128 bits, so no rounding ever happens.
#[derive(Debug, Clone, Copy)]
pub struct Rational {
    num: u64,
    den: u64,
}

impl Rational {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational { num, den }
    }

    pub fn integer(k: u64) -> Self {
        Rational { num: k, den: 1 }
    }

    pub fn numerator(&self) -> u64 {
        self.num
    }

    pub fn denominator(&self) -> u64 {
        self.den
    }

    pub fn ceil(&self) -> u64 {
        self.num.div_ceil(self.den)
    }
}

impl PartialEq for Rational {
    fn eq(&self, other: &Self) -> bool {
        self.num as u128 * other.den as u128 == other.num as u128 * self.den as u128
    }
}

impl Eq for Rational {}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// The chain of lower bounds on the total domination number of one graph:
/// `gamma_t >= sub_t >= n / max_degree`, with the last term kept as an
/// exact rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundChain {
    pub order: usize,
    pub max_degree: usize,
    /// `order / max_degree`, never rounded.
    pub floor_bound: Rational,
    pub sub_t: usize,
    /// Present when an exact solver supplied the total domination number.
    pub gamma_t: Option<usize>,
}

impl BoundChain {
    /// True iff every inequality of the chain holds, compared exactly.
    pub fn holds(&self) -> bool {
        let sub_ge_floor = Rational::integer(self.sub_t as u64) >= self.floor_bound;
        let gamma_ge_sub = self.gamma_t.map_or(true, |g| g >= self.sub_t);
        sub_ge_floor && gamma_ge_sub
    }
}

/// Smallest `k` such that the `k` largest degrees sum to at least the
/// number of vertices. Defined only for isolate-free graphs on at least
/// one vertex, where the answer always exists and lies in `2..=n`.
pub fn sub_total_domination(ds: &DegreeSequence) -> Result<usize, InvariantError> {
    if ds.is_empty() {
        return Err(InvariantError::OrderTooSmall { order: 0, min: 1 });
    }
    if ds.min_degree() == 0 {
        return Err(InvariantError::IsolatePresent);
    }
    let n = ds.order() as u64;
    let prefix = ds.prefix();
    for k in 1..=ds.order() {
        if prefix[k] >= n {
            return Ok(k);
        }
    }
    // Isolate-free means the degree sum is at least n, so the scan
    // cannot fall through.
    unreachable!("degree sum below order on an isolate-free sequence")
}

/// Populates the bound chain for `g`, optionally attaching a solved
/// total domination number. The rational term is never rounded here;
/// callers may take ceilings for display.
pub fn bound_chain(g: &Graph, gamma_t: Option<usize>) -> Result<BoundChain, InvariantError> {
    let n = g.order();
    if n < 2 {
        return Err(InvariantError::OrderTooSmall { order: n, min: 2 });
    }
    let ds = g.degree_sequence();
    let sub_t = sub_total_domination(&ds)?;
    Ok(BoundChain {
        order: n,
        max_degree: ds.max_degree(),
        floor_bound: Rational::new(n as u64, ds.max_degree() as u64),
        sub_t,
        gamma_t,
    })
}

/// Checks that `sub_t(G) + sub_t(H) >= sub_t(G ∪ H)`; should hold for
/// every pair of isolate-free graphs, and is exposed so surveys can
/// assert it. The union's degree sequence is formed by merging, without
/// materializing the union graph.
pub fn subadditivity_check(g: &Graph, h: &Graph) -> Result<bool, InvariantError> {
    let dg = g.degree_sequence();
    let dh = h.degree_sequence();
    let sum = sub_total_domination(&dg)? + sub_total_domination(&dh)?;
    let union_sub = sub_total_domination(&dg.merge(&dh))?;
    Ok(sum >= union_sub)
}
