//! Total dominating set verification and exact computation of the total
//! domination number.
//!
//! The exact solver runs iterative deepening on the set cardinality,
//! starting at the sub-total domination lower bound, so the lower bound
//! directly prunes the search. Coverage tests are word-parallel, which
//! is why exact solving is capped at one machine word of vertices.

use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::invariants::sub_total_domination;

/// Default cap on the order of exactly solved graphs.
pub const DEFAULT_CAP: usize = 32;
/// Hard ceiling: adjacency must fit one word for the solver's masks.
pub const MAX_CAP: usize = 64;
/// Hard cap for the exhaustive-enumeration oracle.
pub const BRUTEFORCE_CAP: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("graph has an isolated vertex; no total dominating set exists")]
    IsolatePresent,
    #[error("graph on {order} vertices is too small; need at least 2")]
    OrderTooSmall { order: usize },
    #[error("graph on {order} vertices exceeds the solver cap of {cap}")]
    ExceedsCap { order: usize, cap: usize },
    #[error("cap {cap} exceeds the supported maximum {MAX_CAP}")]
    CapTooLarge { cap: usize },
}

/// A vertex set together with the union of its members' open
/// neighborhoods; the set totally dominates iff that union is everything.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TdCertificate {
    pub vertices: VertexSet,
    pub size: usize,
    pub covered: VertexSet,
}

impl TdCertificate {
    pub fn is_valid(&self) -> bool {
        self.covered.is_full()
    }
}

/// Evaluates whether `s` totally dominates `g`.
///
/// Open neighborhoods are what make domination total: members of `s`
/// must themselves have a neighbor inside `s`. Invalid sets produce
/// invalid certificates, not errors.
pub fn is_td_set(g: &Graph, s: &VertexSet) -> TdCertificate {
    assert_eq!(s.universe(), g.order(), "set ranges over a different vertex universe");
    let mut covered = VertexSet::empty(g.order());
    for v in s.iter() {
        covered.union_with(g.neighbors(v));
    }
    TdCertificate { vertices: s.clone(), size: s.count(), covered }
}

#[derive(Debug, Clone, Copy)]
pub struct SolverConfig {
    /// Largest order this solver will attempt, at most [`MAX_CAP`].
    pub cap: usize,
    /// Search-node budget; `None` means unbounded. Counted in expanded
    /// nodes, not wall-clock, so runs are reproducible across machines.
    pub budget: Option<u64>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { cap: DEFAULT_CAP, budget: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    /// The total domination number when `optimal`, otherwise the best
    /// known upper bound at budget exhaustion.
    pub gamma_t: usize,
    pub certificate: TdCertificate,
    pub optimal: bool,
    pub nodes_explored: u64,
}

enum Outcome {
    Found(u64),
    Exhausted,
    OutOfBudget,
}

struct Search<'a> {
    adj: &'a [u64],
    full: u64,
    /// All vertices in branching order: decreasing degree, then index.
    try_order: &'a [usize],
    max_degree: usize,
    budget: Option<u64>,
    nodes: u64,
}

impl Search<'_> {
    fn dfs(&mut self, chosen: u64, count: usize, covered: u64, k: usize) -> Outcome {
        self.nodes += 1;
        if self.budget.is_some_and(|b| self.nodes > b) {
            return Outcome::OutOfBudget;
        }
        if covered == self.full {
            return Outcome::Found(chosen);
        }
        if count == k {
            return Outcome::Exhausted;
        }
        let uncovered = self.full & !covered;
        // Each added vertex covers at most max_degree new vertices.
        if count + (uncovered.count_ones() as usize).div_ceil(self.max_degree) > k {
            return Outcome::Exhausted;
        }
        // Some neighbor of the lowest uncovered vertex must join the set.
        let v = uncovered.trailing_zeros() as usize;
        let candidates = self.adj[v];
        for &u in self.try_order {
            if candidates >> u & 1 == 1 {
                match self.dfs(chosen | 1 << u, count + 1, covered | self.adj[u], k) {
                    Outcome::Exhausted => {}
                    other => return other,
                }
            }
        }
        Outcome::Exhausted
    }
}

fn adjacency_words(g: &Graph) -> Vec<u64> {
    g.vertices().map(|v| g.neighbors(v).as_word()).collect()
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Computes the total domination number exactly, with a certificate.
///
/// Iterative deepening starts at the sub-total domination number, so the
/// reported optimum can never fall below it. With a budget, exhaustion
/// yields the greedy upper bound flagged `optimal: false`.
pub fn gamma_t_exact(g: &Graph, config: &SolverConfig) -> Result<Solution, SolverError> {
    if config.cap > MAX_CAP {
        return Err(SolverError::CapTooLarge { cap: config.cap });
    }
    let n = g.order();
    if n < 2 {
        return Err(SolverError::OrderTooSmall { order: n });
    }
    if n > config.cap {
        return Err(SolverError::ExceedsCap { order: n, cap: config.cap });
    }
    let ds = g.degree_sequence();
    let lower = sub_total_domination(&ds).map_err(|_| SolverError::IsolatePresent)?;
    let greedy = greedy_td_upper_bound(g)?;

    if greedy.size == lower {
        return Ok(Solution { gamma_t: lower, certificate: greedy, optimal: true, nodes_explored: 0 });
    }

    let adj = adjacency_words(g);
    let mut try_order: Vec<usize> = g.vertices().collect();
    try_order.sort_by_key(|&v| (std::cmp::Reverse(adj[v].count_ones()), v));

    let mut search = Search {
        adj: &adj,
        full: full_mask(n),
        try_order: &try_order,
        max_degree: ds.max_degree(),
        budget: config.budget,
        nodes: 0,
    };

    for k in lower..greedy.size {
        match search.dfs(0, 0, 0, k) {
            Outcome::Found(mask) => {
                let certificate = is_td_set(g, &VertexSet::from_word(n, mask));
                debug_assert!(certificate.is_valid());
                return Ok(Solution {
                    gamma_t: certificate.size,
                    certificate,
                    optimal: true,
                    nodes_explored: search.nodes,
                });
            }
            Outcome::Exhausted => {}
            Outcome::OutOfBudget => {
                return Ok(Solution {
                    gamma_t: greedy.size,
                    certificate: greedy,
                    optimal: false,
                    nodes_explored: search.nodes,
                });
            }
        }
    }

    // Every cardinality below the greedy bound failed, so the greedy
    // certificate is optimal.
    Ok(Solution {
        gamma_t: greedy.size,
        certificate: greedy,
        optimal: true,
        nodes_explored: search.nodes,
    })
}

/// Exhaustive oracle: tries every vertex subset in increasing
/// cardinality order. Shares no search logic with [`gamma_t_exact`];
/// it exists to validate the solver on small graphs.
pub fn gamma_t_bruteforce(g: &Graph) -> Result<usize, SolverError> {
    let n = g.order();
    if n > BRUTEFORCE_CAP {
        return Err(SolverError::ExceedsCap { order: n, cap: BRUTEFORCE_CAP });
    }
    if n < 2 {
        return Err(SolverError::OrderTooSmall { order: n });
    }
    if !g.is_isolate_free() {
        return Err(SolverError::IsolatePresent);
    }
    let adj: Vec<u64> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u64, |w, u| w | 1 << u))
        .collect();
    let limit = 1u64 << n;
    for k in 2..=n {
        // Gosper's hack walks all masks of popcount k in increasing order.
        let mut mask = (1u64 << k) - 1;
        while mask < limit {
            if (0..n).all(|v| adj[v] & mask != 0) {
                return Ok(k);
            }
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            mask = r | ((mask ^ r) >> 2) / c;
        }
    }
    // The whole vertex set totally dominates any isolate-free graph.
    unreachable!("no total dominating set found on an isolate-free graph")
}

/// Greedy upper bound: repeatedly take the vertex covering the most
/// uncovered vertices (closed neighborhoods), then patch any member
/// still lacking a neighbor inside the set. Always returns a valid
/// certificate on isolate-free input.
pub fn greedy_td_upper_bound(g: &Graph) -> Result<TdCertificate, SolverError> {
    if !g.is_isolate_free() {
        return Err(SolverError::IsolatePresent);
    }
    let n = g.order();
    let closed: Vec<VertexSet> = g
        .vertices()
        .map(|v| {
            let mut s = g.neighbors(v).clone();
            s.insert(v);
            s
        })
        .collect();

    let mut chosen = VertexSet::empty(n);
    let mut covered = VertexSet::empty(n);
    while let Some(lowest_uncovered) = covered.first_absent() {
        let mut best = lowest_uncovered;
        let mut best_gain = 0;
        for v in 0..n {
            let gain = count_difference(&closed[v], &covered);
            if gain > best_gain {
                best = v;
                best_gain = gain;
            }
        }
        chosen.insert(best);
        covered.union_with(&closed[best]);
    }

    let unmatched: Vec<usize> = chosen
        .iter()
        .filter(|&u| !g.neighbors(u).intersects(&chosen))
        .collect();
    for u in unmatched {
        if g.neighbors(u).intersects(&chosen) {
            continue; // an earlier patch already fixed this member
        }
        let mate = g
            .neighbors(u)
            .iter()
            .max_by_key(|&w| (g.degree(w), std::cmp::Reverse(w)))
            .expect("isolate-free vertices have neighbors");
        chosen.insert(mate);
    }

    let certificate = is_td_set(g, &chosen);
    debug_assert!(certificate.is_valid());
    Ok(certificate)
}

fn count_difference(a: &VertexSet, b: &VertexSet) -> usize {
    a.words()
        .iter()
        .zip(b.words())
        .map(|(x, y)| (x & !y).count_ones() as usize)
        .sum()
}
