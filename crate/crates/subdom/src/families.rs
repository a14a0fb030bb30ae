//! Generators for the named graph families used as test witnesses.
//!
//! Canonical labelings:
//! - `path(n)`: vertices `0..n` in path order.
//! - `cycle(n)`: path order plus the closing edge `(n-1, 0)`.
//! - `star(n)`: center `0`, leaves `1..n`.
//! - `double_star(a, b)`: centers `0` and `1`, then the `a` leaves of `0`,
//!   then the `b` leaves of `1`.
//! - `complete_bipartite(a, b)`: one side `0..a`, the other `a..a+b`.
//! - `circulant(n, offsets)`: `i ~ j` iff `(i - j) mod n` or `(j - i) mod n`
//!   is an offset.

use std::collections::BTreeSet;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{family} requires {requirement}, got {got}")]
    BadParameter {
        family: &'static str,
        requirement: &'static str,
        got: String,
    },
    #[error("unknown family name `{0}`")]
    UnknownFamily(String),
    #[error("{family} expects {expected}, got {got} parameters")]
    WrongArity {
        family: &'static str,
        expected: &'static str,
        got: usize,
    },
}

fn bad(family: &'static str, requirement: &'static str, got: impl ToString) -> FamilyError {
    FamilyError::BadParameter {
        family,
        requirement,
        got: got.to_string(),
    }
}

/// The path `P_n`.
pub fn path(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(bad("path", "n >= 1", n));
    }
    Ok(Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path edges are valid"))
}

/// The cycle `C_n`.
pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(bad("cycle", "n >= 3", n));
    }
    Ok(Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are valid"))
}

/// The star `K_{1,n-1}` on `n` vertices.
pub fn star(n: usize) -> Result<Graph, FamilyError> {
    if n < 2 {
        return Err(bad("star", "n >= 2", n));
    }
    Ok(Graph::from_edges(n, (1..n).map(|v| (0, v))).expect("star edges are valid"))
}

/// Two adjacent centers with `a` and `b` pendant leaves.
pub fn double_star(a: usize, b: usize) -> Result<Graph, FamilyError> {
    if a < 1 || b < 1 {
        return Err(bad("double_star", "leaf counts a, b >= 1", format!("({a}, {b})")));
    }
    let n = a + b + 2;
    let mut edges = vec![(0, 1)];
    edges.extend((0..a).map(|i| (0, 2 + i)));
    edges.extend((0..b).map(|i| (1, 2 + a + i)));
    Ok(Graph::from_edges(n, edges).expect("double star edges are valid"))
}

/// The complete graph `K_n`.
pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(bad("complete", "n >= 1", n));
    }
    Ok(Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        .expect("complete edges are valid"))
}

/// The complete bipartite graph `K_{a,b}`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, FamilyError> {
    if a < 1 || b < 1 {
        return Err(bad("complete_bipartite", "side sizes a, b >= 1", format!("({a}, {b})")));
    }
    Ok(Graph::from_edges(a + b, (0..a).flat_map(|u| (0..b).map(move |v| (u, a + v))))
        .expect("bipartite edges are valid"))
}

/// Circulant graph on `n` vertices with the given connection offsets.
///
/// Offsets are taken modulo `n` and folded with their negatives, so the
/// result is regular of degree `|S ∪ -S|`: an offset `s` contributes two
/// neighbors per vertex unless `2s = n`, which contributes one.
pub fn circulant(n: usize, offsets: &[usize]) -> Result<Graph, FamilyError> {
    if n < 2 {
        return Err(bad("circulant", "n >= 2", n));
    }
    if offsets.is_empty() {
        return Err(bad("circulant", "at least one offset", "none"));
    }
    let mut folded = BTreeSet::new();
    for &s in offsets {
        let r = s % n;
        if r == 0 {
            return Err(bad("circulant", "offsets nonzero mod n", s));
        }
        folded.insert(r.min(n - r));
    }
    let mut g = Graph::edgeless(n);
    for v in 0..n {
        for &s in &folded {
            g.add_edge(v, (v + s) % n).expect("circulant edges are valid");
        }
    }
    Ok(g)
}

/// The graph families the generator knows about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Star,
    DoubleStar,
    Complete,
    CompleteBipartite,
    Circulant,
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        Ok(match s {
            "path" => Family::Path,
            "cycle" => Family::Cycle,
            "star" => Family::Star,
            "double_star" | "double-star" => Family::DoubleStar,
            "complete" => Family::Complete,
            "complete_bipartite" | "complete-bipartite" => Family::CompleteBipartite,
            "circulant" => Family::Circulant,
            other => return Err(FamilyError::UnknownFamily(other.to_string())),
        })
    }
}

/// Dispatches to the family constructors from a flat parameter list, the
/// shape the CLI hands over. Circulant reads `n` followed by the offsets.
pub fn generate(family: Family, params: &[usize]) -> Result<Graph, FamilyError> {
    let arity = |name, expected: &'static str, want: usize| -> Result<(), FamilyError> {
        if params.len() == want {
            Ok(())
        } else {
            Err(FamilyError::WrongArity { family: name, expected, got: params.len() })
        }
    };
    match family {
        Family::Path => {
            arity("path", "1 parameter (n)", 1)?;
            path(params[0])
        }
        Family::Cycle => {
            arity("cycle", "1 parameter (n)", 1)?;
            cycle(params[0])
        }
        Family::Star => {
            arity("star", "1 parameter (n)", 1)?;
            star(params[0])
        }
        Family::DoubleStar => {
            arity("double_star", "2 parameters (a, b)", 2)?;
            double_star(params[0], params[1])
        }
        Family::Complete => {
            arity("complete", "1 parameter (n)", 1)?;
            complete(params[0])
        }
        Family::CompleteBipartite => {
            arity("complete_bipartite", "2 parameters (a, b)", 2)?;
            complete_bipartite(params[0], params[1])
        }
        Family::Circulant => {
            if params.len() < 2 {
                return Err(FamilyError::WrongArity {
                    family: "circulant",
                    expected: "n followed by at least one offset",
                    got: params.len(),
                });
            }
            circulant(params[0], &params[1..])
        }
    }
}
