//! Sub-total domination: a linear-time degree-sequence lower bound on
//! the total domination number, an exact solver seeded by that bound,
//! and a batch survey pipeline over graph6 / edge-list streams.

pub mod edgelist;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod solver;
pub mod stream;
pub mod survey;

pub use graph::{DegreeSequence, Graph, VertexSet};
pub use invariants::{bound_chain, sub_total_domination, BoundChain, Rational};
pub use solver::{
    gamma_t_bruteforce, gamma_t_exact, greedy_td_upper_bound, is_td_set, Solution, SolverConfig,
    TdCertificate,
};
pub use stream::{GraphStream, StreamFormat};
pub use survey::{
    pair_union_check, survey_stream, tightness_filter, InvariantReport, SurveyOptions,
    SurveySummary,
};

#[cfg(test)]
pub(crate) mod testutil {
    use crate::graph::Graph;

    /// The Petersen graph: outer 5-cycle 0..5, inner pentagram 5..10,
    /// spokes between them.
    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, 5 + i));
        }
        Graph::from_edges(10, edges).unwrap()
    }
}
