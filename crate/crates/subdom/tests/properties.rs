//! Property tests for the structural invariants that should hold on
//! arbitrary graphs, not just the named families.

mod common;

use proptest::prelude::*;

use subdom::graph::Graph;
use subdom::graph6::{parse_graph6_record, write_graph6_record, Strictness};
use subdom::invariants::{sub_total_domination, subadditivity_check};
use subdom::solver::{gamma_t_bruteforce, gamma_t_exact, greedy_td_upper_bound, SolverConfig};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let bits = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), bits).prop_map(move |bv| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for col in 1..n {
                for row in 0..col {
                    if bv[idx] {
                        edges.push((row, col));
                    }
                    idx += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// Connects each isolated vertex to its successor so the graph becomes
/// isolate-free without randomness.
fn patch_isolates(g: Graph) -> Graph {
    let n = g.order();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for v in g.vertices().filter(|&v| g.degree(v) == 0) {
        edges.push((v, (v + 1) % n));
    }
    Graph::from_edges(n, edges).unwrap()
}

fn arb_isolate_free(max_n: usize) -> impl Strategy<Value = Graph> {
    arb_graph(max_n)
        .prop_filter("need n >= 2", |g| g.order() >= 2)
        .prop_map(patch_isolates)
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(16)) {
        let record = write_graph6_record(&g).unwrap();
        let back = parse_graph6_record(record.as_bytes(), Strictness::Strict).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_graph6_record(&back).unwrap(), record);
    }

    #[test]
    fn handshake_lemma(g in arb_graph(24)) {
        let ds = g.degree_sequence();
        prop_assert_eq!(ds.prefix()[g.order()], 2 * g.size() as u64);
    }

    #[test]
    fn union_merges_degree_multisets(g in arb_graph(12), h in arb_graph(12)) {
        let union = g.disjoint_union(&h);
        prop_assert_eq!(union.order(), g.order() + h.order());
        prop_assert_eq!(union.size(), g.size() + h.size());
        prop_assert_eq!(
            union.degree_sequence(),
            g.degree_sequence().merge(&h.degree_sequence())
        );
        prop_assert!(union.check_invariants());
    }

    #[test]
    fn sub_t_ignores_vertex_labels(g in arb_isolate_free(12), seed in any::<u64>()) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        // Fisher-Yates driven by the seed.
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        let relabeled = g.permuted(&perm).unwrap();
        prop_assert_eq!(
            sub_total_domination(&g.degree_sequence()).unwrap(),
            sub_total_domination(&relabeled.degree_sequence()).unwrap()
        );
    }

    #[test]
    fn sub_t_is_minimal_and_bounded(g in arb_isolate_free(16)) {
        let ds = g.degree_sequence();
        let k = sub_total_domination(&ds).unwrap();
        let n = g.order() as u64;
        prop_assert!(ds.prefix()[k] >= n);
        prop_assert!(ds.prefix()[k - 1] < n);
        prop_assert!(k >= 2);
        prop_assert!(k <= g.order());
        // The degree argument, checked in exact integers.
        prop_assert!(k as u64 * ds.max_degree() as u64 >= n);
    }

    #[test]
    fn sub_t_is_subadditive(g in arb_isolate_free(12), h in arb_isolate_free(12)) {
        prop_assert!(subadditivity_check(&g, &h).unwrap());
    }

    #[test]
    fn greedy_certificates_are_valid(g in arb_isolate_free(20)) {
        let cert = greedy_td_upper_bound(&g).unwrap();
        prop_assert!(cert.is_valid());
        prop_assert_eq!(cert.size, cert.vertices.count());
    }

    #[test]
    fn solver_matches_bruteforce(g in arb_isolate_free(9)) {
        let exact = gamma_t_exact(&g, &SolverConfig::default()).unwrap();
        prop_assert!(exact.optimal);
        prop_assert_eq!(exact.gamma_t, gamma_t_bruteforce(&g).unwrap());
        prop_assert!(exact.certificate.is_valid());
        let sub = sub_total_domination(&g.degree_sequence()).unwrap();
        prop_assert!(exact.gamma_t >= sub);
    }
}
