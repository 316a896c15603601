//! The three-eigenvalue searches against frozen outputs, re-derived here
//! from the float eigensolver.

mod common;

use common::{float_oracle, golden};
use qspectra::enumeration::graph6;
use qspectra::theorems::{search_problem, Problem};
use qspectra::Graph;

fn canonical(g: Graph) -> String {
    graph6::encode(&g.canonical_labeling().into_graph())
}

#[test]
fn p1_matches_golden_and_oracle() {
    let hits: Vec<String> = search_problem(Problem::P1, 5).unwrap().into_iter().map(|h| h.graph6).collect();
    assert_eq!(hits, golden("p1_max5.g6"));
    assert_eq!(hits, float_oracle(Problem::P1, 5));
    assert!(hits.contains(&canonical(Graph::cycle(4).unwrap())));
    assert!(hits.contains(&canonical(Graph::complete(4).unwrap().delete_edge(0, 1).unwrap())));
    assert!(!hits.contains(&canonical(Graph::complete(3).unwrap())));
}

#[test]
fn p2_matches_golden_and_oracle() {
    let hits: Vec<String> = search_problem(Problem::P2, 5).unwrap().into_iter().map(|h| h.graph6).collect();
    assert_eq!(hits, golden("p2_max5.g6"));
    assert_eq!(hits, float_oracle(Problem::P2, 5));
    assert!(hits.contains(&canonical(Graph::path(4).unwrap())));
}
