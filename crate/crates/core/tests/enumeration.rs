mod common;

use std::collections::HashSet;

use common::{burnside_count, labeled_brute_force};
use num_bigint::BigUint;
use qspectra::enumeration::graph6::{decode_lines, encode_lines};
use qspectra::enumeration::{classes, enumerate_graphs, graph6, Filter};
use qspectra::Graph;

#[test]
fn counts_match_labeled_brute_force() {
    for n in 1..=6 {
        assert_eq!(classes(n).unwrap().len(), labeled_brute_force(n, false), "n = {n}");
        let connected = enumerate_graphs(n, Filter::Connected).unwrap().count();
        assert_eq!(connected, labeled_brute_force(n, true), "connected, n = {n}");
    }
}

#[test]
fn counts_match_burnside() {
    assert_eq!(burnside_count(4), BigUint::from(11u32));
    for n in 1..=8 {
        assert_eq!(BigUint::from(classes(n).unwrap().len()), burnside_count(n), "n = {n}");
    }
}

#[test]
fn classes_are_pairwise_non_isomorphic() {
    for n in 1..=7 {
        let level = classes(n).unwrap();
        let forms: HashSet<Vec<u8>> = level.iter().map(Graph::canonical_form).collect();
        assert_eq!(forms.len(), level.len());
        let disconnected = enumerate_graphs(n, Filter::Disconnected).unwrap().count();
        let connected = enumerate_graphs(n, Filter::Connected).unwrap().count();
        assert_eq!(connected + disconnected, level.len());
    }
}

#[test]
fn graph6_streams_round_trip() {
    for n in 1..=7 {
        let level = classes(n).unwrap();
        let text = encode_lines(level.iter());
        assert_eq!(decode_lines(&text).unwrap(), *level);
        assert_eq!(encode_lines(decode_lines(&text).unwrap().iter()), text);
        for g in level.iter() {
            assert_eq!(graph6::decode(&graph6::encode(g)).unwrap(), *g);
        }
        let again: Vec<Graph> = enumerate_graphs(n, Filter::All).unwrap().collect();
        assert_eq!(encode_lines(again.iter()), text, "stream is not deterministic at n = {n}");
    }
}

#[test]
fn graph6_matches_reference_strings() {
    // Upper triangle packed column by column, six bits per byte, plus 63.
    assert_eq!(graph6::encode(&Graph::complete(3).unwrap()), "Bw");
    assert_eq!(graph6::encode(&Graph::path(4).unwrap()), "Ch");
    assert_eq!(graph6::encode(&Graph::edgeless(1).unwrap()), "@");
    assert_eq!(graph6::encode(&Graph::complete(5).unwrap()), "D~{");
    assert_eq!(graph6::decode("D~{").unwrap(), Graph::complete(5).unwrap());
}
