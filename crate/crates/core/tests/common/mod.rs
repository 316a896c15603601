//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use std::collections::HashSet;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use qspectra::enumeration::{classes, graph6};
use qspectra::spectral::q_spectrum_float;
use qspectra::theorems::Problem;
use qspectra::Graph;

/// Isomorphism classes among all labeled graphs on `n` vertices.
pub fn labeled_brute_force(n: usize, connected_only: bool) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut forms = HashSet::new();
    for subset in 0u64..(1 << pairs.len()) {
        let edges = pairs.iter().enumerate().filter(|(i, _)| subset >> i & 1 == 1).map(|(_, &e)| e);
        let g = Graph::from_edges(n, edges).unwrap();
        if !connected_only || g.is_connected() {
            forms.insert(g.canonical_form());
        }
    }
    forms.len()
}

fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    (1..=max.min(n))
        .rev()
        .flat_map(|first| {
            partitions(n - first, first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// Number of unlabeled graphs by Burnside's lemma over the cycle types of
/// `S_n` acting on vertex pairs.
pub fn burnside_count(n: usize) -> BigUint {
    let factorial = |k: usize| (1..=k).fold(BigUint::one(), |a, i| a * i);
    let mut total = BigUint::zero();
    for lambda in partitions(n, n) {
        // Permutations of this cycle type: n! / prod(k^{m_k} m_k!).
        let mut denom = BigUint::one();
        for k in 1..=n {
            let m = lambda.iter().filter(|&&x| x == k).count();
            denom *= BigUint::from(k).pow(m as u32) * factorial(m);
        }
        let perms = factorial(n) / denom;
        let mut pair_cycles = 0usize;
        for (i, &a) in lambda.iter().enumerate() {
            pair_cycles += a / 2;
            for &b in &lambda[i + 1..] {
                pair_cycles += a.gcd(&b);
            }
        }
        total += perms * BigUint::from(2u32).pow(pair_cycles as u32);
    }
    total / factorial(n)
}

const TOL: f64 = 1e-8;

pub fn golden(name: &str) -> Vec<String> {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).unwrap().lines().map(String::from).collect()
}

fn float_count(g: &Graph, a: f64, b: f64) -> usize {
    q_spectrum_float(g).unwrap().into_iter().filter(|&x| x >= a - TOL && x <= b + TOL).count()
}

/// Search hits recomputed from float eigenvalues with a `1e-8` margin.
pub fn float_oracle(p: Problem, max_n: usize) -> Vec<String> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for g in classes(n).unwrap().iter() {
            let ds = g.degree_sequence();
            let hit = match p {
                Problem::P1 => float_count(g, ds.min() as f64, (2 * n - 2) as f64) == 3,
                Problem::P2 => g.is_connected() && float_count(g, 0.0, ds.max() as f64) == 3,
            };
            if hit {
                out.push(graph6::encode(g));
            }
        }
    }
    out
}
