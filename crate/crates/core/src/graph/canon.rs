//! Canonical labeling by equitable partition refinement and backtracking.
//!
//! The search tree individualizes one vertex of the first non-singleton
//! cell at every level and refines. Each leaf yields a relabeled graph; the
//! lexicographically largest adjacency (row masks, in position order) is the
//! canonical one. Leaves that reproduce the current best certificate expose
//! automorphisms, which prune sibling subtrees lying in the same orbit under
//! the automorphisms that fix the current individualization prefix.

use super::{bit, bits, Graph};
use crate::enumeration::graph6;

/// Result of canonical labeling.
#[derive(Clone, Debug)]
pub struct CanonicalLabeling {
    /// `order[p]` is the original vertex placed at canonical position `p`.
    order: Vec<usize>,
    graph: Graph,
    automorphisms: Vec<Vec<usize>>,
}

impl CanonicalLabeling {
    /// Original vertex at each canonical position.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Canonical position of each original vertex.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (p, &v) in self.order.iter().enumerate() {
            pos[v] = p;
        }
        pos
    }

    /// The canonically relabeled graph.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    /// graph6 bytes of the canonical graph.
    pub fn form(&self) -> Vec<u8> {
        graph6::encode_bytes(&self.graph)
    }

    /// Automorphisms discovered during the search (vertex maps). They
    /// generate a subgroup of the automorphism group; for pruning purposes
    /// they are usually the whole group.
    pub fn automorphisms(&self) -> &[Vec<usize>] {
        &self.automorphisms
    }
}

pub(super) fn canonical_labeling(g: &Graph) -> CanonicalLabeling {
    let n = g.order();
    let mut search = Search {
        g,
        best: None,
        automorphisms: Vec::new(),
    };
    let mut prefix = Vec::with_capacity(n);
    search.descend(vec![g.vertex_mask()], &mut prefix);
    let (cert, order) = search.best.expect("search visits at least one leaf");
    CanonicalLabeling {
        order,
        graph: Graph::from_rows_unchecked(cert),
        automorphisms: search.automorphisms,
    }
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn descend(&mut self, mut cells: Vec<u64>, prefix: &mut Vec<usize>) {
        refine(self.g, &mut cells);
        let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
            self.leaf(&cells);
            return;
        };
        let mut tried = 0u64;
        for v in bits(cells[target]) {
            if tried != 0 && self.equivalent_to_tried(v, tried, prefix) {
                continue;
            }
            tried |= bit(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(bit(v));
            child.push(cells[target] & !bit(v));
            child.extend_from_slice(&cells[target + 1..]);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
        }
    }

    fn leaf(&mut self, cells: &[u64]) {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let n = order.len();
        let mut pos = vec![0usize; n];
        for (p, &v) in order.iter().enumerate() {
            pos[v] = p;
        }
        let cert: Vec<u64> = order
            .iter()
            .map(|&v| bits(self.g.neighbors(v)).fold(0u64, |acc, u| acc | bit(pos[u])))
            .collect();
        match &self.best {
            None => self.best = Some((cert, order)),
            Some((best_cert, best_order)) => match cert.cmp(best_cert) {
                std::cmp::Ordering::Greater => self.best = Some((cert, order)),
                std::cmp::Ordering::Equal => {
                    let mut gamma = vec![0usize; n];
                    for p in 0..n {
                        gamma[best_order[p]] = order[p];
                    }
                    if gamma.iter().enumerate().any(|(v, &w)| v != w) {
                        self.automorphisms.push(gamma);
                    }
                }
                std::cmp::Ordering::Less => {}
            },
        }
    }

    /// True when some known automorphism fixing `prefix` pointwise maps a
    /// vertex of `tried` onto `v`.
    fn equivalent_to_tried(&self, v: usize, tried: u64, prefix: &[usize]) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.automorphisms {
            if prefix.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            any = true;
            for (x, &y) in gamma.iter().enumerate() {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    parent[rx] = ry;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        bits(tried).any(|u| find(&mut parent, u) == root)
    }
}

/// Splits cells until every vertex in a cell has the same number of
/// neighbors in every cell. Sub-cells are ordered by their count vectors,
/// so the result depends only on the isomorphism type of
/// (graph, ordered partition).
pub(crate) fn refine(g: &Graph, cells: &mut Vec<u64>) {
    loop {
        let mut next: Vec<u64> = Vec::with_capacity(cells.len());
        for &cell in cells.iter() {
            if cell.count_ones() == 1 {
                next.push(cell);
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = bits(cell)
                .map(|v| {
                    let row = g.neighbors(v);
                    (cells.iter().map(|&c| (row & c).count_ones()).collect(), v)
                })
                .collect();
            keyed.sort_unstable();
            let mut start = 0;
            while start < keyed.len() {
                let mut end = start + 1;
                while end < keyed.len() && keyed[end].0 == keyed[start].0 {
                    end += 1;
                }
                next.push(keyed[start..end].iter().fold(0u64, |acc, (_, v)| acc | bit(*v)));
                start = end;
            }
        }
        let done = next.len() == cells.len();
        *cells = next;
        if done {
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect::<Vec<_>>()
            .into_iter()
            .filter(|_| rng.random_bool(p))
            .collect();
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn canonical_graph_is_a_relabeling() {
        let g = Graph::path(5).unwrap();
        let lab = g.canonical_labeling();
        assert_eq!(&g.relabel(&lab.positions()).unwrap(), lab.graph());
    }

    #[test]
    fn invariant_under_relabeling() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..1000 {
            let n = rng.random_range(1..=12);
            let p = rng.random_range(0.1..0.9);
            let g = random_graph(&mut rng, n, p);
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let h = g.relabel(&perm).unwrap();
            assert_eq!(g.canonical_form(), h.canonical_form(), "{g:?} vs {h:?}");
        }
    }

    #[test]
    fn isomorphism_examples() {
        let k22 = Graph::complete_multipartite(&[2, 2]).unwrap();
        assert!(k22.is_isomorphic(&Graph::cycle(4).unwrap()));
        let k13 = Graph::complete_multipartite(&[1, 3]).unwrap();
        let k3k1 = Graph::complete(3).unwrap().union(&Graph::complete(1).unwrap()).unwrap();
        assert!(!k13.is_isomorphic(&k3k1));
        // Same degree sequence, not isomorphic: C6 vs 2K3.
        let c6 = Graph::cycle(6).unwrap();
        let two_k3 = Graph::complete(3).unwrap().copies(2).unwrap();
        assert_ne!(c6.canonical_form(), two_k3.canonical_form());
    }

    #[test]
    fn symmetric_graphs_finish_quickly() {
        for n in [9usize, 16, 30] {
            let e = Graph::edgeless(n).unwrap();
            let lab = e.canonical_labeling();
            assert_eq!(lab.graph(), &e);
            assert!(!lab.automorphisms().is_empty());
        }
        let petersen = Graph::from_edges(
            10,
            [
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        )
        .unwrap();
        let mut perm: Vec<usize> = (0..10).collect();
        perm.reverse();
        assert_eq!(
            petersen.canonical_form(),
            petersen.relabel(&perm).unwrap().canonical_form()
        );
    }

    #[test]
    fn discovered_automorphisms_are_automorphisms() {
        let g = Graph::cycle(8).unwrap();
        let lab = g.canonical_labeling();
        for gamma in lab.automorphisms() {
            assert_eq!(&g.relabel(gamma).unwrap(), &g);
        }
    }
}
