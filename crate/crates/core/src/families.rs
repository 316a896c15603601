//! Structured graph families: the nested split graphs `G_n`, clique
//! replacements `G[K_{t_1}, ..., K_{t_s}]` with their quotient matrices, and
//! a few fixed small graphs.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::graph::{bit, bits, Graph, MAX_ORDER};
use crate::linalg::{charpoly, IntMatrix, IntPolynomial};

/// Label of `v_i` (1-based) in [`build_gn`]'s output.
pub fn gn_v(_n: usize, i: usize) -> usize {
    i - 1
}

/// Label of `w_j` (1-based) in [`build_gn`]'s output. The `w` clique is
/// stored in reverse so that `G_4` comes out as the path `0 - 1 - 2 - 3`.
pub fn gn_w(n: usize, j: usize) -> usize {
    n - j
}

/// The graph `G_n`: cliques on `v_1..v_⌈n/2⌉` and `w_1..w_⌊n/2⌋` with
/// `v_i ~ w_j` exactly when `i + j ≥ ⌊n/2⌋ + 2`.
pub fn build_gn(n: usize) -> Result<Graph> {
    if !(2..=MAX_ORDER).contains(&n) {
        return invalid(format!("G_n needs 2 <= n <= {MAX_ORDER}, got {n}"));
    }
    let (c, f) = (n.div_ceil(2), n / 2);
    let mut edges = Vec::new();
    for i in 1..=c {
        for i2 in i + 1..=c {
            edges.push((gn_v(n, i), gn_v(n, i2)));
        }
    }
    for j in 1..=f {
        for j2 in j + 1..=f {
            edges.push((gn_w(n, j), gn_w(n, j2)));
        }
        for i in 1..=c {
            if i + j >= f + 2 {
                edges.push((gn_v(n, i), gn_w(n, j)));
            }
        }
    }
    let g = Graph::from_edges(n, edges)?;
    validate_gn(&g, n)?;
    Ok(g)
}

fn validate_gn(g: &Graph, n: usize) -> Result<()> {
    let (c, f) = (n.div_ceil(2), n / 2);
    let v_set = (1..=c).fold(0u64, |m, i| m | bit(gn_v(n, i)));
    let w_set = (1..=f).fold(0u64, |m, j| m | bit(gn_w(n, j)));
    let closed = |x: usize| g.neighbors(x) | bit(x);
    let fail = |what: String| Err(Error::Construction(format!("G_{n}: {what}")));
    if g.induced_by_mask(v_set)?.edge_count() != c * (c - 1) / 2
        || (f > 0 && g.induced_by_mask(w_set)?.edge_count() != f * (f - 1) / 2)
    {
        return fail("parts are not cliques".into());
    }
    for i in 1..c {
        let (a, b) = (closed(gn_v(n, i)), closed(gn_v(n, i + 1)));
        if a & !b != 0 || a == b {
            return fail(format!("N[v_{i}] is not a proper subset of N[v_{}]", i + 1));
        }
    }
    for j in 1..f {
        let (a, b) = (closed(gn_w(n, j)), closed(gn_w(n, j + 1)));
        if a & !b != 0 || a == b {
            return fail(format!("N[w_{j}] is not a proper subset of N[w_{}]", j + 1));
        }
    }
    for i in 1..=c {
        if (closed(gn_v(n, i)) & w_set).count_ones() as usize != i - 1 {
            return fail(format!("v_{i} has the wrong number of cross neighbors"));
        }
    }
    for j in 1..=f {
        let want = if n % 2 == 0 { j - 1 } else { j };
        if (closed(gn_w(n, j)) & v_set).count_ones() as usize != want {
            return fail(format!("w_{j} has the wrong number of cross neighbors"));
        }
    }
    Ok(())
}

/// A pattern graph together with one clique size per pattern vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueReplacement {
    base: Graph,
    sizes: Vec<usize>,
}

impl CliqueReplacement {
    pub fn new(base: Graph, sizes: Vec<usize>) -> Result<Self> {
        if sizes.len() != base.order() {
            return invalid(format!(
                "{} block sizes for a pattern on {} vertices",
                sizes.len(),
                base.order()
            ));
        }
        if sizes.contains(&0) {
            return invalid("block sizes must be positive");
        }
        let total: usize = sizes.iter().sum();
        if total > MAX_ORDER {
            return invalid(format!("replaced graph would have {total} > {MAX_ORDER} vertices"));
        }
        Ok(CliqueReplacement { base, sizes })
    }

    /// `G_s[K_{t_1}, ..., K_{t_s}]`.
    pub fn gs(sizes: &[usize]) -> Result<Self> {
        if sizes.len() < 2 {
            return invalid("G_s needs s >= 2");
        }
        Self::new(build_gn(sizes.len())?, sizes.to_vec())
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// First label of each block.
    pub fn offsets(&self) -> Vec<usize> {
        self.sizes
            .iter()
            .scan(0, |acc, &t| {
                let start = *acc;
                *acc += t;
                Some(start)
            })
            .collect()
    }

    /// Blocks take consecutive labels in pattern-vertex order.
    pub fn build(&self) -> Result<Graph> {
        let offsets = self.offsets();
        let masks: Vec<u64> = offsets
            .iter()
            .zip(&self.sizes)
            .map(|(&o, &t)| (o..o + t).fold(0u64, |m, v| m | bit(v)))
            .collect();
        let mut rows = Vec::with_capacity(self.sizes.iter().sum());
        for (i, &t) in self.sizes.iter().enumerate() {
            let cross = bits(self.base.neighbors(i)).fold(0u64, |m, j| m | masks[j]);
            for v in offsets[i]..offsets[i] + t {
                rows.push((masks[i] | cross) & !bit(v));
            }
        }
        Graph::from_rows(rows)
    }

    /// Quotient matrix of the block partition of the replaced graph.
    pub fn quotient_matrix(&self) -> Result<QuotientMatrix> {
        let g = self.build()?;
        let offsets = self.offsets();
        let s = self.sizes.len();
        let mut block_degrees = Vec::with_capacity(s);
        for i in 0..s {
            let d = g.degree(offsets[i]);
            if (offsets[i]..offsets[i] + self.sizes[i]).any(|v| g.degree(v) != d) {
                return Err(Error::Invariant(format!("block {i} is not degree-regular")));
            }
            block_degrees.push(d);
        }
        let mut b = IntMatrix::zeros(s);
        for i in 0..s {
            b.set(i, i, (block_degrees[i] + self.sizes[i] - 1) as i64);
            for j in bits(self.base.neighbors(i)) {
                b.set(i, j, self.sizes[j] as i64);
            }
        }
        Ok(QuotientMatrix {
            b,
            block_degrees,
            block_sizes: self.sizes.clone(),
        })
    }
}

/// The `s x s` matrix `B` whose spectrum, together with each block
/// eigenvalue `deg_i - 1` of multiplicity `t_i - 1`, is the signless
/// Laplacian spectrum of a clique replacement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMatrix {
    pub b: IntMatrix,
    pub block_degrees: Vec<usize>,
    pub block_sizes: Vec<usize>,
}

impl QuotientMatrix {
    pub fn charpoly(&self) -> IntPolynomial {
        charpoly(&self.b)
    }

    /// `Π (x - (deg_i - 1))^{t_i - 1}`.
    pub fn block_factor(&self) -> IntPolynomial {
        self.block_degrees
            .iter()
            .zip(&self.block_sizes)
            .fold(IntPolynomial::one(), |acc, (&d, &t)| {
                &acc * &IntPolynomial::linear(d as i64 - 1).pow(t - 1)
            })
    }

    /// Predicted characteristic polynomial of the whole replaced graph.
    pub fn predicted_charpoly(&self) -> IntPolynomial {
        &self.charpoly() * &self.block_factor()
    }
}

/// Fixed graphs used in the `m[0, d_1]` arguments.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ProofGraph {
    /// The 3-regular prism on six vertices.
    FigN6,
    H1,
    /// `H1` plus the edge between its last two vertices.
    H2,
}

impl FromStr for ProofGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fig-n6" => Ok(ProofGraph::FigN6),
            "H1" => Ok(ProofGraph::H1),
            "H2" => Ok(ProofGraph::H2),
            _ => invalid(format!("unknown proof graph {s:?} (expected fig-n6, H1 or H2)")),
        }
    }
}

impl fmt::Display for ProofGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProofGraph::FigN6 => "fig-n6",
            ProofGraph::H1 => "H1",
            ProofGraph::H2 => "H2",
        })
    }
}

const H1_EDGES: [(usize, usize); 7] = [(0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4)];

pub fn proof_graph(id: ProofGraph) -> Graph {
    let g = match id {
        ProofGraph::FigN6 => Graph::from_edges(
            6,
            [(0, 1), (0, 2), (0, 4), (1, 3), (1, 4), (2, 3), (2, 5), (3, 5), (4, 5)],
        ),
        ProofGraph::H1 => Graph::from_edges(5, H1_EDGES),
        ProofGraph::H2 => Graph::from_edges(5, H1_EDGES.into_iter().chain([(3, 4)])),
    };
    g.expect("fixed edge lists are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::signless_laplacian_int;

    fn edges(g: &Graph) -> Vec<(usize, usize)> {
        g.edges().collect()
    }

    #[test]
    fn small_gn_match_figure() {
        assert_eq!(build_gn(2).unwrap(), Graph::edgeless(2).unwrap());
        assert_eq!(build_gn(4).unwrap(), Graph::path(4).unwrap());
        let g5 = build_gn(5).unwrap();
        let (v, w) = (|i| gn_v(5, i), |j| gn_w(5, j));
        let mut want: Vec<(usize, usize)> = [
            (v(1), v(2)),
            (v(1), v(3)),
            (v(2), v(3)),
            (v(2), w(2)),
            (v(3), w(2)),
            (v(3), w(1)),
            (w(1), w(2)),
        ]
        .iter()
        .map(|&(a, b)| (a.min(b), a.max(b)))
        .collect();
        want.sort();
        assert_eq!(edges(&g5), want);
        let k3 = g5.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(k3, Graph::complete(3).unwrap());
        assert!(build_gn(1).is_err());
        assert!(build_gn(65).is_err());
        for n in 2..=64 {
            build_gn(n).unwrap();
        }
    }

    #[test]
    fn gn_recursion() {
        for n in 3..=12 {
            let g = build_gn(n).unwrap();
            let next = build_gn(n + 1).unwrap();
            if n % 2 == 0 {
                let joined = Graph::complete(1).unwrap().join(&g).unwrap();
                assert!(next.is_isomorphic(&joined), "n = {n}");
            } else {
                assert!(
                    (0..=n).any(|v| next.delete_vertex(v).unwrap().is_isomorphic(&g)),
                    "n = {n}"
                );
            }
        }
    }

    #[test]
    fn replacement_examples() {
        let k2 = Graph::complete(2).unwrap();
        let r = CliqueReplacement::new(k2, vec![3, 4]).unwrap();
        assert_eq!(r.build().unwrap(), Graph::complete(7).unwrap());
        let bowtie = CliqueReplacement::gs(&[2, 1, 2]).unwrap().build().unwrap();
        assert_eq!(bowtie.order(), 5);
        assert_eq!(bowtie.degree_sequence().as_slice(), &[4, 2, 2, 2, 2]);
        let two_triangles_sharing_vertex =
            Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert!(bowtie.is_isomorphic(&two_triangles_sharing_vertex));
        assert_eq!(
            CliqueReplacement::gs(&[1, 1, 1, 1]).unwrap().build().unwrap(),
            Graph::path(4).unwrap()
        );
        assert!(CliqueReplacement::gs(&[1, 0, 1]).is_err());
        assert!(CliqueReplacement::new(Graph::path(3).unwrap(), vec![1, 1]).is_err());
        assert!(CliqueReplacement::gs(&[30, 30, 30]).is_err());
    }

    #[test]
    fn displayed_quotient_matrices() {
        for t in 1..=5i64 {
            let q = CliqueReplacement::gs(&[t as usize, 1, t as usize]).unwrap().quotient_matrix().unwrap();
            let want = IntMatrix::from_rows(&[
                vec![2 * t - 1, 1, 0],
                vec![t, 2 * t, t],
                vec![0, 1, 2 * t - 1],
            ])
            .unwrap();
            assert_eq!(q.b, want);
        }
        for n in 3..=10i64 {
            let q = CliqueReplacement::gs(&[1, 1, n as usize - 2]).unwrap().quotient_matrix().unwrap();
            let want = IntMatrix::from_rows(&[
                vec![1, 1, 0],
                vec![1, n - 1, n - 2],
                vec![0, 1, 2 * n - 5],
            ])
            .unwrap();
            assert_eq!(q.b, want);
        }
        for r in 1..=5i64 {
            let ru = r as usize;
            let q = CliqueReplacement::gs(&[ru, 1, 1, ru]).unwrap().quotient_matrix().unwrap();
            let want = IntMatrix::from_rows(&[
                vec![2 * r - 1, 1, 0, 0],
                vec![r, r + 1, 1, 0],
                vec![0, 1, r + 1, r],
                vec![0, 0, 1, 2 * r - 1],
            ])
            .unwrap();
            assert_eq!(q.b, want);
        }
    }

    #[test]
    fn quotient_predicts_charpoly() {
        for sizes in [vec![2, 1, 2], vec![1, 3, 2, 1], vec![2, 2, 2, 2, 2], vec![3, 1, 2, 1, 1, 2]] {
            let spec = CliqueReplacement::gs(&sizes).unwrap();
            let g = spec.build().unwrap();
            let q = spec.quotient_matrix().unwrap();
            assert_eq!(charpoly(&signless_laplacian_int(&g)), q.predicted_charpoly(), "{sizes:?}");
        }
    }

    #[test]
    fn proof_graphs() {
        let prism = proof_graph(ProofGraph::FigN6);
        assert_eq!(prism.edge_count(), 9);
        assert!(prism.degrees().iter().all(|&d| d == 3));
        let two_triangles = Graph::complete(3).unwrap().copies(2).unwrap();
        let matching = two_triangles
            .add_edge(0, 3)
            .and_then(|g| g.add_edge(1, 4))
            .and_then(|g| g.add_edge(2, 5))
            .unwrap();
        assert!(prism.is_isomorphic(&matching));
        let h1 = proof_graph(ProofGraph::H1);
        let rows: Vec<Vec<u8>> = (0..5)
            .map(|i| (0..5).map(|j| u8::from(h1.has_edge(i, j))).collect())
            .collect();
        assert_eq!(
            rows,
            vec![
                vec![0, 0, 1, 1, 1],
                vec![0, 0, 0, 1, 1],
                vec![1, 0, 0, 1, 1],
                vec![1, 1, 1, 0, 0],
                vec![1, 1, 1, 0, 0],
            ]
        );
        assert_eq!(proof_graph(ProofGraph::H2), h1.add_edge(3, 4).unwrap());
        assert_eq!("H2".parse::<ProofGraph>().unwrap(), ProofGraph::H2);
        assert!("H3".parse::<ProofGraph>().is_err());
    }
}
