//! Immutable simple undirected graphs on at most 64 vertices.
//!
//! Each vertex row is a single `u64` neighbor mask, so neighborhood
//! intersections and degree queries are a couple of word operations.

mod canon;
mod independence;

use std::fmt;

use crate::error::{invalid, Error, Result};

pub use canon::CanonicalLabeling;

/// Maximum number of vertices a [`Graph`] may hold.
pub const MAX_ORDER: usize = 64;

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub(crate) const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates over the set bits of a mask in increasing order.
#[inline]
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// A simple undirected graph with vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
}

/// Named graph families with their canonical labelings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedFamily {
    /// `K_n`.
    Complete(usize),
    /// `P_n`, labeled `0 - 1 - ... - (n-1)`.
    Path(usize),
    /// `C_n`, the path closed by the edge `(n-1, 0)`.
    Cycle(usize),
    /// `S_n` on `n` vertices, centered at 0.
    Star(usize),
    /// `E_n`, no edges.
    Edgeless(usize),
    /// `K_{n1,...,nk}` with parts in consecutive label blocks.
    Multipartite(Vec<usize>),
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ORDER {
        return invalid(format!("order must be in 1..={MAX_ORDER}, got {n}"));
    }
    Ok(())
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Result<Graph> {
        check_order(n)?;
        Ok(Graph { adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Graph> {
        check_order(n)?;
        let all = low_bits(n);
        Ok(Graph {
            adj: (0..n).map(|v| all & !bit(v)).collect(),
        })
    }

    pub fn path(n: usize) -> Result<Graph> {
        check_order(n)?;
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return invalid(format!("a cycle needs at least 3 vertices, got {n}"));
        }
        check_order(n)?;
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    pub fn star(n: usize) -> Result<Graph> {
        check_order(n)?;
        Graph::from_edges(n, (1..n).map(|v| (0, v)))
    }

    pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
        if parts.is_empty() || parts.contains(&0) {
            return invalid("multipartite part sizes must be positive");
        }
        let n: usize = parts.iter().sum();
        check_order(n)?;
        let mut block = vec![0usize; n];
        let mut start = 0;
        for (b, &size) in parts.iter().enumerate() {
            block[start..start + size].fill(b);
            start += size;
        }
        let mut adj = vec![0u64; n];
        for u in 0..n {
            for v in 0..n {
                if block[u] != block[v] {
                    adj[u] |= bit(v);
                }
            }
        }
        Ok(Graph { adj })
    }

    pub fn named(family: &NamedFamily) -> Result<Graph> {
        match family {
            NamedFamily::Complete(n) => Graph::complete(*n),
            NamedFamily::Path(n) => Graph::path(*n),
            NamedFamily::Cycle(n) => Graph::cycle(*n),
            NamedFamily::Star(n) => Graph::star(*n),
            NamedFamily::Edgeless(n) => Graph::edgeless(*n),
            NamedFamily::Multipartite(parts) => Graph::complete_multipartite(parts),
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are merged; loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_order(n)?;
        let mut adj = vec![0u64; n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return invalid(format!("edge ({u}, {v}) out of range for order {n}"));
            }
            if u == v {
                return invalid(format!("loop at vertex {u}"));
            }
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        Ok(Graph { adj })
    }

    /// Builds a graph from neighbor masks, validating symmetry and the
    /// absence of loops.
    pub fn from_rows(rows: Vec<u64>) -> Result<Graph> {
        let n = rows.len();
        check_order(n)?;
        let mask = low_bits(n);
        for (u, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return invalid(format!("row {u} has bits beyond order {n}"));
            }
            if row & bit(u) != 0 {
                return invalid(format!("loop at vertex {u}"));
            }
            for v in bits(row) {
                if rows[v] & bit(u) == 0 {
                    return invalid(format!("asymmetric adjacency at ({u}, {v})"));
                }
            }
        }
        Ok(Graph { adj: rows })
    }

    /// Unchecked constructor for rows already known to be valid.
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Graph {
        debug_assert!(Graph::from_rows(rows.clone()).is_ok());
        Graph { adj: rows }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Neighbor mask of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    /// Mask of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_bits(self.order())
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| bits(self.adj[u] >> (u + 1)).map(move |d| (u, u + 1 + d)))
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn union(&self, other: &Graph) -> Result<Graph> {
        let (a, b) = (self.order(), other.order());
        if a + b > MAX_ORDER {
            return invalid(format!("union order {} exceeds {MAX_ORDER}", a + b));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&r| r << a));
        Ok(Graph { adj })
    }

    /// Union plus every edge between the two vertex blocks.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let (a, b) = (self.order(), other.order());
        let mut g = self.union(other)?;
        let left = low_bits(a);
        let right = low_bits(a + b) & !left;
        for (v, row) in g.adj.iter_mut().enumerate() {
            *row |= if v < a { right } else { left };
        }
        Ok(g)
    }

    /// `k` disjoint copies of `self`.
    pub fn copies(&self, k: usize) -> Result<Graph> {
        if k == 0 {
            return invalid("number of copies must be positive");
        }
        let mut g = self.clone();
        for _ in 1..k {
            g = g.union(self)?;
        }
        Ok(g)
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if u >= self.order() || v >= self.order() || !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let mut adj = self.adj.clone();
        adj[u] &= !bit(v);
        adj[v] &= !bit(u);
        Ok(Graph { adj })
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if u >= self.order() || v >= self.order() || u == v {
            return invalid(format!("cannot add edge ({u}, {v})"));
        }
        let mut adj = self.adj.clone();
        adj[u] |= bit(v);
        adj[v] |= bit(u);
        Ok(Graph { adj })
    }

    /// Induced subgraph on `set`, relabeled in increasing vertex order.
    pub fn induced_subgraph(&self, set: &[usize]) -> Result<Graph> {
        let mut mask = 0u64;
        for &v in set {
            if v >= self.order() {
                return invalid(format!("vertex {v} out of range"));
            }
            mask |= bit(v);
        }
        self.induced_by_mask(mask)
    }

    /// Induced subgraph on the vertices of `mask`, relabeled in increasing order.
    pub fn induced_by_mask(&self, mask: u64) -> Result<Graph> {
        let mask = mask & self.vertex_mask();
        if mask == 0 {
            return invalid("induced subgraph needs a nonempty vertex set");
        }
        let verts: Vec<usize> = bits(mask).collect();
        let adj = verts
            .iter()
            .map(|&u| {
                verts
                    .iter()
                    .enumerate()
                    .filter(|&(_, &v)| self.has_edge(u, v))
                    .fold(0u64, |acc, (i, _)| acc | bit(i))
            })
            .collect();
        Ok(Graph { adj })
    }

    /// Removes vertex `v`, shifting higher labels down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.order() {
            return invalid(format!("vertex {v} out of range"));
        }
        self.induced_by_mask(self.vertex_mask() & !bit(v))
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        let mut seen = 0u64;
        if perm.len() != n {
            return invalid("permutation length differs from the order");
        }
        for &p in perm {
            if p >= n || seen & bit(p) != 0 {
                return invalid("not a permutation");
            }
            seen |= bit(p);
        }
        let mut adj = vec![0u64; n];
        for u in 0..n {
            adj[perm[u]] = bits(self.adj[u]).fold(0, |acc, v| acc | bit(perm[v]));
        }
        Ok(Graph { adj })
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        Graph {
            adj: self.adj.iter().enumerate().map(|(v, &r)| !r & all & !bit(v)).collect(),
        }
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(d)
    }

    pub fn is_connected(&self) -> bool {
        let all = self.vertex_mask();
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let next = bits(frontier).fold(0u64, |acc, v| acc | self.adj[v]) & !seen;
            seen |= next;
            frontier = next;
        }
        seen == all
    }

    /// Vertex masks of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut left = self.vertex_mask();
        let mut out = Vec::new();
        while left != 0 {
            let start = bit(left.trailing_zeros() as usize);
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let next = bits(frontier).fold(0u64, |acc, v| acc | self.adj[v]) & !comp;
                comp |= next;
                frontier = next;
            }
            out.push(comp);
            left &= !comp;
        }
        out
    }

    /// Whether `set` is independent.
    pub fn is_independent(&self, set: u64) -> bool {
        bits(set).all(|v| self.adj[v] & set == 0)
    }

    pub fn independence_number(&self) -> usize {
        independence::independence_number(self)
    }

    pub fn canonical_labeling(&self) -> CanonicalLabeling {
        canon::canonical_labeling(self)
    }

    /// Relabeling-invariant certificate; equal iff the graphs are isomorphic.
    /// The bytes are the graph6 encoding of the canonically relabeled graph.
    pub fn canonical_form(&self) -> Vec<u8> {
        self.canonical_labeling().form()
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.order() == other.order()
            && self.edge_count() == other.edge_count()
            && self.degree_sequence() == other.degree_sequence()
            && self.canonical_form() == other.canonical_form()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Vertex degrees sorted in nonincreasing order, `d_1 >= ... >= d_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    /// `d_k` with 1-based `k`.
    pub fn d(&self, k: usize) -> Result<usize> {
        if k == 0 || k > self.0.len() {
            return invalid(format!("d_{k} undefined for order {}", self.0.len()));
        }
        Ok(self.0[k - 1])
    }

    pub fn max(&self) -> usize {
        self.0[0]
    }

    pub fn min(&self) -> usize {
        *self.0.last().expect("graphs have at least one vertex")
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degs(g: &Graph) -> Vec<usize> {
        g.degree_sequence().as_slice().to_vec()
    }

    #[test]
    fn named_families() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert_eq!(degs(&k4), [3, 3, 3, 3]);

        let p3 = Graph::path(3).unwrap();
        assert_eq!(p3.edges().collect::<Vec<_>>(), [(0, 1), (1, 2)]);
        assert_eq!(degs(&p3), [2, 1, 1]);

        let k23 = Graph::complete_multipartite(&[2, 3]).unwrap();
        assert_eq!(k23.edge_count(), 6);
        assert_eq!(degs(&k23), [3, 3, 2, 2, 2]);

        let s4 = Graph::star(4).unwrap();
        assert_eq!(s4.degree(0), 3);
        assert_eq!(degs(&Graph::cycle(5).unwrap()), [2; 5]);
        assert_eq!(Graph::edgeless(3).unwrap().edge_count(), 0);
    }

    #[test]
    fn size_errors() {
        assert!(matches!(Graph::complete(0), Err(Error::InvalidParameter(_))));
        assert!(matches!(Graph::path(65), Err(Error::InvalidParameter(_))));
        assert!(Graph::complete(64).is_ok());
        assert!(Graph::cycle(2).is_err());
        assert!(Graph::complete_multipartite(&[2, 0]).is_err());
        let big = Graph::complete(40).unwrap();
        assert!(big.union(&big).is_err());
        assert!(big.join(&big).is_err());
    }

    #[test]
    fn union_and_join() {
        let k1 = Graph::complete(1).unwrap();
        let k2 = Graph::complete(2).unwrap();
        let u = k1.union(&k2).unwrap();
        assert_eq!(degs(&u), [1, 1, 0]);
        assert!(u.has_edge(1, 2));

        assert_eq!(k1.join(&k2).unwrap(), Graph::complete(3).unwrap());
        assert_eq!(k2.join(&k2).unwrap(), Graph::complete(4).unwrap());
        let e3 = Graph::edgeless(3).unwrap();
        assert_eq!(k1.join(&e3).unwrap(), Graph::star(4).unwrap());

        let two_k2 = k2.copies(2).unwrap();
        assert_eq!(two_k2.edges().collect::<Vec<_>>(), [(0, 1), (2, 3)]);
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(degs(&k3.union(&k3).unwrap()), [2; 6]);
    }

    #[test]
    fn edge_deletion() {
        let k4e = Graph::complete(4).unwrap().delete_edge(0, 1).unwrap();
        assert_eq!(degs(&k4e), [3, 3, 2, 2]);
        let c3 = Graph::cycle(3).unwrap();
        assert!(c3.delete_edge(0, 1).unwrap().is_isomorphic(&Graph::path(3).unwrap()));
        let p2 = Graph::path(2).unwrap();
        assert_eq!(p2.delete_edge(0, 1).unwrap(), Graph::edgeless(2).unwrap());
        assert_eq!(p2.delete_edge(0, 0), Err(Error::NotAnEdge(0, 0)));
        assert_eq!(Graph::path(3).unwrap().delete_edge(0, 2), Err(Error::NotAnEdge(0, 2)));
    }

    #[test]
    fn induced_subgraphs() {
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(k5.induced_subgraph(&[0, 1, 2]).unwrap(), Graph::complete(3).unwrap());
        let p4 = Graph::path(4).unwrap();
        let h = p4.induced_subgraph(&[0, 2, 3]).unwrap();
        let k1k2 = Graph::complete(1).unwrap().union(&Graph::complete(2).unwrap()).unwrap();
        assert_eq!(h, k1k2);
        assert!(p4.induced_subgraph(&[]).is_err());
        assert!(p4.induced_subgraph(&[7]).is_err());
    }

    #[test]
    fn connectivity() {
        assert!(Graph::path(4).unwrap().is_connected());
        let k2 = Graph::complete(2).unwrap();
        assert!(!k2.copies(2).unwrap().is_connected());
        let g = Graph::complete(1).unwrap().union(&Graph::complete(4).unwrap()).unwrap();
        assert!(!g.is_connected());
        assert_eq!(g.components(), vec![0b1, 0b11110]);
        assert!(Graph::complete(1).unwrap().is_connected());
    }

    #[test]
    fn degree_accessors() {
        let ds = Graph::path(4).unwrap().degree_sequence();
        assert_eq!(ds.d(1).unwrap(), 2);
        assert_eq!(ds.d(4).unwrap(), 1);
        assert_eq!(ds.max(), 2);
        assert_eq!(ds.min(), 1);
        assert!(ds.d(0).is_err());
        assert!(ds.d(5).is_err());
    }

    #[test]
    fn rows_validation() {
        assert!(Graph::from_rows(vec![0b10, 0b00]).is_err());
        assert!(Graph::from_rows(vec![0b01]).is_err());
        assert!(Graph::from_rows(vec![0b10, 0b01]).is_ok());
        assert!(Graph::from_rows(vec![0b100, 0]).is_err());
    }

    #[test]
    fn relabel_and_complement() {
        let p3 = Graph::path(3).unwrap();
        let r = p3.relabel(&[1, 0, 2]).unwrap();
        assert_eq!(r.edges().collect::<Vec<_>>(), [(0, 1), (0, 2)]);
        assert!(p3.relabel(&[0, 0, 1]).is_err());
        assert_eq!(Graph::complete(4).unwrap().complement(), Graph::edgeless(4).unwrap());
    }
}
