//! The graph families named in each characterization, listed per order.

use crate::error::Result;
use crate::families::CliqueReplacement;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Characterization {
    /// `m[d_n, 2n-2] = 1`.
    DnEq1,
    /// `m[d_n, 2n-2] = 2`.
    DnEq2,
    /// `m[d_{n-1}, 2n-2] = 1`.
    Dn1Eq1,
    /// `m[0, d_1] = 1`.
    D1Eq1,
    /// `m[0, d_1] = 2`.
    D1Eq2,
    /// Disconnected with `m[0, d_1] = 3`.
    DiscD1Eq3,
    /// `m[0, d_3] = 1` (no members).
    D3Eq1,
}

fn k(n: usize) -> Graph {
    Graph::complete(n).expect("small order")
}

fn u(a: &Graph, b: &Graph) -> Graph {
    a.union(b).expect("small order")
}

/// The six graphs with `m[0, d_1] = 2`.
fn d1_eq_2_list() -> Result<Vec<Graph>> {
    Ok(vec![
        u(&k(1), &k(2)),
        Graph::path(3)?,
        k(3),
        Graph::edgeless(2)?,
        k(2).copies(2)?,
        Graph::cycle(5)?,
    ])
}

/// Members of order `n`, deduplicated by isomorphism.
pub fn expected_members(ch: Characterization, n: usize) -> Result<Vec<Graph>> {
    let mut out: Vec<Graph> = match ch {
        Characterization::DnEq1 => vec![k(n)],
        Characterization::DnEq2 => {
            let mut v = Vec::new();
            if n % 2 == 0 {
                v.push(k(n / 2).copies(2)?);
            }
            match n {
                3 => v.push(Graph::path(3)?),
                4 => v.push(Graph::path(4)?),
                5 => v.push(CliqueReplacement::gs(&[2, 1, 2])?.build()?),
                _ => {}
            }
            v
        }
        Characterization::Dn1Eq1 => {
            if n >= 2 {
                vec![k(n), u(&k(1), &k(n - 1))]
            } else {
                vec![k(n)]
            }
        }
        Characterization::D1Eq1 => {
            if n == 2 {
                vec![k(2)]
            } else {
                Vec::new()
            }
        }
        Characterization::D1Eq2 => d1_eq_2_list()?,
        Characterization::DiscD1Eq3 => {
            let mut v: Vec<Graph> = d1_eq_2_list()?.iter().map(|g| u(&k(1), g)).collect();
            for g in [u(&k(1), &k(2)), Graph::edgeless(2)?, k(2).copies(2)?] {
                v.push(u(&k(2), &g));
            }
            v
        }
        Characterization::D3Eq1 => Vec::new(),
    };
    out.retain(|g| g.order() == n);
    let mut forms: Vec<(Vec<u8>, Graph)> = out
        .into_iter()
        .map(|g| {
            let lab = g.canonical_labeling();
            (lab.form(), lab.into_graph())
        })
        .collect();
    forms.sort_by(|a, b| a.0.cmp(&b.0));
    forms.dedup_by(|a, b| a.0 == b.0);
    Ok(forms.into_iter().map(|(_, g)| g).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disconnected_family_sizes() {
        let sizes: Vec<usize> = (1..=7)
            .map(|n| expected_members(Characterization::DiscD1Eq3, n).unwrap().len())
            .collect();
        // 3K1; 2K1∪K2, K1∪P3, K1∪K3; K1∪2K2; 3K2, K1∪C5.
        assert_eq!(sizes, [0, 0, 1, 3, 1, 2, 0]);
        assert!(expected_members(Characterization::DnEq2, 7).unwrap().is_empty());
        assert_eq!(expected_members(Characterization::DnEq2, 4).unwrap().len(), 2);
    }
}
