//! Recognizer for the graphs whose third largest adjacency eigenvalue is
//! negative.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{exhaustive, Registry};
use crate::enumeration::Filter;
use crate::error::Result;
use crate::families::{build_gn, CliqueReplacement};
use crate::graph::{bit, Graph};
use crate::spectral::adj_signature;

/// Largest pattern order searched for `G_s` replacements.
pub const MAX_S: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassLabel {
    #[serde(rename = "complete")]
    Complete,
    #[serde(rename = "K1-plus-complete")]
    K1PlusComplete,
    #[serde(rename = "complete-minus-edge")]
    CompleteMinusEdge,
    /// `K_p ∪ K_q` with `p ≥ q ≥ 2`.
    #[serde(rename = "two-cliques")]
    TwoCliques,
    #[serde(rename = "Gs-replacement")]
    Gs { s: usize, t: Vec<usize> },
    #[serde(rename = "none")]
    None,
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::Complete => f.write_str("complete"),
            ClassLabel::K1PlusComplete => f.write_str("K1-plus-complete"),
            ClassLabel::CompleteMinusEdge => f.write_str("complete-minus-edge"),
            ClassLabel::TwoCliques => f.write_str("two-cliques"),
            ClassLabel::Gs { s, t } => {
                let t: Vec<String> = t.iter().map(ToString::to_string).collect();
                write!(f, "Gs-replacement({s}, ({}))", t.join(","))
            }
            ClassLabel::None => f.write_str("none"),
        }
    }
}

/// Every family of the classification that `g` belongs to, in the order
/// complete, `K_1 ∪ K_{n-1}`, `K_n - e`, `K_p ∪ K_q`, `G_s[...]`.
/// (`K_n - e` is also `G_3[K_1, K_{n-2}, K_1]`, so both can be reported.)
pub fn oboudi_matches(g: &Graph) -> Vec<ClassLabel> {
    let n = g.order();
    let form = g.canonical_form();
    let same = |h: Result<Graph>| h.map(|h| h.canonical_form() == form).unwrap_or(false);
    let k = Graph::complete;
    let mut out = Vec::new();
    if n >= 1 && same(k(n)) {
        out.push(ClassLabel::Complete);
    }
    if n >= 2 && same(k(1).and_then(|a| a.union(&k(n - 1)?))) {
        out.push(ClassLabel::K1PlusComplete);
    }
    if n >= 2 && same(k(n).and_then(|a| a.delete_edge(0, 1))) {
        out.push(ClassLabel::CompleteMinusEdge);
    }
    if (2..=n / 2).any(|q| same(k(n - q).and_then(|a| a.union(&k(q)?)))) {
        out.push(ClassLabel::TwoCliques);
    }
    if let Some(t) = gs_sizes(g) {
        out.push(ClassLabel::Gs { s: t.len(), t });
    }
    out
}

/// First label of [`oboudi_matches`], or [`ClassLabel::None`].
pub fn oboudi_recognize(g: &Graph) -> ClassLabel {
    oboudi_matches(g).into_iter().next().unwrap_or(ClassLabel::None)
}

/// Block sizes `t` with `g ≅ G_s[K_{t_1}, ..., K_{t_s}]`, `3 ≤ s ≤ 12`.
///
/// Instead of trying every composition of `n`, this reads the blocks off
/// `g`: in `G_s[...]` two vertices have the same closed neighborhood iff
/// they share a block (the closed neighborhoods of `G_s` are strictly
/// nested), so the closed-twin classes are the blocks and the graph on one
/// representative per class must be `G_s`. Of `t` and its reverse (label
/// reversal is an automorphism of `G_s`) the smaller is returned.
fn gs_sizes(g: &Graph) -> Option<Vec<usize>> {
    let mut classes: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for v in 0..g.order() {
        classes.entry(g.neighbors(v) | bit(v)).or_default().push(v);
    }
    let s = classes.len();
    if !(3..=MAX_S).contains(&s) {
        return None;
    }
    // Induced subgraphs are relabeled in increasing vertex order, so list
    // the classes by representative.
    let mut blocks: Vec<Vec<usize>> = classes.into_values().collect();
    blocks.sort_unstable();
    let reps: Vec<usize> = blocks.iter().map(|c| c[0]).collect();
    let sizes: Vec<usize> = blocks.iter().map(Vec::len).collect();
    let pattern = g.induced_subgraph(&reps).ok()?;
    let gs = build_gn(s).ok()?;
    let (lp, lg) = (pattern.canonical_labeling(), gs.canonical_labeling());
    if lp.form() != lg.form() {
        return None;
    }
    let mut t = vec![0; s];
    for (&p, &q) in lp.order().iter().zip(lg.order()) {
        t[q] = sizes[p];
    }
    let mut rev = t.clone();
    rev.reverse();
    let form = g.canonical_form();
    [t.clone(), rev]
        .into_iter()
        .filter(|t| {
            CliqueReplacement::gs(t)
                .and_then(|c| c.build())
                .is_ok_and(|h| h.canonical_form() == form)
        })
        .min()
}

/// Whether `label` is one the classification allows for this sign of `λ_2`.
fn consistent(lambda2: Ordering, label: &ClassLabel) -> bool {
    match lambda2 {
        Ordering::Greater => matches!(label, ClassLabel::TwoCliques | ClassLabel::Gs { .. }),
        Ordering::Equal => matches!(label, ClassLabel::K1PlusComplete | ClassLabel::CompleteMinusEdge),
        Ordering::Less => matches!(label, ClassLabel::Complete),
    }
}

fn classified(g: &Graph) -> Result<bool> {
    let sig = adj_signature(g);
    if !sig.lambda3_negative() {
        return Ok(true);
    }
    let Some(lambda2) = sig.sign(2) else {
        return Ok(false);
    };
    Ok(oboudi_matches(g).iter().any(|l| consistent(lambda2, l)))
}

pub(super) fn register(r: &mut Registry) {
    r.register(
        "L-oboudi",
        "lambda_3 < 0: lambda_2 < 0 gives K_n; lambda_2 = 0 gives K1 u K_{n-1} or K_n - e; lambda_2 > 0 gives K_p u K_q or G_s[K_t1..K_ts]",
        |max_n| exhaustive(3, max_n, Filter::All, classified),
    );
}
