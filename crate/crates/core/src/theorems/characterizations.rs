//! Two-sided checks of "m = k if and only if G is in this family".

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::catalog::{expected_members, Characterization};
use super::{m_int, top, Outcome, Registry};
use crate::enumeration::{classes, graph6, Filter};
use crate::error::Result;
use crate::graph::Graph;

type Predicate = fn(&Graph) -> Result<bool>;

fn dn_count(g: &Graph) -> Result<usize> {
    m_int(g, g.degree_sequence().min() as i64, top(g))
}

fn d1_count(g: &Graph) -> Result<usize> {
    m_int(g, 0, g.degree_sequence().max() as i64)
}

const ENTRIES: [(&str, &str, Characterization, usize, Filter, Predicate); 7] = [
    (
        "T-dn-eq-1",
        "m[d_n, 2n-2] = 1 iff G = K_n",
        Characterization::DnEq1,
        1,
        Filter::All,
        |g| Ok(dn_count(g)? == 1),
    ),
    (
        "T-dn-eq-2",
        "m[d_n, 2n-2] = 2 iff G in {2K_{n/2}, P3, P4, G_3[K2,K1,K2]}",
        Characterization::DnEq2,
        1,
        Filter::All,
        |g| Ok(dn_count(g)? == 2),
    ),
    (
        "T-dn1-eq-1",
        "m[d_{n-1}, 2n-2] = 1 iff G in {K_n, K1 u K_{n-1}} (n >= 3)",
        Characterization::Dn1Eq1,
        3,
        Filter::All,
        |g| {
            let d = g.degree_sequence().d(g.order() - 1)? as i64;
            Ok(m_int(g, d, top(g))? == 1)
        },
    ),
    (
        "T-d1-eq-1",
        "m[0, d_1] = 1 iff G = K2 (n >= 2)",
        Characterization::D1Eq1,
        2,
        Filter::All,
        |g| Ok(d1_count(g)? == 1),
    ),
    (
        "T-d1-eq-2",
        "m[0, d_1] = 2 iff G in {K1 u K2, P3, K3, 2K1, 2K2, C5}",
        Characterization::D1Eq2,
        1,
        Filter::All,
        |g| Ok(d1_count(g)? == 2),
    ),
    (
        "C-disc-d1-eq-3",
        "disconnected G has m[0, d_1] = 3 iff G = K1 u H (H in the m[0,d_1]=2 list) or K2 u H (H in {K1 u K2, 2K1, 2K2})",
        Characterization::DiscD1Eq3,
        2,
        Filter::Disconnected,
        |g| Ok(d1_count(g)? == 3),
    ),
    (
        "T-no-d3-1",
        "no graph of order n >= 3 has m[0, d_3] = 1",
        Characterization::D3Eq1,
        3,
        Filter::All,
        |g| Ok(m_int(g, 0, g.degree_sequence().d(3)? as i64)? == 1),
    ),
];

pub(super) fn register(r: &mut Registry) {
    for (id, statement, ch, n_min, filter, pred) in ENTRIES {
        r.register(id, statement, move |max_n| check(ch, n_min, filter, pred, max_n));
    }
}

fn check(ch: Characterization, n_min: usize, filter: Filter, pred: Predicate, max_n: usize) -> Result<Outcome> {
    if n_min > max_n {
        return Ok(Outcome::skipped(n_min, max_n));
    }
    let mut out = Outcome {
        n_min,
        n_max: max_n,
        ..Outcome::default()
    };
    for n in n_min..=max_n {
        let level = classes(n)?;
        let flags: Vec<Option<String>> = level
            .par_iter()
            .filter(|g| filter.accepts(g))
            .map(|g| Ok(pred(g)?.then(|| graph6::encode(g))))
            .collect::<Result<_>>()?;
        out.graphs_checked += flags.len() as u64;
        let satisfying: Vec<String> = flags.into_iter().flatten().collect();
        let members: BTreeSet<String> = expected_members(ch, n)?.iter().map(graph6::encode).collect();
        let found: BTreeSet<&String> = satisfying.iter().collect();
        // A satisfying graph outside the family, or a member that fails.
        out.counterexamples
            .extend(satisfying.iter().filter(|s| !members.contains(*s)).cloned());
        out.counterexamples
            .extend(members.iter().filter(|s| !found.contains(s)).cloned());
        out.witnesses.insert(n, satisfying);
    }
    Ok(out)
}
