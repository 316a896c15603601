//! Inequality lemmas checked over every isomorphism class.

use std::cmp::Ordering;

use super::{exhaustive, m_int, rat, top, Registry};
use crate::enumeration::Filter;
use crate::error::Result;
use crate::graph::{bit, bits, low_bits, Graph};
use crate::spectral::{adjacency_spectrum_float, count_ge_int, q_k_cmp, q_spectrum_float};

const TOL: f64 = 1e-8;

pub(super) fn register(r: &mut Registry) {
    r.register("L-bozhou", "alpha(G) <= min(m[d_n, 2n-2], m[0, d_1])", |max_n| {
        exhaustive(1, max_n, Filter::All, bozhou)
    });
    r.register(
        "L-outside",
        "if every vertex of S has >= e neighbors outside S then q_|S| >= e (|S| <= 4)",
        |max_n| exhaustive(1, max_n, Filter::All, outside),
    );
    r.register(
        "L-uniq-min",
        "unique minimum-degree vertex and m[d_{n-1}, 2n-2] = 1: every maximal independent 2-set contains it",
        |max_n| exhaustive(2, max_n, Filter::All, uniq_min),
    );
    r.register(
        "L-alpha-minus-1",
        "unique minimum-degree vertex implies m[d_{n-1}, 2n-2] >= alpha(G) - 1",
        |max_n| exhaustive(2, max_n, Filter::All, alpha_minus_1),
    );
    r.register(
        "L-das",
        "q_2 >= d_2 - 1, and equality forces d_1 = d_2 with two adjacent maximum-degree vertices",
        |max_n| exhaustive(2, max_n, Filter::All, das),
    );
    r.register(
        "L-belardo",
        "triples of degree >= d_3 inducing 3K1 / K3 or K2 u K1 / P3 give q_3 >= d_3 / d_3 - 1 / d_3 - sqrt 2",
        |max_n| exhaustive(3, max_n, Filter::All, belardo),
    );
    r.register("L-weyl", "lambda_3(A) <= q_3 - d_n", |max_n| {
        exhaustive(3, max_n, Filter::All, weyl)
    });
    r.register("L-rayleigh-d3", "q_{n-1} <= d_3", |max_n| {
        exhaustive(3, max_n, Filter::All, rayleigh_d3)
    });
    r.register(
        "L-interlace-edge",
        "q_1(G) >= q_1(G-e) >= q_2(G) >= ... >= q_n(G) >= q_n(G-e) for every edge e",
        |max_n| exhaustive(2, max_n, Filter::All, interlace_edge),
    );
    r.register(
        "L-induced-count",
        "m_H[a, 2n-2] <= m_G[a, 2n-2] for every induced subgraph H and integer a",
        |max_n| exhaustive(1, max_n, Filter::All, induced_count),
    );
}

/// `table[t] = #{q_i ≥ t}` for integer `t` in `0..=2n-2`.
fn ge_table(g: &Graph) -> Vec<usize> {
    (0..=top(g)).map(|t| count_ge_int(g, t)).collect()
}

fn bozhou(g: &Graph) -> Result<bool> {
    let ds = g.degree_sequence();
    let bound = m_int(g, ds.min() as i64, top(g))?.min(m_int(g, 0, ds.max() as i64)?);
    Ok(g.independence_number() <= bound)
}

fn outside(g: &Graph) -> Result<bool> {
    let n = g.order();
    let table = ge_table(g);
    for s in 1..=low_bits(n) {
        let size = s.count_ones() as usize;
        if size > 4 {
            continue;
        }
        let e = bits(s).map(|v| (g.neighbors(v) & !s).count_ones() as usize).min().unwrap_or(0);
        if table[e] < size {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The minimum-degree vertex if it is unique.
fn unique_min_vertex(g: &Graph) -> Option<usize> {
    let degs = g.degrees();
    let min = *degs.iter().min()?;
    let mut it = degs.iter().enumerate().filter(|(_, &d)| d == min);
    let (v, _) = it.next()?;
    it.next().is_none().then_some(v)
}

fn uniq_min(g: &Graph) -> Result<bool> {
    let n = g.order();
    let Some(v) = unique_min_vertex(g) else {
        return Ok(true);
    };
    let dn1 = g.degree_sequence().d(n - 1)? as i64;
    if m_int(g, dn1, top(g))? != 1 {
        return Ok(true);
    }
    let all = g.vertex_mask();
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) {
                continue;
            }
            let dominated = g.neighbors(a) | g.neighbors(b) | bit(a) | bit(b);
            if dominated == all && a != v && b != v {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn alpha_minus_1(g: &Graph) -> Result<bool> {
    if unique_min_vertex(g).is_none() {
        return Ok(true);
    }
    let dn1 = g.degree_sequence().d(g.order() - 1)? as i64;
    Ok(m_int(g, dn1, top(g))? + 1 >= g.independence_number())
}

fn das(g: &Graph) -> Result<bool> {
    let ds = g.degree_sequence();
    let (d1, d2) = (ds.d(1)?, ds.d(2)?);
    if d2 == 0 {
        return Ok(true);
    }
    match q_k_cmp(g, 2, &rat(d2 as i64 - 1))? {
        Ordering::Less => Ok(false),
        Ordering::Greater => Ok(true),
        Ordering::Equal => {
            log::debug!("q_2 = d_2 - 1 attained by {g:?}");
            let top_deg = (0..g.order()).filter(|&v| g.degree(v) == d1).fold(0u64, |m, v| m | bit(v));
            let adjacent_pair = bits(top_deg).any(|v| g.neighbors(v) & top_deg != 0);
            Ok(d1 == d2 && adjacent_pair)
        }
    }
}

fn belardo(g: &Graph) -> Result<bool> {
    let n = g.order();
    let d3 = g.degree_sequence().d(3)? as i64;
    let high: Vec<usize> = (0..n).filter(|&v| g.degree(v) as i64 >= d3).collect();
    let mut kinds = [false; 4];
    for (x, &a) in high.iter().enumerate() {
        for (y, &b) in high.iter().enumerate().skip(x + 1) {
            for &c in &high[y + 1..] {
                let edges = usize::from(g.has_edge(a, b)) + usize::from(g.has_edge(a, c)) + usize::from(g.has_edge(b, c));
                kinds[edges] = true;
            }
        }
    }
    // 0 edges: 3K1; 1: K2 u K1; 2: P3; 3: K3.
    if kinds[0] && q_k_cmp(g, 3, &rat(d3))? == Ordering::Less {
        return Ok(false);
    }
    if (kinds[1] || kinds[3]) && q_k_cmp(g, 3, &rat(d3 - 1))? == Ordering::Less {
        return Ok(false);
    }
    if kinds[2] {
        let q3 = q_spectrum_float(g)?[2];
        if q3 < d3 as f64 - std::f64::consts::SQRT_2 - TOL {
            return Ok(false);
        }
    }
    Ok(true)
}

fn weyl(g: &Graph) -> Result<bool> {
    let lambda3 = adjacency_spectrum_float(g)?[2];
    let q3 = q_spectrum_float(g)?[2];
    Ok(lambda3 <= q3 - g.degree_sequence().min() as f64 + TOL)
}

fn rayleigh_d3(g: &Graph) -> Result<bool> {
    let d3 = g.degree_sequence().d(3)? as i64;
    Ok(q_k_cmp(g, g.order() - 1, &rat(d3))? != Ordering::Greater)
}

fn interlace_edge(g: &Graph) -> Result<bool> {
    let q = q_spectrum_float(g)?;
    let table = ge_table(g);
    for (u, v) in g.edges() {
        let h = g.delete_edge(u, v)?;
        let p = q_spectrum_float(&h)?;
        for i in 0..q.len() {
            if p[i] > q[i] + TOL || (i + 1 < q.len() && p[i] < q[i + 1] - TOL) {
                return Ok(false);
            }
        }
        // Exact form at integer points: the counts differ by at most one.
        for (t, &big) in table.iter().enumerate() {
            let small = count_ge_int(&h, t as i64);
            if small > big || big > small + 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn induced_count(g: &Graph) -> Result<bool> {
    let table = ge_table(g);
    let all = g.vertex_mask();
    for s in 1..all {
        if s & !all != 0 {
            continue;
        }
        let h = g.induced_by_mask(s)?;
        let h_top = top(&h);
        for (a, &count) in table.iter().enumerate() {
            let a = a as i64;
            if a > h_top {
                break;
            }
            if count_ge_int(&h, a) > count {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::super::{verify, Status};
    use super::*;

    #[test]
    fn lemmas_hold_on_small_orders() {
        for id in [
            "L-bozhou",
            "L-outside",
            "L-uniq-min",
            "L-alpha-minus-1",
            "L-das",
            "L-belardo",
            "L-weyl",
            "L-rayleigh-d3",
            "L-interlace-edge",
            "L-induced-count",
        ] {
            let r = verify(id, 5).unwrap();
            assert_eq!(r.status, Status::Pass, "{id}: {r:?}");
            assert!(r.graphs_checked > 0);
        }
    }

    #[test]
    fn das_equality_and_unique_minimum() {
        // K4 - e attains q_2 = d_2 - 1 = 2; its two degree-3 vertices are adjacent.
        let kme = Graph::complete(4).unwrap().delete_edge(2, 3).unwrap();
        assert_eq!(q_k_cmp(&kme, 2, &rat(2)).unwrap(), Ordering::Equal);
        assert!(das(&kme).unwrap());
        assert_eq!(unique_min_vertex(&Graph::star(4).unwrap()), None);
        assert_eq!(unique_min_vertex(&Graph::complete(1).unwrap().union(&Graph::complete(3).unwrap()).unwrap()), Some(0));
    }
}
