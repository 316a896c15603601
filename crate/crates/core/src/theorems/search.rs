//! Exhaustive searches for the graphs with exactly three eigenvalues in the
//! degree intervals, where no characterization is known.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{m_int, top};
use crate::enumeration::{classes, graph6, MAX_ENUM_ORDER};
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Problem {
    /// `m[d_n, 2n-2] = 3`.
    P1,
    /// Connected with `m[0, d_1] = 3`.
    P2,
}

impl FromStr for Problem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "P1" | "p1" => Ok(Problem::P1),
            "P2" | "p2" => Ok(Problem::P2),
            _ => invalid(format!("unknown problem {s:?}; expected P1 or P2")),
        }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Problem::P1 => "P1",
            Problem::P2 => "P2",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchHit {
    pub n: usize,
    pub graph6: String,
}

impl Problem {
    pub fn holds(self, g: &Graph) -> Result<bool> {
        let ds = g.degree_sequence();
        Ok(match self {
            Problem::P1 => m_int(g, ds.min() as i64, top(g))? == 3,
            Problem::P2 => g.is_connected() && m_int(g, 0, ds.max() as i64)? == 3,
        })
    }
}

/// Every class of order `1..=max_n` with the property, ordered by order and
/// then by canonical form.
pub fn search_problem(problem: Problem, max_n: usize) -> Result<Vec<SearchHit>> {
    if max_n > MAX_ENUM_ORDER {
        return invalid(format!("max_n must be at most {MAX_ENUM_ORDER}, got {max_n}"));
    }
    let mut hits = Vec::new();
    for n in 1..=max_n {
        // Class lists are already sorted by canonical form.
        let level = classes(n)?;
        let found: Vec<Option<SearchHit>> = level
            .par_iter()
            .map(|g| {
                Ok(problem.holds(g)?.then(|| SearchHit {
                    n,
                    graph6: graph6::encode(g),
                }))
            })
            .collect::<Result<_>>()?;
        hits.extend(found.into_iter().flatten());
    }
    Ok(hits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn contains(hits: &[SearchHit], g: &Graph) -> bool {
        let code = graph6::encode(&g.canonical_labeling().into_graph());
        hits.iter().any(|h| h.graph6 == code)
    }

    #[test]
    fn known_members() {
        let p1 = search_problem(Problem::P1, 4).unwrap();
        assert!(contains(&p1, &Graph::cycle(4).unwrap()));
        assert!(contains(&p1, &Graph::complete(4).unwrap().delete_edge(0, 1).unwrap()));
        assert!(!contains(&p1, &Graph::complete(3).unwrap()));
        let p2 = search_problem(Problem::P2, 4).unwrap();
        assert!(contains(&p2, &Graph::path(4).unwrap()));
        assert!(p1.windows(2).all(|w| w[0].n <= w[1].n));
        assert!(search_problem(Problem::P1, 10).is_err());
        assert_eq!("p2".parse::<Problem>().unwrap(), Problem::P2);
    }
}
