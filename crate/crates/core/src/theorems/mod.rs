//! Executable checks of characterization theorems and supporting lemmas.
//!
//! Each registry entry runs one statement over every isomorphism class in
//! its valid order range (or over a fixed parameter sweep) and returns a
//! [`TheoremReport`]. Eigenvalue comparisons are exact unless a statement
//! involves an irrational threshold.

mod catalog;
mod characterizations;
mod lemmas;
mod oboudi;
mod parametric;
mod randomized;
mod search;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumeration::{classes, graph6, Filter, MAX_ENUM_ORDER};
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::spectral::m_interval;

pub use catalog::{expected_members, Characterization};
pub use oboudi::{oboudi_matches, oboudi_recognize, ClassLabel};
pub use parametric::{b3_closed_form, b4_closed_form, b_prime_closed_form, b_prime_matrix, kne_closed_form};
pub use search::{search_problem, Problem, SearchHit};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Counterexample,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Counterexample => "counterexample",
            Status::Skipped => "skipped",
        })
    }
}

/// Outcome of one verification run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem_id: String,
    pub n_min: usize,
    pub n_max: usize,
    pub graphs_checked: u64,
    pub status: Status,
    /// graph6 strings, or a short description for matrix-valued cases.
    pub counterexamples: Vec<String>,
    /// Per order, the graphs attaining the characterized property.
    pub witnesses: BTreeMap<usize, Vec<String>>,
    pub runtime_ms: u64,
}

/// Raw result of a checker, before timing and status are attached.
#[derive(Clone, Debug, Default)]
pub struct Outcome {
    pub n_min: usize,
    pub n_max: usize,
    pub graphs_checked: u64,
    pub counterexamples: Vec<String>,
    pub witnesses: BTreeMap<usize, Vec<String>>,
    pub skipped: bool,
}

impl Outcome {
    pub fn skipped(n_min: usize, n_max: usize) -> Self {
        Outcome {
            n_min,
            n_max,
            skipped: true,
            ..Outcome::default()
        }
    }
}

/// A checker receives the requested maximum order.
pub type CheckFn = dyn Fn(usize) -> Result<Outcome> + Send + Sync;

#[derive(Clone)]
pub struct Entry {
    pub id: String,
    pub statement: String,
    check: Arc<CheckFn>,
}

impl fmt::Debug for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Entry").field("id", &self.id).finish_non_exhaustive()
    }
}

#[derive(Clone, Debug, Default)]
pub struct Registry {
    entries: Vec<Entry>,
}

impl Registry {
    pub fn empty() -> Self {
        Registry::default()
    }

    /// Every built-in statement.
    pub fn standard() -> Self {
        let mut r = Registry::empty();
        characterizations::register(&mut r);
        lemmas::register(&mut r);
        parametric::register(&mut r);
        oboudi::register(&mut r);
        randomized::register(&mut r);
        r
    }

    /// Adds or replaces the entry with this id.
    pub fn register<F>(&mut self, id: &str, statement: &str, check: F)
    where
        F: Fn(usize) -> Result<Outcome> + Send + Sync + 'static,
    {
        let entry = Entry {
            id: id.to_string(),
            statement: statement.to_string(),
            check: Arc::new(check),
        };
        match self.entries.iter_mut().find(|e| e.id == id) {
            Some(slot) => *slot = entry,
            None => self.entries.push(entry),
        }
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn ids(&self) -> Vec<&str> {
        self.entries.iter().map(|e| e.id.as_str()).collect()
    }

    pub fn get(&self, id: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.id == id)
    }

    /// Runs one entry on a pool of `jobs` workers (default: all cores).
    pub fn verify(&self, id: &str, max_n: usize, jobs: Option<usize>) -> Result<TheoremReport> {
        let Some(entry) = self.get(id) else {
            return invalid(format!("unknown theorem id {id:?}; known: {}", self.ids().join(", ")));
        };
        if max_n == 0 || max_n > MAX_ENUM_ORDER {
            return invalid(format!("max_n must be in 1..={MAX_ENUM_ORDER}, got {max_n}"));
        }
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(j) = jobs {
            if j == 0 {
                return invalid("jobs must be positive");
            }
            builder = builder.num_threads(j);
        }
        let pool = builder
            .build()
            .map_err(|e| Error::Invariant(format!("worker pool: {e}")))?;
        let start = Instant::now();
        let outcome = pool.install(|| (entry.check)(max_n))?;
        let runtime_ms = start.elapsed().as_millis() as u64;
        Ok(finish(id, outcome, runtime_ms))
    }
}

fn finish(id: &str, mut o: Outcome, runtime_ms: u64) -> TheoremReport {
    o.counterexamples.sort();
    o.counterexamples.dedup();
    let status = if !o.counterexamples.is_empty() {
        Status::Counterexample
    } else if o.skipped {
        Status::Skipped
    } else {
        Status::Pass
    };
    TheoremReport {
        theorem_id: id.to_string(),
        n_min: o.n_min,
        n_max: o.n_max,
        graphs_checked: o.graphs_checked,
        status,
        counterexamples: o.counterexamples,
        witnesses: o.witnesses,
        runtime_ms,
    }
}

/// Runs a registry entry of [`Registry::standard`].
pub fn verify(id: &str, max_n: usize) -> Result<TheoremReport> {
    Registry::standard().verify(id, max_n, None)
}

// --- shared helpers ----------------------------------------------------------

pub(crate) fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// `m_G[a, b]` at integer endpoints.
pub(crate) fn m_int(g: &Graph, a: i64, b: i64) -> Result<usize> {
    Ok(m_interval(g, &rat(a), &rat(b))?.count)
}

pub(crate) fn top(g: &Graph) -> i64 {
    2 * g.order() as i64 - 2
}

/// Applies `check` to every class of order `n_min..=max_n` passing
/// `filter`; graphs where it returns `false` are counterexamples.
pub(crate) fn exhaustive<F>(n_min: usize, max_n: usize, filter: Filter, check: F) -> Result<Outcome>
where
    F: Fn(&Graph) -> Result<bool> + Sync,
{
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
        let results: Vec<Option<String>> = level
            .par_iter()
            .filter(|g| filter.accepts(g))
            .map(|g| Ok((!check(g)?).then(|| graph6::encode(g))))
            .collect::<Result<_>>()?;
        out.graphs_checked += results.len() as u64;
        out.counterexamples.extend(results.into_iter().flatten());
    }
    Ok(out)
}
