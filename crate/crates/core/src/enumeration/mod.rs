//! Isomorph-free generation of all simple graphs of a given order.
//!
//! Graphs of order `n` are grown from the representatives of order `n - 1`
//! by adding one vertex with every possible neighborhood. A child is kept
//! only if the vertex singled out by its canonical labeling (the last
//! minimum-degree vertex in canonical order) can be deleted to give back
//! the parent's class. That makes the parent class of every graph unique,
//! so duplicates can only arise among siblings and are removed locally.

pub mod graph6;

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::error::{invalid, Result};
use crate::graph::{bit, bits, Graph};

/// Largest order the enumerator accepts.
pub const MAX_ENUM_ORDER: usize = 9;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Filter {
    #[default]
    All,
    Connected,
    Disconnected,
}

impl Filter {
    pub fn accepts(self, g: &Graph) -> bool {
        match self {
            Filter::All => true,
            Filter::Connected => g.is_connected(),
            Filter::Disconnected => !g.is_connected(),
        }
    }
}

/// One canonically labeled representative per isomorphism class, in
/// ascending order of canonical form.
#[derive(Clone, Debug)]
pub struct GraphStream {
    n: usize,
    filter: Filter,
    classes: Arc<Vec<Graph>>,
    cursor: usize,
}

impl GraphStream {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn filter(&self) -> Filter {
        self.filter
    }
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.cursor < self.classes.len() {
            let g = &self.classes[self.cursor];
            self.cursor += 1;
            if self.filter.accepts(g) {
                return Some(g.clone());
            }
        }
        None
    }
}

pub fn enumerate_graphs(n: usize, filter: Filter) -> Result<GraphStream> {
    Ok(GraphStream {
        n,
        filter,
        classes: classes(n)?,
        cursor: 0,
    })
}

/// Filtered representatives collected into a vector.
pub fn graphs_of_order(n: usize, filter: Filter) -> Result<Vec<Graph>> {
    Ok(enumerate_graphs(n, filter)?.collect())
}

fn cache() -> &'static Mutex<HashMap<usize, Arc<Vec<Graph>>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<Graph>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// All isomorphism classes of order `n` (memoized per order).
pub fn classes(n: usize) -> Result<Arc<Vec<Graph>>> {
    if n == 0 || n > MAX_ENUM_ORDER {
        return invalid(format!("enumeration order must be in 1..={MAX_ENUM_ORDER}, got {n}"));
    }
    if let Some(found) = cache().lock().expect("cache lock").get(&n) {
        return Ok(Arc::clone(found));
    }
    let level = if n == 1 {
        vec![Graph::complete(1)?]
    } else {
        let parents = classes(n - 1)?;
        extend_level(&parents)
    };
    let level = Arc::new(level);
    cache()
        .lock()
        .expect("cache lock")
        .entry(n)
        .or_insert_with(|| Arc::clone(&level));
    Ok(level)
}

fn extend_level(parents: &[Graph]) -> Vec<Graph> {
    let mut children: Vec<(Vec<u8>, Graph)> = parents
        .par_iter()
        .flat_map_iter(|p| augment(p).into_iter())
        .collect();
    children.par_sort_unstable_by(|a, b| a.0.cmp(&b.0));
    children.into_iter().map(|(_, g)| g).collect()
}

/// Accepted children of one parent, each canonically labeled.
fn augment(parent: &Graph) -> Vec<(Vec<u8>, Graph)> {
    let k = parent.order();
    let parent_form = parent.canonical_form();
    let parent_deg = parent.degrees();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..1 << k {
        let new_deg = mask.count_ones() as usize;
        // The deleted vertex is always of minimum degree.
        let min_other = (0..k)
            .map(|v| parent_deg[v] + ((mask >> v) & 1) as usize)
            .min()
            .unwrap_or(usize::MAX);
        if new_deg > min_other {
            continue;
        }
        let mut rows = parent.rows().to_vec();
        for v in bits(mask) {
            rows[v] |= bit(k);
        }
        rows.push(mask);
        let child = Graph::from_rows_unchecked(rows);
        let lab = child.canonical_labeling();
        let w = deletion_vertex(&child, lab.order());
        let accept = w == k || child.delete_vertex(w).expect("w in range").canonical_form() == parent_form;
        if accept {
            let form = lab.form();
            if seen.insert(form.clone()) {
                out.push((form, lab.into_graph()));
            }
        }
    }
    out
}

/// Minimum-degree vertex with the largest canonical position.
fn deletion_vertex(g: &Graph, canonical_order: &[usize]) -> usize {
    let min = (0..g.order()).map(|v| g.degree(v)).min().expect("nonempty");
    *canonical_order
        .iter()
        .rev()
        .find(|&&v| g.degree(v) == min)
        .expect("some vertex has minimum degree")
}
