//! Exact independence number by branch and bound over vertex masks.

use super::{bit, bits, Graph};

pub(super) fn independence_number(g: &Graph) -> usize {
    let mut best = 0;
    search(g, g.vertex_mask(), 0, &mut best);
    best
}

fn search(g: &Graph, candidates: u64, size: usize, best: &mut usize) {
    if size + candidates.count_ones() as usize <= *best {
        return;
    }
    if candidates == 0 {
        *best = size;
        return;
    }
    // Vertices with no neighbor among the candidates can always be taken.
    let isolated = bits(candidates)
        .filter(|&v| g.neighbors(v) & candidates == 0)
        .fold(0u64, |acc, v| acc | bit(v));
    if isolated != 0 {
        let size = size + isolated.count_ones() as usize;
        let rest = candidates & !isolated;
        if rest == 0 {
            *best = (*best).max(size);
        } else {
            search(g, rest, size, best);
        }
        return;
    }
    let pivot = bits(candidates)
        .max_by_key(|&v| (g.neighbors(v) & candidates).count_ones())
        .expect("candidates is nonempty");
    search(g, candidates & !g.neighbors(pivot) & !bit(pivot), size + 1, best);
    search(g, candidates & !bit(pivot), size, best);
}
