//! Seeded random property suites for the matrix facts the proofs lean on.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Outcome, Registry};
use crate::enumeration::graph6;
use crate::error::Result;
use crate::graph::Graph;
use crate::linalg::{eig_sym_float, inertia, rank, ExactSymMatrix};
use crate::spectral::signless_laplacian;

pub const CASES: usize = 500;
const SEED: u64 = 0x5eed_0001;
const TOL: f64 = 1e-8;
const PERT_MAX_ORDER: usize = 8;
const PERT_MAX_RANK: usize = 3;

pub(super) fn register(r: &mut Registry) {
    r.register(
        "L-interlace-sub",
        "eigenvalues of a principal submatrix Q_S of order p satisfy q_{n-p+i}(G) <= lambda_i(Q_S) <= q_i(G)",
        interlace_sub,
    );
    r.register(
        "L-inertia-pert",
        "for symmetric A and B of rank r: |i_+(A+B) - i_+(A)|, |i_-(A+B) - i_-(A)|, |i_0(A+B) - i_0(A)| <= r",
        |_| inertia_pert(),
    );
}

/// `G(n, 1/2)`.
pub(crate) fn random_graph<R: Rng>(rng: &mut R, n: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

fn interlace_sub(max_n: usize) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut out = Outcome {
        n_min: 1,
        n_max: max_n,
        ..Outcome::default()
    };
    for _ in 0..CASES {
        let n = rng.random_range(1..=max_n);
        let g = random_graph(&mut rng, n)?;
        let mut subset: Vec<usize> = (0..n).filter(|_| rng.random_bool(0.5)).collect();
        if subset.is_empty() {
            subset.push(rng.random_range(0..n));
        }
        let q = signless_laplacian(&g);
        let big = eig_sym_float(&q)?;
        let small = eig_sym_float(&q.principal_submatrix(&subset)?)?;
        let p = small.len();
        let ok = small
            .iter()
            .enumerate()
            .all(|(i, &mu)| big[n - p + i] <= mu + TOL && mu <= big[i] + TOL);
        if !ok {
            out.counterexamples.push(format!("{} S={subset:?}", graph6::encode(&g)));
        }
        out.graphs_checked += 1;
    }
    Ok(out)
}

fn random_symmetric<R: Rng>(rng: &mut R, n: usize, bound: i64) -> Result<ExactSymMatrix> {
    let mut rows = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i..n {
            let v = rng.random_range(-bound..=bound);
            rows[i][j] = v;
            rows[j][i] = v;
        }
    }
    ExactSymMatrix::from_i64_rows(&rows)
}

/// `Σ ±v vᵀ` over `terms` random integer vectors.
fn random_low_rank<R: Rng>(rng: &mut R, n: usize, terms: usize) -> Result<ExactSymMatrix> {
    let mut rows = vec![vec![0i64; n]; n];
    for _ in 0..terms {
        let v: Vec<i64> = (0..n).map(|_| rng.random_range(-2..=2)).collect();
        let sign = if rng.random_bool(0.5) { 1 } else { -1 };
        for i in 0..n {
            for j in 0..n {
                rows[i][j] += sign * v[i] * v[j];
            }
        }
    }
    ExactSymMatrix::from_i64_rows(&rows)
}

fn inertia_pert() -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0xa11);
    let mut out = Outcome {
        n_min: 1,
        n_max: PERT_MAX_ORDER,
        ..Outcome::default()
    };
    for case in 0..CASES {
        let n = rng.random_range(1..=PERT_MAX_ORDER);
        let a = random_symmetric(&mut rng, n, 5)?;
        let terms = rng.random_range(1..=PERT_MAX_RANK);
        let b = random_low_rank(&mut rng, n, terms)?;
        let r = rank(&b) as i64;
        let (before, after) = (inertia(&a), inertia(&a.add(&b)?));
        let deltas = [
            after.n_plus as i64 - before.n_plus as i64,
            after.n_zero as i64 - before.n_zero as i64,
            after.n_minus as i64 - before.n_minus as i64,
        ];
        if deltas.iter().any(|d| d.abs() > r) {
            out.counterexamples
                .push(format!("case {case}: order {n}, rank {r}, inertia {before} -> {after}"));
        }
        out.graphs_checked += 1;
    }
    Ok(out)
}
