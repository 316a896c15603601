//! Signless Laplacian quantities: interval counts `m_G[a, b]`, order
//! statistics `q_k`, and sign data of the adjacency spectrum.
//!
//! Every decision is exact. With `Q` positive semidefinite and
//! `i_+`, `i_0` the inertia counts, `#{q ≥ t} = (i_+ + i_0)(Q - tI)` and
//! `#{q > t} = i_+(Q - tI)`, so a closed interval count is a difference of
//! two inertias.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::graph::{bits, Graph};
use crate::linalg::{charpoly, eig_sym_float, inertia, ExactSymMatrix, Inertia, IntMatrix, IntPolynomial};

/// Distance under which a float eigenvalue is treated as sitting on an
/// interval endpoint.
pub const FLOAT_SNAP: f64 = 1e-8;

pub fn signless_laplacian_int(g: &Graph) -> IntMatrix {
    let n = g.order();
    let mut m = IntMatrix::zeros(n);
    for v in 0..n {
        m.set(v, v, g.degree(v) as i64);
        for u in bits(g.neighbors(v)) {
            m.set(v, u, 1);
        }
    }
    m
}

pub fn adjacency_int(g: &Graph) -> IntMatrix {
    let n = g.order();
    let mut m = IntMatrix::zeros(n);
    for v in 0..n {
        for u in bits(g.neighbors(v)) {
            m.set(v, u, 1);
        }
    }
    m
}

/// `Q(G) = A(G) + D(G)`.
pub fn signless_laplacian(g: &Graph) -> ExactSymMatrix {
    ExactSymMatrix::from_int(&signless_laplacian_int(g)).expect("Q is symmetric")
}

pub fn adjacency(g: &Graph) -> ExactSymMatrix {
    ExactSymMatrix::from_int(&adjacency_int(g)).expect("A is symmetric")
}

/// `det(xI - Q(G))`.
pub fn q_charpoly(g: &Graph) -> IntPolynomial {
    charpoly(&signless_laplacian_int(g))
}

/// Float Q-spectrum, descending.
pub fn q_spectrum_float(g: &Graph) -> Result<Vec<f64>> {
    eig_sym_float(&signless_laplacian(g))
}

pub fn adjacency_spectrum_float(g: &Graph) -> Result<Vec<f64>> {
    eig_sym_float(&adjacency(g))
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn shifted_inertia(g: &Graph, t: &BigRational) -> Inertia {
    inertia(&signless_laplacian(g).shifted(t))
}

/// Number of Q-eigenvalues `≥ t`, with multiplicity.
pub fn count_ge(g: &Graph, t: &BigRational) -> usize {
    let i = shifted_inertia(g, t);
    i.n_plus + i.n_zero
}

/// Number of Q-eigenvalues `> t`, with multiplicity.
pub fn count_gt(g: &Graph, t: &BigRational) -> usize {
    shifted_inertia(g, t).n_plus
}

/// Integer-threshold shorthand for [`count_ge`].
pub fn count_ge_int(g: &Graph, t: i64) -> usize {
    count_ge(g, &int(t))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CountMethod {
    Inertia,
    Sturm,
}

/// An exact count of Q-eigenvalues in a closed interval.
#[derive(Clone, Debug, PartialEq)]
pub struct IntervalCount {
    pub a: BigRational,
    pub b: BigRational,
    pub count: usize,
    pub method: CountMethod,
    /// Float eigenvalues that fell within [`FLOAT_SNAP`] of an endpoint,
    /// present only when a float cross-check ran.
    pub float_cross_check: Option<Vec<f64>>,
}

fn check_interval(a: &BigRational, b: &BigRational) -> Result<()> {
    if a > b {
        return invalid(format!("empty interval [{a}, {b}]"));
    }
    Ok(())
}

/// `m_G[a, b]` by the inertia path.
pub fn m_interval(g: &Graph, a: &BigRational, b: &BigRational) -> Result<IntervalCount> {
    check_interval(a, b)?;
    Ok(IntervalCount {
        a: a.clone(),
        b: b.clone(),
        count: count_ge(g, a) - count_gt(g, b),
        method: CountMethod::Inertia,
        float_cross_check: None,
    })
}

/// `m_G[a, b]` by Sturm sequences on the characteristic polynomial.
pub fn m_interval_sturm(g: &Graph, a: &BigRational, b: &BigRational) -> Result<IntervalCount> {
    check_interval(a, b)?;
    Ok(IntervalCount {
        a: a.clone(),
        b: b.clone(),
        count: q_charpoly(g).count_roots_in(a, b)?,
        method: CountMethod::Sturm,
        float_cross_check: None,
    })
}

/// Float count with endpoint snapping. Returns the count and the
/// eigenvalues that were snapped.
pub fn m_interval_float(g: &Graph, a: &BigRational, b: &BigRational) -> Result<(usize, Vec<f64>)> {
    check_interval(a, b)?;
    let (af, bf) = (a.to_f64().unwrap_or(f64::NAN), b.to_f64().unwrap_or(f64::NAN));
    let eig = q_spectrum_float(g)?;
    let mut snapped = Vec::new();
    let mut count = 0;
    for x in eig {
        let near = (x - af).abs() <= FLOAT_SNAP || (x - bf).abs() <= FLOAT_SNAP;
        if near {
            snapped.push(x);
        }
        if near || (af..=bf).contains(&x) {
            count += 1;
        }
    }
    if !snapped.is_empty() {
        log::debug!("float count on [{a}, {b}] snapped {snapped:?} to an endpoint");
    }
    Ok((count, snapped))
}

/// Runs the inertia path, the Sturm path and the float count, and fails
/// with [`Error::Invariant`] unless all three agree.
pub fn m_interval_paranoid(g: &Graph, a: &BigRational, b: &BigRational) -> Result<IntervalCount> {
    let by_inertia = m_interval(g, a, b)?;
    let by_sturm = m_interval_sturm(g, a, b)?;
    let (by_float, snapped) = m_interval_float(g, a, b)?;
    if by_inertia.count != by_sturm.count || by_inertia.count != by_float {
        return Err(Error::Invariant(format!(
            "m[{a}, {b}] disagrees: inertia {}, sturm {}, float {by_float}",
            by_inertia.count, by_sturm.count
        )));
    }
    Ok(IntervalCount {
        float_cross_check: Some(snapped),
        ..by_inertia
    })
}

fn check_k(g: &Graph, k: usize) -> Result<()> {
    if k == 0 || k > g.order() {
        return invalid(format!("k = {k} outside 1..={}", g.order()));
    }
    Ok(())
}

/// `q_k(G)` in floating point (advisory only).
pub fn q_k(g: &Graph, k: usize) -> Result<f64> {
    check_k(g, k)?;
    Ok(q_spectrum_float(g)?[k - 1])
}

/// Exact comparison of `q_k(G)` with `t`.
pub fn q_k_cmp(g: &Graph, k: usize, t: &BigRational) -> Result<Ordering> {
    check_k(g, k)?;
    let i = shifted_inertia(g, t);
    Ok(if i.n_plus >= k {
        Ordering::Greater
    } else if i.n_plus + i.n_zero >= k {
        Ordering::Equal
    } else {
        Ordering::Less
    })
}

/// Inertia of the adjacency matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AdjSignature {
    pub n_pos: usize,
    pub n_zero: usize,
    pub n_neg: usize,
}

impl AdjSignature {
    pub fn order(&self) -> usize {
        self.n_pos + self.n_zero + self.n_neg
    }

    /// Sign of the `k`-th largest adjacency eigenvalue (1-based), or `None`
    /// when `k` exceeds the order.
    pub fn sign(&self, k: usize) -> Option<Ordering> {
        if k == 0 || k > self.order() {
            None
        } else if k <= self.n_pos {
            Some(Ordering::Greater)
        } else if k <= self.n_pos + self.n_zero {
            Some(Ordering::Equal)
        } else {
            Some(Ordering::Less)
        }
    }

    /// `λ_3 < 0`; requires at least three vertices.
    pub fn lambda3_negative(&self) -> bool {
        self.sign(3) == Some(Ordering::Less)
    }
}

pub fn adj_signature(g: &Graph) -> AdjSignature {
    let i = inertia(&adjacency(g));
    AdjSignature {
        n_pos: i.n_plus,
        n_zero: i.n_zero,
        n_neg: i.n_minus,
    }
}

/// Whether `charpoly(Q(G))` equals `claimed` coefficient by coefficient.
pub fn spectrum_multiset_eq(g: &Graph, claimed: &IntPolynomial) -> Result<bool> {
    if claimed.degree() != g.order() || claimed.is_zero() {
        return invalid(format!(
            "claimed polynomial has degree {}, graph has order {}",
            claimed.degree(),
            g.order()
        ));
    }
    Ok(&q_charpoly(g) == claimed)
}
