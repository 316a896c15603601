//! Exact spectrum identities over parameter sweeps: clique replacements,
//! quotient matrices in closed form, and `K_n - e`.

use std::collections::HashSet;

use rayon::prelude::*;

use super::{m_int, top, Outcome, Registry};
use crate::enumeration::graph6;
use crate::error::Result;
use crate::families::CliqueReplacement;
use crate::graph::{Graph, MAX_ORDER};
use crate::linalg::{charpoly, IntMatrix, IntPolynomial};
use crate::spectral::{q_charpoly, spectrum_multiset_eq};

/// Parameter range for the closed-form checks.
const CLOSED_FORM_MAX: i64 = 50;

pub(super) fn register(r: &mut Registry) {
    r.register(
        "L-gs-spectrum",
        "Spec(G_s[K_t]) = Spec(B) plus deg_i - 1 with multiplicity t_i - 1 (s <= 6, t_i <= 3)",
        |_| gs_spectrum(),
    );
    r.register(
        "L-g3g4",
        "among G_3/G_4 replacements, m[d_n, 2n-2] = 2 exactly for G_3[K_t,K_1,K_t] (t <= 2) and G_4[K_1,K_1,K_1,K_1]",
        |_| g3g4(),
    );
    r.register("L-kne-spec", "Spec(K_n - e) closed form (3 <= n <= 50)", |_| kne_spec());
    r.register(
        "L-quotient-forms",
        "closed-form spectra of the displayed quotient matrices B_3, B_4, B' and the d_{n-1} cubic",
        |_| quotient_forms(),
    );
}

/// `(x - (n-2))^{n-2} (x^2 - (3n-6)x + 2(n-2)(n-3))`, the characteristic
/// polynomial of `Q(K_n - e)`. The quadratic has root sum `3n - 6` and
/// root product `((3n-6)^2 - (n-2)(n+6)) / 4`.
pub fn kne_closed_form(n: usize) -> IntPolynomial {
    let n = n as i64;
    &IntPolynomial::linear(n - 2).pow((n - 2) as usize) * &IntPolynomial::quadratic(3 * n - 6, 2 * (n - 2) * (n - 3))
}

/// `det(xI - B_3(t))`: roots `2t - 1` and `(4t - 1 ± √(1 + 8t)) / 2`.
pub fn b3_closed_form(t: i64) -> IntPolynomial {
    &IntPolynomial::linear(2 * t - 1) * &IntPolynomial::quadratic(4 * t - 1, 4 * t * t - 4 * t)
}

/// `det(xI - B_4(r))`: roots `2r`, `r - 1` and `(3r + 1 ± √(r² - 2r + 9)) / 2`.
pub fn b4_closed_form(r: i64) -> IntPolynomial {
    &(&IntPolynomial::linear(2 * r) * &IntPolynomial::linear(r - 1))
        * &IntPolynomial::quadratic(3 * r + 1, 2 * r * r + 2 * r - 2)
}

/// `det(xI - B'(t))`: roots `2t` and `2t + 1 ± √(4t + 1)`.
pub fn b_prime_closed_form(t: i64) -> IntPolynomial {
    &IntPolynomial::linear(2 * t) * &IntPolynomial::quadratic(4 * t + 2, 4 * t * t)
}

pub(crate) fn b3_matrix(t: i64) -> IntMatrix {
    IntMatrix::from_rows(&[vec![2 * t - 1, 1, 0], vec![t, 2 * t, t], vec![0, 1, 2 * t - 1]]).expect("square")
}

pub(crate) fn b4_matrix(r: i64) -> IntMatrix {
    IntMatrix::from_rows(&[
        vec![2 * r - 1, 1, 0, 0],
        vec![r, r + 1, 1, 0],
        vec![0, 1, r + 1, r],
        vec![0, 0, 1, 2 * r - 1],
    ])
    .expect("square")
}

/// Quotient matrix of `G_3[K_t, K_2, K_t]`.
pub fn b_prime_matrix(t: i64) -> IntMatrix {
    IntMatrix::from_rows(&[vec![2 * t, 2, 0], vec![t, 2 * t + 2, t], vec![0, 2, 2 * t]]).expect("square")
}

/// `(x - n + 2)(x^2 + (3 - 2n)x + 2n - 6)`.
fn dn1_cubic(n: i64) -> IntPolynomial {
    &IntPolynomial::linear(n - 2) * &IntPolynomial::quadratic(2 * n - 3, 2 * n - 6)
}

/// All vectors in `1..=max^len`.
fn vectors(len: usize, max: usize) -> Vec<Vec<usize>> {
    (0..len).fold(vec![Vec::new()], |acc, _| {
        acc.into_iter()
            .flat_map(|v| {
                (1..=max).map(move |t| {
                    let mut w = v.clone();
                    w.push(t);
                    w
                })
            })
            .collect()
    })
}

fn gs_spectrum() -> Result<Outcome> {
    let specs: Vec<Vec<usize>> = (3..=6).flat_map(|s| vectors(s, 3)).collect();
    let failures: Vec<Option<String>> = specs
        .par_iter()
        .map(|t| {
            let spec = CliqueReplacement::gs(t)?;
            let g = spec.build()?;
            let q = spec.quotient_matrix()?;
            Ok((q_charpoly(&g) != q.predicted_charpoly()).then(|| graph6::encode(&g)))
        })
        .collect::<Result<_>>()?;
    let orders = specs.iter().map(|t| t.iter().sum::<usize>());
    Ok(Outcome {
        n_min: orders.clone().min().unwrap_or(0),
        n_max: orders.max().unwrap_or(0),
        graphs_checked: specs.len() as u64,
        counterexamples: failures.into_iter().flatten().collect(),
        ..Outcome::default()
    })
}

fn g3g4() -> Result<Outcome> {
    let members: HashSet<Vec<u8>> = [vec![1, 1, 1], vec![2, 1, 2], vec![1, 1, 1, 1]]
        .iter()
        .map(|t| Ok(CliqueReplacement::gs(t)?.build()?.canonical_form()))
        .collect::<Result<_>>()?;
    let specs: Vec<Vec<usize>> = [3, 4]
        .into_iter()
        .flat_map(|s| vectors(s, 4))
        .filter(|t| t.iter().sum::<usize>() <= 9)
        .collect();
    let mut out = Outcome { n_min: usize::MAX, ..Outcome::default() };
    for t in &specs {
        let g = CliqueReplacement::gs(t)?.build()?;
        let holds = m_int(&g, g.degree_sequence().min() as i64, top(&g))? == 2;
        let member = members.contains(&g.canonical_form());
        if holds != member {
            out.counterexamples.push(graph6::encode(&g));
        }
        if holds {
            out.witnesses.entry(g.order()).or_default().push(graph6::encode(&g));
        }
        out.n_min = out.n_min.min(g.order());
        out.n_max = out.n_max.max(g.order());
        out.graphs_checked += 1;
    }
    for w in out.witnesses.values_mut() {
        w.sort();
        w.dedup();
    }
    Ok(out)
}

fn kne_spec() -> Result<Outcome> {
    let ns: Vec<usize> = (3..=CLOSED_FORM_MAX as usize).collect();
    let failures: Vec<Option<String>> = ns
        .par_iter()
        .map(|&n| {
            let g = Graph::complete(n)?.delete_edge(0, 1)?;
            Ok((!spectrum_multiset_eq(&g, &kne_closed_form(n))?).then(|| graph6::encode(&g)))
        })
        .collect::<Result<_>>()?;
    Ok(Outcome {
        n_min: 3,
        n_max: CLOSED_FORM_MAX as usize,
        graphs_checked: ns.len() as u64,
        counterexamples: failures.into_iter().flatten().collect(),
        ..Outcome::default()
    })
}

/// Checks `det(xI - m) = closed`, that the quadratic factor divides it
/// exactly, and (when the replaced graph fits) that `m` is the quotient
/// matrix the lemma assigns to `sizes`.
fn closed_form_case(
    label: String,
    m: &IntMatrix,
    closed: &IntPolynomial,
    quadratic: &IntPolynomial,
    sizes: &[usize],
) -> Result<Option<String>> {
    let p = charpoly(m);
    let divides = p.div_exact(quadratic).is_some();
    let mut ok = p == *closed && divides;
    if sizes.iter().sum::<usize>() <= MAX_ORDER {
        ok &= CliqueReplacement::gs(sizes)?.quotient_matrix()?.b == *m;
    }
    Ok((!ok).then_some(label))
}

fn quotient_forms() -> Result<Outcome> {
    let mut out = Outcome {
        n_min: 1,
        n_max: CLOSED_FORM_MAX as usize,
        ..Outcome::default()
    };
    for t in 1..=CLOSED_FORM_MAX {
        let tu = t as usize;
        let cases = [
            closed_form_case(
                format!("B3(t={t})"),
                &b3_matrix(t),
                &b3_closed_form(t),
                &IntPolynomial::quadratic(4 * t - 1, 4 * t * t - 4 * t),
                &[tu, 1, tu],
            )?,
            closed_form_case(
                format!("B4(r={t})"),
                &b4_matrix(t),
                &b4_closed_form(t),
                &IntPolynomial::quadratic(3 * t + 1, 2 * t * t + 2 * t - 2),
                &[tu, 1, 1, tu],
            )?,
            closed_form_case(
                format!("B'(t={t})"),
                &b_prime_matrix(t),
                &b_prime_closed_form(t),
                &IntPolynomial::quadratic(4 * t + 2, 4 * t * t),
                &[tu, 2, tu],
            )?,
        ];
        out.graphs_checked += cases.len() as u64;
        out.counterexamples.extend(cases.into_iter().flatten());
    }
    for n in 3..=CLOSED_FORM_MAX {
        let q = CliqueReplacement::gs(&[1, 1, n as usize - 2])?.quotient_matrix()?;
        if q.charpoly() != dn1_cubic(n) {
            out.counterexamples.push(format!("G_3[K1,K1,K{}]", n - 2));
        }
        out.graphs_checked += 1;
    }
    // B_4(1) is the quotient of G_4 itself, i.e. of P4.
    if charpoly(&b4_matrix(1)) != q_charpoly(&Graph::path(4)?) {
        out.counterexamples.push("B4(r=1) vs Q(P4)".into());
    }
    out.graphs_checked += 1;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::{verify, Status};
    use super::*;
    use num_bigint::BigInt;

    fn discriminant(q: &IntPolynomial) -> BigInt {
        q.coeff(1) * q.coeff(1) - BigInt::from(4) * q.coeff(0) * q.coeff(2)
    }

    #[test]
    fn quadratics_reproduce_displayed_radicands() {
        for t in 1..=50i64 {
            let b3 = IntPolynomial::quadratic(4 * t - 1, 4 * t * t - 4 * t);
            assert_eq!(discriminant(&b3), BigInt::from(1 + 8 * t));
            let b4 = IntPolynomial::quadratic(3 * t + 1, 2 * t * t + 2 * t - 2);
            assert_eq!(discriminant(&b4), BigInt::from(t * t - 2 * t + 9));
            let bp = IntPolynomial::quadratic(4 * t + 2, 4 * t * t);
            assert_eq!(discriminant(&bp), BigInt::from(4 * (4 * t + 1)));
        }
        for n in 3..=50i64 {
            let q = IntPolynomial::quadratic(3 * n - 6, 2 * (n - 2) * (n - 3));
            assert_eq!(discriminant(&q), BigInt::from((n - 2) * (n + 6)));
        }
    }

    #[test]
    fn p4_spectrum_from_b4() {
        // {2, 0, 2 ± √2}
        let want = &(&IntPolynomial::linear(2) * &IntPolynomial::linear(0)) * &IntPolynomial::quadratic(4, 2);
        assert_eq!(b4_closed_form(1), want);
        assert_eq!(q_charpoly(&Graph::path(4).unwrap()), want);
    }

    #[test]
    fn parametric_entries_pass() {
        for id in ["L-gs-spectrum", "L-g3g4", "L-kne-spec", "L-quotient-forms"] {
            let r = verify(id, 1).unwrap();
            assert_eq!(r.status, Status::Pass, "{id}: {r:?}");
        }
        let r = verify("L-gs-spectrum", 1).unwrap();
        assert_eq!(r.graphs_checked, 27 + 81 + 243 + 729);
        let r = verify("L-g3g4", 1).unwrap();
        let witness_orders: Vec<usize> = r.witnesses.keys().copied().collect();
        assert_eq!(witness_orders, [3, 4, 5]);
    }
}
