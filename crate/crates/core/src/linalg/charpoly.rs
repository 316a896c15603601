//! Characteristic polynomials `det(xI - M)`.
//!
//! The general path reduces `M` to upper Hessenberg form by rational
//! similarity transforms and then runs the usual three-term style
//! recurrence on leading principal blocks. Small orders use cofactor
//! expansion with polynomial entries, which also serves as the test oracle.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::{ExactSymMatrix, IntMatrix};
use super::poly::{rat_to_int_poly, IntPolynomial};

/// Orders up to this use cofactor expansion.
const EXPANSION_MAX: usize = 4;

pub fn charpoly(m: &IntMatrix) -> IntPolynomial {
    if m.order() <= EXPANSION_MAX {
        return charpoly_expansion(m);
    }
    let rows = (0..m.order())
        .map(|i| {
            (0..m.order())
                .map(|j| BigRational::from_integer(BigInt::from(m.get(i, j))))
                .collect()
        })
        .collect();
    let coeffs = hessenberg_charpoly(rows);
    rat_to_int_poly(&coeffs).expect("integer matrices have integer characteristic polynomials")
}

/// Characteristic polynomial of a symmetric rational matrix, scaled to have
/// integer coefficients. For integer input this is monic.
pub fn charpoly_rational(m: &ExactSymMatrix) -> IntPolynomial {
    let n = m.order();
    let rows = (0..n).map(|i| (0..n).map(|j| m.get(i, j).clone()).collect()).collect();
    let coeffs = hessenberg_charpoly(rows);
    let lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| num_integer::Integer::lcm(&acc, c.denom()));
    let scaled: Vec<BigRational> = coeffs.iter().map(|c| c * BigRational::from_integer(lcm.clone())).collect();
    rat_to_int_poly(&scaled).expect("scaled by common denominator")
}

fn hessenberg_charpoly(mut h: Vec<Vec<BigRational>>) -> Vec<BigRational> {
    let n = h.len();
    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&i| !h[i][j].is_zero()) else {
            continue;
        };
        if piv != j + 1 {
            h.swap(piv, j + 1);
            for row in h.iter_mut() {
                row.swap(piv, j + 1);
            }
        }
        for k in j + 2..n {
            if h[k][j].is_zero() {
                continue;
            }
            let f = &h[k][j] / &h[j + 1][j];
            for c in j..n {
                let t = &f * &h[j + 1][c];
                h[k][c] -= t;
            }
            for row in h.iter_mut() {
                let t = &f * &row[k];
                row[j + 1] += t;
            }
        }
    }
    // p[k] is the characteristic polynomial of the leading k x k block.
    let mut p: Vec<Vec<BigRational>> = vec![vec![BigRational::one()]];
    for k in 1..=n {
        let prev = &p[k - 1];
        let mut next = vec![BigRational::zero(); k + 1];
        for (d, c) in prev.iter().enumerate() {
            next[d + 1] += c;
            next[d] -= c * &h[k - 1][k - 1];
        }
        let mut prod = BigRational::one();
        for i in 1..k {
            prod *= &h[k - i][k - i - 1];
            if prod.is_zero() {
                break;
            }
            let f = &h[k - 1 - i][k - 1] * &prod;
            for (d, c) in p[k - 1 - i].iter().enumerate() {
                next[d] -= &f * c;
            }
        }
        p.push(next);
    }
    p.pop().expect("at least the empty block")
}

/// Cofactor expansion of `det(xI - M)` along the first row.
pub fn charpoly_expansion(m: &IntMatrix) -> IntPolynomial {
    let n = m.order();
    let entries: Vec<Vec<IntPolynomial>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        IntPolynomial::from_i64(&[-m.get(i, j), 1])
                    } else {
                        IntPolynomial::from_i64(&[-m.get(i, j)])
                    }
                })
                .collect()
        })
        .collect();
    let cols: Vec<usize> = (0..n).collect();
    det(&entries, 0, &cols)
}

fn det(entries: &[Vec<IntPolynomial>], row: usize, cols: &[usize]) -> IntPolynomial {
    if cols.is_empty() {
        return IntPolynomial::one();
    }
    let mut total = IntPolynomial::zero();
    for (k, &c) in cols.iter().enumerate() {
        let e = &entries[row][c];
        if e.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = e * &det(entries, row + 1, &rest);
        total = if k % 2 == 0 { &total - &(-&term) } else { &total - &term };
    }
    total
}
