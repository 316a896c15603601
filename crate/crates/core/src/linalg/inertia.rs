//! Exact inertia by symmetric congruence (Sylvester's law of inertia).
//!
//! A nonzero diagonal pivot `p` contributes its sign and is eliminated by
//! the Schur complement `M[i][j] -= M[i][p] M[p][j] / M[p][p]`. When every
//! remaining diagonal entry is zero but some `M[i][j] = b` is not, the 2x2
//! block `[[0, b], [b, 0]]` has one positive and one negative eigenvalue
//! and is eliminated the same way with its inverse `[[0, 1/b], [1/b, 0]]`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

use super::matrix::{ExactSymMatrix, Inertia};

trait Field: Clone {
    fn is_zero(&self) -> bool;
    fn is_positive(&self) -> bool;
    fn add(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn div(&self, o: &Self) -> Option<Self>;
}

impl Field for Ratio<i128> {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(o)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        self.checked_div(o)
    }
}

impl Field for BigRational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        Some(self / o)
    }
}

/// `None` on arithmetic overflow.
fn congruence<F: Field>(mut m: Vec<Vec<F>>) -> Option<Inertia> {
    let mut inertia = Inertia::default();
    let mut active: Vec<usize> = (0..m.len()).collect();
    loop {
        if active.is_empty() {
            return Some(inertia);
        }
        if let Some(slot) = active.iter().position(|&i| !m[i][i].is_zero()) {
            let p = active.remove(slot);
            let pivot = m[p][p].clone();
            if pivot.is_positive() {
                inertia.n_plus += 1;
            } else {
                inertia.n_minus += 1;
            }
            for &i in &active {
                if m[i][p].is_zero() {
                    continue;
                }
                let f = m[i][p].div(&pivot)?;
                for &j in &active {
                    if m[p][j].is_zero() {
                        continue;
                    }
                    m[i][j] = m[i][j].sub(&f.mul(&m[p][j])?)?;
                }
            }
            continue;
        }
        let pair = active
            .iter()
            .enumerate()
            .find_map(|(s, &i)| active[s + 1..].iter().find(|&&j| !m[i][j].is_zero()).map(|&j| (i, j)));
        let Some((i, j)) = pair else {
            inertia.n_zero += active.len();
            return Some(inertia);
        };
        inertia.n_plus += 1;
        inertia.n_minus += 1;
        active.retain(|&k| k != i && k != j);
        let b = m[i][j].clone();
        for &k in &active {
            for &l in &active {
                let t1 = m[k][i].mul(&m[j][l])?;
                let t2 = m[k][j].mul(&m[i][l])?;
                let t = t1.add(&t2)?;
                if t.is_zero() {
                    continue;
                }
                m[k][l] = m[k][l].sub(&t.div(&b)?)?;
            }
        }
    }
}

/// Exact inertia of a symmetric rational matrix.
///
/// The matrix is first scaled by the positive common denominator of its
/// entries (which preserves inertia); if the result fits, elimination runs
/// in overflow-checked `i128` rationals and otherwise in big rationals.
pub fn inertia(m: &ExactSymMatrix) -> Inertia {
    let n = m.order();
    let lcm = m
        .entries()
        .iter()
        .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
    let scaled: Vec<BigInt> = m.entries().iter().map(|e| (e * &lcm).to_integer()).collect();
    let small: Option<Vec<i128>> = scaled.iter().map(ToPrimitive::to_i128).collect();
    if let Some(small) = small {
        let rows = small
            .chunks(n.max(1))
            .take(n)
            .map(|r| r.iter().map(|&v| Ratio::from_integer(v)).collect())
            .collect();
        if let Some(found) = congruence::<Ratio<i128>>(rows) {
            return found;
        }
        log::debug!("inertia: i128 overflow at order {n}, retrying with big rationals");
    }
    let rows = scaled
        .chunks(n.max(1))
        .take(n)
        .map(|r| r.iter().map(|v| BigRational::from_integer(v.clone())).collect())
        .collect();
    congruence::<BigRational>(rows).expect("big rationals do not overflow")
}

/// Exact rank.
pub fn rank(m: &ExactSymMatrix) -> usize {
    inertia(m).rank()
}

#[cfg(test)]
pub(crate) fn inertia_big_only(m: &ExactSymMatrix) -> Inertia {
    let n = m.order();
    let rows = (0..n).map(|i| (0..n).map(|j| m.get(i, j).clone()).collect()).collect();
    congruence::<BigRational>(rows).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::jacobi::eig_sym_float;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn int(rows: &[Vec<i64>]) -> ExactSymMatrix {
        ExactSymMatrix::from_i64_rows(rows).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn inert(p: usize, z: usize, m: usize) -> Inertia {
        Inertia {
            n_plus: p,
            n_zero: z,
            n_minus: m,
        }
    }

    #[test]
    fn small_examples() {
        let m = int(&[vec![2, 1, 0], vec![1, 2, 1], vec![0, 1, 2]]);
        assert_eq!(inertia(&m), inert(3, 0, 0));
        assert_eq!(inertia(&m.shifted(&q(2, 1))), inert(1, 1, 1));
        assert_eq!(inertia(&int(&[vec![0, 1], vec![1, 0]])), inert(1, 0, 1));
        assert_eq!(inertia(&int(&[vec![0, 0], vec![0, 0]])), inert(0, 2, 0));
        assert_eq!(inertia(&int(&[])), inert(0, 0, 0));
        // Zero diagonal throughout the first stage, then a 1x1 remainder.
        let m = int(&[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
        assert_eq!(inertia(&m), inert(1, 0, 2));
    }

    #[test]
    fn rational_shift() {
        // Eigenvalues 1 and 3; shifting by 3/2 and by 3.
        let m = int(&[vec![2, 1], vec![1, 2]]);
        assert_eq!(inertia(&m.shifted(&q(3, 2))), inert(1, 0, 1));
        assert_eq!(inertia(&m.shifted(&q(3, 1))), inert(0, 1, 1));
    }

    #[test]
    fn big_entries_fall_back() {
        let big = 1i64 << 62;
        let m = int(&[vec![big, big - 1, 3], vec![big - 1, big, 5], vec![3, 5, -big]]);
        assert_eq!(inertia(&m), inertia_big_only(&m));
    }

    fn random_sym(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> ExactSymMatrix {
        let mut rows = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in i..n {
                let v = rng.random_range(lo..=hi);
                rows[i][j] = v;
                rows[j][i] = v;
            }
        }
        int(&rows)
    }

    fn float_inertia(m: &ExactSymMatrix) -> Option<Inertia> {
        let eig = eig_sym_float(m).ok()?;
        let tol = 1e-7;
        if eig.iter().any(|x| x.abs() > tol && x.abs() < 1e-3) {
            return None;
        }
        let mut out = Inertia::default();
        for x in eig {
            if x > tol {
                out.n_plus += 1;
            } else if x < -tol {
                out.n_minus += 1;
            } else {
                out.n_zero += 1;
            }
        }
        Some(out)
    }

    #[test]
    fn agrees_with_jacobi_and_charpoly() {
        use crate::linalg::charpoly::charpoly_rational;
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let zero = BigRational::zero();
        for round in 0..500 {
            let n = rng.random_range(1..=7);
            // Narrow ranges give plenty of singular matrices.
            let m = if round % 2 == 0 {
                random_sym(&mut rng, n, -1, 1)
            } else {
                random_sym(&mut rng, n, -9, 9)
            };
            let exact = inertia(&m);
            assert_eq!(exact, inertia_big_only(&m));
            assert_eq!(exact.order(), n);
            let p = charpoly_rational(&m);
            // Eigenvalues are roots of the characteristic polynomial.
            let bound = BigRational::from_integer(BigInt::from(9 * 8));
            let zeros = p.count_roots_in(&zero, &zero).unwrap();
            let nonneg = p.count_roots_in(&zero, &bound).unwrap();
            assert_eq!(exact.n_zero, zeros, "{m:?}");
            assert_eq!(exact.n_plus, nonneg - zeros, "{m:?}");
            if let Some(f) = float_inertia(&m) {
                assert_eq!(f, exact, "{m:?}");
            }
        }
    }
}
