use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// Dense square matrix of machine integers, not necessarily symmetric.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    order: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(order: usize) -> Self {
        IntMatrix {
            order,
            entries: vec![0; order * order],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return invalid("matrix rows must all have length equal to the row count");
        }
        Ok(IntMatrix {
            order,
            entries: rows.concat(),
        })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.order + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.entries[i * self.order + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.order.max(1)).map(<[i64]>::to_vec).take(self.order).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> i64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

/// Symmetric matrix with exact rational entries.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactSymMatrix {
    order: usize,
    entries: Vec<BigRational>,
}

impl ExactSymMatrix {
    pub fn from_int(m: &IntMatrix) -> Result<Self> {
        if !m.is_symmetric() {
            return invalid("matrix is not symmetric");
        }
        Ok(ExactSymMatrix {
            order: m.order,
            entries: m.entries.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect(),
        })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_int(&IntMatrix::from_rows(rows)?)
    }

    pub fn from_rationals(order: usize, entries: Vec<BigRational>) -> Result<Self> {
        if entries.len() != order * order {
            return invalid("entry count does not match order");
        }
        let m = ExactSymMatrix { order, entries };
        for i in 0..order {
            for j in 0..i {
                if m.get(i, j) != m.get(j, i) {
                    return invalid(format!("asymmetric entries at ({i}, {j})"));
                }
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.order + j]
    }

    /// `M - a I`.
    pub fn shifted(&self, a: &BigRational) -> Self {
        let mut m = self.clone();
        for i in 0..self.order {
            m.entries[i * self.order + i] -= a;
        }
        m
    }

    pub fn add(&self, other: &ExactSymMatrix) -> Result<Self> {
        if self.order != other.order {
            return invalid("order mismatch");
        }
        Ok(ExactSymMatrix {
            order: self.order,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    /// Principal submatrix on `indices` (in the given order).
    pub fn principal_submatrix(&self, indices: &[usize]) -> Result<Self> {
        if indices.iter().any(|&i| i >= self.order) {
            return invalid("principal submatrix index out of range");
        }
        let entries = indices
            .iter()
            .flat_map(|&i| indices.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect();
        Ok(ExactSymMatrix {
            order: indices.len(),
            entries,
        })
    }

    /// Integer matrix view when every entry is an integer that fits `i64`.
    pub fn to_int(&self) -> Option<IntMatrix> {
        let entries = self
            .entries
            .iter()
            .map(|e| if e.is_integer() { e.to_integer().to_i64() } else { None })
            .collect::<Option<Vec<_>>>()?;
        Some(IntMatrix {
            order: self.order,
            entries,
        })
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.get(i, j).to_f64().unwrap_or(f64::NAN)).collect())
            .collect()
    }

    pub(crate) fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }
}

impl fmt::Debug for ExactSymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.order).map(|i| {
                (0..self.order).map(|j| self.get(i, j).to_string()).collect::<Vec<_>>()
            }))
            .finish()
    }
}

/// Numbers of positive, zero and negative eigenvalues of a symmetric matrix.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Inertia {
    pub n_plus: usize,
    pub n_zero: usize,
    pub n_minus: usize,
}

impl Inertia {
    pub fn order(&self) -> usize {
        self.n_plus + self.n_zero + self.n_minus
    }

    pub fn rank(&self) -> usize {
        self.n_plus + self.n_minus
    }
}

impl fmt::Display for Inertia {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.n_plus, self.n_zero, self.n_minus)
    }
}
