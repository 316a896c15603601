//! Exact linear algebra over the rationals, plus a floating-point
//! eigenvalue routine for display and cross-checks.

mod charpoly;
mod inertia;
mod jacobi;
mod matrix;
mod poly;

pub use charpoly::{charpoly, charpoly_expansion, charpoly_rational};
pub use inertia::{inertia, rank};
pub use jacobi::{eig_sym_float, eig_sym_rows};
pub use matrix::{ExactSymMatrix, Inertia, IntMatrix};
pub use poly::{count_roots_in, distinct_real_roots, IntPolynomial};
