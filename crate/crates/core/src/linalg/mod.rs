//! Dense linear algebra used as the numeric oracle layer.

mod charpoly;
mod eigen;
mod lu;
mod matrix;
mod poly;
mod spectrum;

pub use charpoly::{char_poly, CHAR_POLY_MAX_ORDER};
pub use eigen::{eigenvalues_symmetric, JACOBI_MAX_SWEEPS, JACOBI_TOLERANCE};
pub use lu::{determinant, Lu};
pub use matrix::{kron, Matrix, SymMatrix};
pub use poly::{poly_close, poly_deviation, poly_from_roots, Polynomial};
pub use spectrum::{multiset_close, multiset_deviation, Spectrum};

/// Neumaier-compensated sum.
pub fn compensated_sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    let mut sum = 0.0_f64;
    let mut carry = 0.0_f64;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            carry += (sum - t) + v;
        } else {
            carry += (v - t) + sum;
        }
        sum = t;
    }
    sum + carry
}
