use super::{compensated_sum, Matrix, Polynomial, SymMatrix};
use crate::error::{Error, Result};

pub const CHAR_POLY_MAX_ORDER: usize = 64;

/// Coefficients of `det(xI - M)` by the Faddeev-LeVerrier recurrence.
///
/// `N_1 = I`, `c_{n-k} = -tr(M N_k) / k`, `N_{k+1} = M N_k + c_{n-k} I`.
pub fn char_poly(m: &SymMatrix) -> Result<Polynomial> {
    let n = m.order();
    if n > CHAR_POLY_MAX_ORDER {
        return Err(Error::TooLarge {
            order: n,
            max: CHAR_POLY_MAX_ORDER,
        });
    }
    let a = m.as_matrix();
    if !a.is_finite() {
        return Err(Error::NotFinite);
    }

    let mut coeffs = vec![0.0; n + 1];
    coeffs[n] = 1.0;
    let mut acc: Matrix<f64> = Matrix::identity(n);
    for k in 1..=n {
        let prod = a.matmul(&acc)?;
        let trace = compensated_sum((0..n).map(|i| prod.get(i, i)));
        let c = -trace / k as f64;
        coeffs[n - k] = c;
        if k < n {
            acc = prod;
            for i in 0..n {
                acc.set(i, i, acc.get(i, i) + c);
            }
        }
    }
    Ok(Polynomial::new(coeffs))
}
