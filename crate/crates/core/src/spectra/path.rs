use crate::error::{Error, Result};
use crate::linalg::Polynomial;

/// Determinant of the `m x m` tridiagonal matrix with `x` on the diagonal
/// and `-sqrt(1/2)` beside it: `W_m = x W_{m-1} - W_{m-2} / 2`, `W_0 = 1`,
/// `W_1 = x`.
pub fn path_omega(m: usize) -> Polynomial {
    let x = Polynomial::monomial(1.0, 1);
    let mut prev = Polynomial::constant(1.0);
    if m == 0 {
        return prev;
    }
    let mut cur = x.clone();
    for _ in 2..=m {
        let next = x.mul(&cur).sub(&prev.scale(0.5));
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Characteristic polynomial of the ABS matrix of the path on `n >= 5`
/// vertices: `x^2 W_{n-2} - (2/3) x W_{n-3} + (1/9) W_{n-4}`.
pub fn path_abs_charpoly(n: usize) -> Result<Polynomial> {
    if n < 5 {
        return Err(Error::OutOfRange(format!(
            "path recurrence needs n >= 5, got {n}"
        )));
    }
    let x = Polynomial::monomial(1.0, 1);
    let head = path_omega(n - 2).shift(2);
    let mid = x.mul(&path_omega(n - 3)).scale(2.0 / 3.0);
    let tail = path_omega(n - 4).scale(1.0 / 9.0);
    Ok(head.sub(&mid).add(&tail))
}
