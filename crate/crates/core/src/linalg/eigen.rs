use super::{Matrix, Spectrum, SymMatrix};
use crate::error::{Error, Result};

/// Relative stopping threshold on the off-diagonal Frobenius norm.
pub const JACOBI_TOLERANCE: f64 = 1e-12;
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// All eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
///
/// Sweeps run over every `(p, q)` pair with `p < q` in row order until the
/// off-diagonal Frobenius norm drops to `JACOBI_TOLERANCE * max(1, ||M||_F)`.
pub fn eigenvalues_symmetric(m: &SymMatrix) -> Result<Spectrum> {
    let mut a: Matrix<f64> = m.as_matrix().clone();
    if !a.is_finite() {
        return Err(Error::NotFinite);
    }
    let n = a.rows();
    let threshold = JACOBI_TOLERANCE * a.frobenius_norm().max(1.0);

    let mut sweeps = 0;
    while off_diagonal_norm(&a) > threshold {
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, p, q);
            }
        }
    }
    Ok((0..n).map(|i| a.get(i, i)).collect())
}

fn off_diagonal_norm(a: &Matrix<f64>) -> f64 {
    let n = a.rows();
    let mut s = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            let x = a.get(i, j);
            s += 2.0 * x * x;
        }
    }
    s.sqrt()
}

/// Applies the rotation that annihilates `a[p][q]`.
fn rotate(a: &mut Matrix<f64>, p: usize, q: usize) {
    let apq = a.get(p, q);
    if apq == 0.0 {
        return;
    }
    let app = a.get(p, p);
    let aqq = a.get(q, q);
    let theta = (aqq - app) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let t = if theta == 0.0 { 1.0 } else { t };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    let n = a.rows();
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a.get(k, p);
        let akq = a.get(k, q);
        let new_kp = c * akp - s * akq;
        let new_kq = s * akp + c * akq;
        a.set(k, p, new_kp);
        a.set(p, k, new_kp);
        a.set(k, q, new_kq);
        a.set(q, k, new_kq);
    }
    a.set(p, p, app - t * apq);
    a.set(q, q, aqq + t * apq);
    a.set(p, q, 0.0);
    a.set(q, p, 0.0);
}
