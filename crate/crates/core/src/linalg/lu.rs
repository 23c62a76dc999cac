use super::Matrix;
use crate::error::{Error, Result};

/// LU factorisation with partial pivoting, `P A = L U`.
#[derive(Debug, Clone)]
pub struct Lu {
    lu: Matrix<f64>,
    perm: Vec<usize>,
    sign: f64,
    singular: bool,
}

impl Lu {
    pub fn new(a: &Matrix<f64>) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "LU needs a square matrix, got {}x{}",
                a.rows(),
                a.cols()
            )));
        }
        let n = a.rows();
        let mut lu = a.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut sign = 1.0;
        let mut singular = false;

        for k in 0..n {
            let pivot = (k..n)
                .max_by(|&i, &j| lu.get(i, k).abs().total_cmp(&lu.get(j, k).abs()))
                .unwrap_or(k);
            if lu.get(pivot, k) == 0.0 {
                singular = true;
                continue;
            }
            if pivot != k {
                for j in 0..n {
                    let tmp = lu.get(k, j);
                    lu.set(k, j, lu.get(pivot, j));
                    lu.set(pivot, j, tmp);
                }
                perm.swap(k, pivot);
                sign = -sign;
            }
            let d = lu.get(k, k);
            for i in (k + 1)..n {
                let f = lu.get(i, k) / d;
                lu.set(i, k, f);
                for j in (k + 1)..n {
                    lu.set(i, j, lu.get(i, j) - f * lu.get(k, j));
                }
            }
        }
        Ok(Self {
            lu,
            perm,
            sign,
            singular,
        })
    }

    pub fn det(&self) -> f64 {
        if self.singular {
            return 0.0;
        }
        (0..self.lu.rows()).fold(self.sign, |acc, i| acc * self.lu.get(i, i))
    }

    /// Solves `A X = B` column by column.
    pub fn solve(&self, b: &Matrix<f64>) -> Result<Matrix<f64>> {
        let n = self.lu.rows();
        if b.rows() != n {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side has {} rows, expected {n}",
                b.rows()
            )));
        }
        if self.singular {
            return Err(Error::Singular);
        }
        let mut x = Matrix::zeros(n, b.cols());
        for col in 0..b.cols() {
            let mut y: Vec<f64> = self.perm.iter().map(|&p| b.get(p, col)).collect();
            for i in 0..n {
                for j in 0..i {
                    y[i] -= self.lu.get(i, j) * y[j];
                }
            }
            for i in (0..n).rev() {
                for j in (i + 1)..n {
                    y[i] -= self.lu.get(i, j) * y[j];
                }
                y[i] /= self.lu.get(i, i);
            }
            for (i, v) in y.into_iter().enumerate() {
                x.set(i, col, v);
            }
        }
        Ok(x)
    }
}

pub fn determinant(a: &Matrix<f64>) -> Result<f64> {
    Ok(Lu::new(a)?.det())
}
