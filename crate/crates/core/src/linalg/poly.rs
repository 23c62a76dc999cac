use std::fmt;

use serde::{Deserialize, Serialize};

/// Real polynomial with coefficients indexed by power.
///
/// Trailing zero coefficients are trimmed, so `coeffs().len() - 1` is the
/// degree; the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(from = "Vec<f64>", into = "Vec<f64>")]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl From<Vec<f64>> for Polynomial {
    fn from(coeffs: Vec<f64>) -> Self {
        Self::new(coeffs)
    }
}

impl From<Polynomial> for Vec<f64> {
    fn from(p: Polynomial) -> Self {
        p.coeffs
    }
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: f64) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^power`.
    pub fn monomial(c: f64, power: usize) -> Self {
        let mut coeffs = vec![0.0; power + 1];
        coeffs[power] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Coefficient of `x^power`, zero past the degree.
    pub fn coeff(&self, power: usize) -> f64 {
        self.coeffs.get(power).copied().unwrap_or(0.0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: f64) -> Self {
        Self::new(self.coeffs.iter().map(|x| c * x).collect())
    }

    /// Multiplies by `x^power`.
    pub fn shift(&self, power: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0.0; power];
        coeffs.extend_from_slice(&self.coeffs);
        Self::new(coeffs)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (power, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0.0 {
                continue;
            }
            let sign = if c < 0.0 { "-" } else { "+" };
            if first {
                if c < 0.0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match power {
                0 => write!(f, "{a}")?,
                1 if a == 1.0 => write!(f, "x")?,
                1 => write!(f, "{a}x")?,
                _ if a == 1.0 => write!(f, "x^{power}")?,
                _ => write!(f, "{a}x^{power}")?,
            }
        }
        Ok(())
    }
}

/// Monic polynomial with the given roots.
pub fn poly_from_roots<I: IntoIterator<Item = f64>>(roots: I) -> Polynomial {
    let mut coeffs = vec![1.0];
    for r in roots {
        coeffs.push(0.0);
        for i in (1..coeffs.len()).rev() {
            coeffs[i] = coeffs[i - 1] - r * coeffs[i];
        }
        coeffs[0] *= -r;
    }
    Polynomial::new(coeffs)
}

/// Largest coefficient gap scaled by `max(1, max |p_i|, max |q_i|)`.
pub fn poly_deviation(p: &Polynomial, q: &Polynomial) -> f64 {
    let len = p.coeffs.len().max(q.coeffs.len());
    let scale = p
        .coeffs
        .iter()
        .chain(&q.coeffs)
        .fold(1.0_f64, |acc, c| acc.max(c.abs()));
    let gap = (0..len).fold(0.0_f64, |acc, i| acc.max((p.coeff(i) - q.coeff(i)).abs()));
    gap / scale
}

pub fn poly_close(p: &Polynomial, q: &Polynomial, tol: f64) -> bool {
    poly_deviation(p, q) <= tol
}
