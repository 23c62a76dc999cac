use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Multiset of real eigenvalues, kept sorted ascending.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Spectrum(Vec<f64>);

impl Spectrum {
    pub fn new(mut values: Vec<f64>) -> Self {
        values.sort_by(f64::total_cmp);
        Self(values)
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = f64> + '_ {
        self.0.iter().copied()
    }

    /// Sum of absolute values.
    pub fn energy(&self) -> f64 {
        super::compensated_sum(self.iter().map(f64::abs))
    }

    pub fn sum(&self) -> f64 {
        super::compensated_sum(self.iter())
    }

    pub fn sum_of_squares(&self) -> f64 {
        super::compensated_sum(self.iter().map(|x| x * x))
    }

    /// Sum of `x_i * x_j` over unordered pairs.
    pub fn pair_product_sum(&self) -> f64 {
        let s = self.sum();
        0.5 * (s * s - self.sum_of_squares())
    }

    pub fn max(&self) -> Option<f64> {
        self.0.last().copied()
    }

    pub fn min(&self) -> Option<f64> {
        self.0.first().copied()
    }

    pub fn scaled(&self, c: f64) -> Self {
        Self::new(self.iter().map(|x| c * x).collect())
    }

    /// Appends `count` copies of zero.
    pub fn with_zeros(&self, count: usize) -> Self {
        let mut v = self.0.clone();
        v.extend(std::iter::repeat_n(0.0, count));
        Self::new(v)
    }

    /// Drops the `count` entries of smallest magnitude.
    pub fn without_smallest(&self, count: usize) -> Self {
        let mut v = self.0.clone();
        v.sort_by(|a, b| a.abs().total_cmp(&b.abs()));
        Self::new(v.split_off(count.min(v.len())))
    }

    /// Number of entries with `|x| <= tol`.
    pub fn count_near_zero(&self, tol: f64) -> usize {
        self.iter().filter(|x| x.abs() <= tol).count()
    }
}

impl FromIterator<f64> for Spectrum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        Self::new(iter.into_iter().collect())
    }
}

/// Largest pairwise gap between two sorted multisets of equal size.
pub fn multiset_deviation(a: &Spectrum, b: &Spectrum) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(a.iter()
        .zip(b.iter())
        .fold(0.0, |acc, (x, y)| acc.max((x - y).abs())))
}

pub fn multiset_close(a: &Spectrum, b: &Spectrum, tol: f64) -> Result<bool> {
    Ok(multiset_deviation(a, b)? <= tol)
}
