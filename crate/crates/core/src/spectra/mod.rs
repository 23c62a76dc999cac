//! ABS and adjacency matrices, their spectra and energies, plus closed-form
//! and predicted spectra for graph families and transformed regular graphs.

mod closed_form;
mod path;
mod predicted;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{eigenvalues_symmetric, Spectrum, SymMatrix};

pub use closed_form::{closed_form_abs_spectrum, regular_scale, ClosedForm};
pub use path::{path_abs_charpoly, path_omega};
pub use predicted::{
    as_printed_transform_charpoly_at, corrected_transform_charpoly_at, predicted_energy,
    predicted_transform_charpoly, predicted_transform_spectrum, shadow_kron_form,
    splitting_block_matrix, splitting_kron_form, splitting_radicand_as_printed,
    splitting_radicand_corrected, EnergyKind, EnergyPrediction, LiftedCharPoly, SpectrumTransform,
};

/// Entry of the ABS matrix on an edge whose endpoints have degree sum `s`.
pub fn abs_weight(degree_sum: usize) -> f64 {
    let s = degree_sum as f64;
    ((s - 2.0) / s).sqrt()
}

/// The ABS matrix of a graph.
///
/// Entry `(i, j)` is `sqrt((d_i + d_j - 2) / (d_i + d_j))` when `ij` is an
/// edge and zero otherwise, so every entry lies in `[0, 1)` and the
/// diagonal is zero.
#[derive(Debug, Clone, PartialEq)]
pub struct AbsMatrix(SymMatrix);

impl AbsMatrix {
    pub fn of(g: &Graph) -> Self {
        let mut m = crate::linalg::Matrix::zeros(g.order(), g.order());
        for &(u, v) in g.edges() {
            let w = abs_weight(g.degree(u) + g.degree(v));
            m.set(u, v, w);
            m.set(v, u, w);
        }
        Self(SymMatrix::new(m).expect("ABS entries are finite and symmetric"))
    }

    pub fn as_sym(&self) -> &SymMatrix {
        &self.0
    }

    pub fn into_sym(self) -> SymMatrix {
        self.0
    }

    /// Sum of the strictly upper-triangular entries.
    pub fn upper_sum(&self) -> f64 {
        let n = self.0.order();
        crate::linalg::compensated_sum(
            (0..n)
                .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
                .map(|(i, j)| self.0.get(i, j)),
        )
    }
}

pub fn abs_matrix(g: &Graph) -> AbsMatrix {
    AbsMatrix::of(g)
}

pub fn adjacency_matrix(g: &Graph) -> SymMatrix {
    SymMatrix::new((&g.adjacency_counts()).into()).expect("adjacency is symmetric")
}

/// Spectrum together with its energy (sum of absolute eigenvalues).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnergyReport {
    pub spectrum: Spectrum,
    pub energy: f64,
}

impl EnergyReport {
    pub fn from_spectrum(spectrum: Spectrum) -> Self {
        let energy = spectrum.energy();
        Self { spectrum, energy }
    }
}

pub fn abs_spectrum(g: &Graph) -> Result<Spectrum> {
    eigenvalues_symmetric(abs_matrix(g).as_sym())
}

pub fn adjacency_spectrum(g: &Graph) -> Result<Spectrum> {
    eigenvalues_symmetric(&adjacency_matrix(g))
}

pub fn abs_energy(g: &Graph) -> Result<EnergyReport> {
    abs_spectrum(g).map(EnergyReport::from_spectrum)
}

pub fn adjacency_energy(g: &Graph) -> Result<EnergyReport> {
    adjacency_spectrum(g).map(EnergyReport::from_spectrum)
}

/// Degree of a connected regular graph with at least one edge.
pub fn regular_degree(g: &Graph) -> Result<usize> {
    let r = g.is_regular().ok_or(Error::NotRegular)?;
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if r == 0 {
        return Err(Error::InvalidParam("regular graph has no edges".into()));
    }
    Ok(r)
}
