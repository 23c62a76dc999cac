//! Spectral toolkit for the atom-bond sum-connectivity (ABS) matrix of simple graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`] holds the immutable [`Graph`] type, generators and structural queries.
//! * [`transforms`] builds subdivision, semitotal, k-splitting and k-shadow graphs.
//! * [`linalg`] is the numeric layer: Jacobi eigensolver, Faddeev-LeVerrier
//!   characteristic polynomials, Kronecker products, LU determinants.
//! * [`indices`] computes degree-based topological indices.
//! * [`spectra`] builds ABS/adjacency matrices, energies, closed-form spectra and
//!   predicted spectra of transformed regular graphs.
//! * [`verifier`] runs identity checks against independent numeric oracles and
//!   emits machine-readable reports.

pub mod corpus;
pub mod error;
pub mod graph;
pub mod indices;
pub mod linalg;
pub mod numfmt;
pub mod spectra;
pub mod transforms;
pub mod verifier;

pub use error::{Error, Result};
pub use graph::{Graph, GraphKind};
pub use indices::{IndexKind, Indices};
pub use linalg::{Matrix, Polynomial, Spectrum, SymMatrix};
pub use spectra::{AbsMatrix, EnergyReport};
pub use transforms::TransformKind;
