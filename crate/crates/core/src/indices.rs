//! Degree-based topological indices.
//!
//! Every index is an edge sum of a function of the endpoint degrees, summed
//! in canonical edge order with compensated summation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::compensated_sum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IndexKind {
    /// First Zagreb index, `d_i + d_j`.
    #[serde(rename = "M1")]
    M1,
    /// Second Zagreb index, `d_i d_j`.
    #[serde(rename = "M2")]
    M2,
    /// `1 / sqrt(d_i d_j)`.
    #[serde(rename = "randic")]
    Randic,
    /// `2 / (d_i + d_j)`.
    #[serde(rename = "harmonic")]
    Harmonic,
    /// `R_{-1}`: `1 / (d_i d_j)`.
    #[serde(rename = "modified_second_zagreb")]
    ModifiedSecondZagreb,
    /// `sqrt((d_i + d_j - 2) / (d_i d_j))`.
    #[serde(rename = "abc")]
    Abc,
    /// `sqrt((d_i + d_j - 2) / (d_i + d_j))`.
    #[serde(rename = "abs")]
    Abs,
}

impl IndexKind {
    pub const ALL: [IndexKind; 7] = [
        IndexKind::M1,
        IndexKind::M2,
        IndexKind::Randic,
        IndexKind::Harmonic,
        IndexKind::ModifiedSecondZagreb,
        IndexKind::Abc,
        IndexKind::Abs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IndexKind::M1 => "M1",
            IndexKind::M2 => "M2",
            IndexKind::Randic => "randic",
            IndexKind::Harmonic => "harmonic",
            IndexKind::ModifiedSecondZagreb => "modified_second_zagreb",
            IndexKind::Abc => "abc",
            IndexKind::Abs => "abs",
        }
    }

    /// Contribution of a single edge with endpoint degrees `di`, `dj`.
    pub fn edge_term(self, di: usize, dj: usize) -> f64 {
        let (a, b) = (di as f64, dj as f64);
        match self {
            IndexKind::M1 => a + b,
            IndexKind::M2 => a * b,
            IndexKind::Randic => (1.0 / (a * b)).sqrt(),
            IndexKind::Harmonic => 2.0 / (a + b),
            IndexKind::ModifiedSecondZagreb => 1.0 / (a * b),
            IndexKind::Abc => ((a + b - 2.0) / (a * b)).sqrt(),
            IndexKind::Abs => ((a + b - 2.0) / (a + b)).sqrt(),
        }
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IndexKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IndexKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidParam(format!("unknown index `{s}`")))
    }
}

pub fn degree_index(g: &Graph, kind: IndexKind) -> f64 {
    compensated_sum(
        g.edges()
            .iter()
            .map(|&(u, v)| kind.edge_term(g.degree(u), g.degree(v))),
    )
}

/// All seven indices of one graph.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Indices {
    #[serde(rename = "M1")]
    pub m1: f64,
    #[serde(rename = "M2")]
    pub m2: f64,
    pub randic: f64,
    pub harmonic: f64,
    pub modified_second_zagreb: f64,
    pub abc: f64,
    pub abs: f64,
}

impl Indices {
    pub fn of(g: &Graph) -> Self {
        Self {
            m1: degree_index(g, IndexKind::M1),
            m2: degree_index(g, IndexKind::M2),
            randic: degree_index(g, IndexKind::Randic),
            harmonic: degree_index(g, IndexKind::Harmonic),
            modified_second_zagreb: degree_index(g, IndexKind::ModifiedSecondZagreb),
            abc: degree_index(g, IndexKind::Abc),
            abs: degree_index(g, IndexKind::Abs),
        }
    }

    pub fn get(&self, kind: IndexKind) -> f64 {
        match kind {
            IndexKind::M1 => self.m1,
            IndexKind::M2 => self.m2,
            IndexKind::Randic => self.randic,
            IndexKind::Harmonic => self.harmonic,
            IndexKind::ModifiedSecondZagreb => self.modified_second_zagreb,
            IndexKind::Abc => self.abc,
            IndexKind::Abs => self.abs,
        }
    }
}
