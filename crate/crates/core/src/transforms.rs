//! Subdivision, semitotal, k-splitting and k-shadow graphs.
//!
//! Layouts are fixed so that block structure is literal:
//!
//! * edge-vertex constructions put the original vertices first (`0..n`) and
//!   then one vertex per edge in canonical edge order (`n..n+m`);
//! * `splitting(G, k)` keeps the originals in block 0 and places copy `c`
//!   (`1..=k`) at `c*n..c*n+n`;
//! * `shadow(G, k)` places copy `c` (`0..k`) at `c*n..c*n+n`.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TransformKind {
    Subdivision,
    SemitotalPoint,
    SemitotalLine,
    Splitting(usize),
    Shadow(usize),
}

impl TransformKind {
    pub fn apply(self, g: &Graph) -> Result<Graph> {
        match self {
            Self::Subdivision => Ok(subdivision(g)),
            Self::SemitotalPoint => Ok(semitotal_point(g)),
            Self::SemitotalLine => Ok(semitotal_line(g)),
            Self::Splitting(k) => splitting(g, k),
            Self::Shadow(k) => shadow(g, k),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Subdivision => "subdivision",
            Self::SemitotalPoint => "semitotal_point",
            Self::SemitotalLine => "semitotal_line",
            Self::Splitting(_) => "splitting",
            Self::Shadow(_) => "shadow",
        }
    }

    /// Parses a transform name; `k` is required for splitting and shadow.
    pub fn from_name(name: &str, k: Option<usize>) -> Result<Self> {
        let need_k = || k.ok_or_else(|| Error::InvalidParam(format!("transform `{name}` needs k")));
        match name {
            "subdivision" => Ok(Self::Subdivision),
            "semitotal_point" => Ok(Self::SemitotalPoint),
            "semitotal_line" => Ok(Self::SemitotalLine),
            "splitting" => Ok(Self::Splitting(need_k()?)),
            "shadow" => Ok(Self::Shadow(need_k()?)),
            other => Err(Error::InvalidParam(format!("unknown transform `{other}`"))),
        }
    }
}

impl fmt::Display for TransformKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Splitting(k) | Self::Shadow(k) => write!(f, "{}(k={k})", self.name()),
            _ => f.write_str(self.name()),
        }
    }
}

fn incidence_pairs(g: &Graph) -> impl Iterator<Item = (usize, usize)> + '_ {
    let n = g.order();
    g.edges()
        .iter()
        .enumerate()
        .flat_map(move |(j, &(u, v))| [(u, n + j), (v, n + j)])
}

/// `S(G)`: a new degree-2 vertex on every edge.
pub fn subdivision(g: &Graph) -> Graph {
    Graph::from_edge_list(g.order() + g.size(), incidence_pairs(g)).expect("valid layout")
}

/// `T1(G)`: `G` plus edge-vertices joined to their endpoints.
pub fn semitotal_point(g: &Graph) -> Graph {
    let pairs = g.edges().iter().copied().chain(incidence_pairs(g));
    Graph::from_edge_list(g.order() + g.size(), pairs).expect("valid layout")
}

/// `T2(G)`: line graph on the edge-vertices plus edge-vertices joined to
/// their endpoints; the original vertices stay pairwise non-adjacent.
pub fn semitotal_line(g: &Graph) -> Graph {
    let n = g.order();
    let line = g.line_graph();
    let pairs = line
        .edges()
        .iter()
        .map(|&(e, f)| (n + e, n + f))
        .chain(incidence_pairs(g))
        .collect::<Vec<_>>();
    Graph::from_edge_list(n + g.size(), pairs).expect("valid layout")
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        Err(Error::InvalidParam("k must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// `Spl_k(G)`: `k` copies of each vertex, each joined to the original's
/// neighbours.
pub fn splitting(g: &Graph, k: usize) -> Result<Graph> {
    check_k(k)?;
    let n = g.order();
    let mut pairs = g.edges().to_vec();
    for c in 1..=k {
        for &(x, y) in g.edges() {
            pairs.push((c * n + x, y));
            pairs.push((c * n + y, x));
        }
    }
    Graph::from_edge_list((k + 1) * n, pairs)
}

/// `D_k(G)`: `k` copies of `G` with every edge replicated between every
/// pair of copies (including within a copy).
pub fn shadow(g: &Graph, k: usize) -> Result<Graph> {
    check_k(k)?;
    let n = g.order();
    let mut pairs = Vec::with_capacity(k * k * g.size());
    for &(x, y) in g.edges() {
        for c in 0..k {
            for d in 0..k {
                pairs.push((c * n + x, d * n + y));
            }
        }
    }
    Graph::from_edge_list(k * n, pairs)
}
