//! Immutable simple undirected graphs.
//!
//! Edges are stored as `(u, v)` with `u < v`, sorted lexicographically. That
//! order defines edge indices for the incidence matrix, the line graph and
//! the edge-vertex blocks of the transformed graphs.

mod io;

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Matrix;

pub use io::{parse_edge_list, parse_graph_text, to_edge_list};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

/// Wire form: `{"n": 3, "edges": [[0, 1], [1, 2]]}`.
#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;

    fn try_from(r: GraphRepr) -> Result<Self> {
        Graph::from_edge_list(r.n, r.edges.iter().map(|e| (e[0], e[1])))
    }
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr {
            n: g.n,
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

/// Named graph families with canonical labelings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    /// Star on `n` vertices; vertex 0 is the centre.
    Star(usize),
    /// Parts `{0..m}` and `{m..m+n}`.
    CompleteBipartite(usize, usize),
}

impl Graph {
    /// Builds a graph, normalising each pair to `(min, max)` and collapsing
    /// duplicates.
    pub fn from_edge_list<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::IndexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            set.insert((u.min(v), u.max(v)));
        }
        let edges: Vec<_> = set.into_iter().collect();
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Self {
            n,
            edges,
            adjacency,
        })
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); n],
        }
    }

    pub fn generate(kind: GraphKind) -> Result<Self> {
        let positive = |k: usize, what: &str| {
            if k == 0 {
                Err(Error::InvalidParam(format!(
                    "{what} needs at least one vertex"
                )))
            } else {
                Ok(())
            }
        };
        match kind {
            GraphKind::Complete(n) => {
                positive(n, "complete graph")?;
                Self::from_edge_list(n, (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))))
            }
            GraphKind::Cycle(n) => {
                if n < 3 {
                    return Err(Error::InvalidParam(format!(
                        "cycle needs at least 3 vertices, got {n}"
                    )));
                }
                Self::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n)))
            }
            GraphKind::Path(n) => {
                positive(n, "path")?;
                Self::from_edge_list(n, (1..n).map(|i| (i - 1, i)))
            }
            GraphKind::Star(n) => {
                positive(n, "star")?;
                Self::from_edge_list(n, (1..n).map(|i| (0, i)))
            }
            GraphKind::CompleteBipartite(m, n) => {
                positive(m, "complete bipartite part A")?;
                positive(n, "complete bipartite part B")?;
                Self::from_edge_list(m + n, (0..m).flat_map(|i| (m..m + n).map(move |j| (i, j))))
            }
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Index of edge `{u, v}` in canonical order.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    /// `Some(r)` when every vertex has degree `r`. The graph on zero vertices
    /// has no degrees and returns `None`.
    pub fn is_regular(&self) -> Option<usize> {
        let first = self.adjacency.first()?.len();
        self.adjacency
            .iter()
            .all(|l| l.len() == first)
            .then_some(first)
    }

    /// Breadth-first reachability from vertex 0. Zero- and one-vertex graphs
    /// count as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.n
    }

    /// Two-colouring of a bipartite graph, `None` when an odd cycle exists.
    /// Returned as `(colour-0 vertices, colour-1 vertices)`, each sorted.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut colour: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u]?;
                for &v in &self.adjacency[u] {
                    match colour[v] {
                        None => {
                            colour[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let (a, b): (Vec<usize>, Vec<usize>) = (0..self.n).partition(|&v| colour[v] == Some(false));
        Some((a, b))
    }

    /// Line graph: vertex `i` is edge `i` of `self`; two are adjacent when
    /// the edges share an endpoint.
    pub fn line_graph(&self) -> Graph {
        let mut pairs = Vec::new();
        for v in 0..self.n {
            let incident: Vec<usize> = self.adjacency[v]
                .iter()
                .map(|&w| self.edge_index(v, w).expect("adjacency and edges agree"))
                .collect();
            for (a, &e) in incident.iter().enumerate() {
                for &f in &incident[a + 1..] {
                    pairs.push((e, f));
                }
            }
        }
        Graph::from_edge_list(self.size(), pairs).expect("line graph edges are valid")
    }

    /// `n x m` vertex-edge incidence matrix over the canonical edge order.
    pub fn incidence_matrix(&self) -> Matrix<i64> {
        let mut f = Matrix::zeros(self.n, self.size());
        for (j, &(u, v)) in self.edges.iter().enumerate() {
            f.set(u, j, 1);
            f.set(v, j, 1);
        }
        f
    }

    /// 0/1 adjacency matrix in integer form.
    pub fn adjacency_counts(&self) -> Matrix<i64> {
        let mut a = Matrix::zeros(self.n, self.n);
        for &(u, v) in &self.edges {
            a.set(u, v, 1);
            a.set(v, u, 1);
        }
        a
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::LengthMismatch {
                left: perm.len(),
                right: self.n,
            });
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidParam(
                    "relabeling is not a permutation".into(),
                ));
            }
        }
        Graph::from_edge_list(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Disjoint union; `other`'s vertices are shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        Graph::from_edge_list(
            self.n + other.n,
            self.edges
                .iter()
                .copied()
                .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift))),
        )
        .expect("union of valid graphs is valid")
    }

    pub fn is_complete(&self) -> bool {
        self.n >= 1 && self.size() == self.n * (self.n - 1) / 2
    }

    /// Connected, 2-regular, at least three vertices.
    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && self.is_regular() == Some(2) && self.is_connected()
    }

    /// Connected tree with maximum degree at most two.
    pub fn is_path(&self) -> bool {
        self.n >= 1
            && self.size() == self.n - 1
            && self.adjacency.iter().all(|l| l.len() <= 2)
            && self.is_connected()
    }

    /// Star on at least two vertices: one centre adjacent to every leaf.
    pub fn is_star(&self) -> bool {
        self.n >= 2
            && self.size() == self.n - 1
            && self.adjacency.iter().any(|l| l.len() == self.n - 1)
    }

    /// Part sizes `(m, n)` with `m <= n` if this is a complete bipartite graph
    /// with both parts non-empty.
    pub fn complete_bipartite_parts(&self) -> Option<(usize, usize)> {
        if self.n < 2 || !self.is_connected() {
            return None;
        }
        let (a, b) = self.bipartition()?;
        (self.size() == a.len() * b.len()).then(|| (a.len().min(b.len()), a.len().max(b.len())))
    }
}
