//! Named graph collections and seeded random graphs used by the default
//! verification suite and the acceptance tests.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, GraphKind};

/// Seed for every random collection in this module.
pub const CORPUS_SEED: u64 = 0x0AB5_5EED;

pub fn named(kind: GraphKind) -> (String, Graph) {
    let label = match kind {
        GraphKind::Complete(n) => format!("complete:{n}"),
        GraphKind::Cycle(n) => format!("cycle:{n}"),
        GraphKind::Path(n) => format!("path:{n}"),
        GraphKind::Star(n) => format!("star:{n}"),
        GraphKind::CompleteBipartite(m, n) => format!("complete_bipartite:{m}:{n}"),
    };
    (
        label,
        Graph::generate(kind).expect("corpus parameters are valid"),
    )
}

/// Random connected graph: a random recursive spanning tree plus each
/// remaining pair with probability `p`, then a random relabeling.
pub fn random_connected<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut pairs = Vec::new();
    for v in 1..n {
        pairs.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                pairs.push((u, v));
            }
        }
    }
    let g = Graph::from_edge_list(n, pairs).expect("valid pairs");
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    g.relabel(&perm).expect("perm is a permutation")
}

/// Random connected `r`-regular graph on `n` vertices by the pairing model
/// with rejection. `None` if `n * r` is odd, `r >= n`, or no sample is
/// accepted within the attempt budget.
pub fn random_regular_connected<R: Rng>(n: usize, r: usize, rng: &mut R) -> Option<Graph> {
    if r >= n || (n * r) % 2 == 1 {
        return None;
    }
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, r)).collect();
    'attempt: for _ in 0..10_000 {
        points.shuffle(rng);
        let mut pairs = Vec::with_capacity(points.len() / 2);
        for chunk in points.chunks(2) {
            let (u, v) = (chunk[0], chunk[1]);
            if u == v || pairs.contains(&(u.min(v), u.max(v))) {
                continue 'attempt;
            }
            pairs.push((u.min(v), u.max(v)));
        }
        let g = Graph::from_edge_list(n, pairs).expect("valid pairs");
        if g.is_connected() {
            return Some(g);
        }
    }
    None
}

/// `count` random connected graphs with `2 <= n <= max_n`.
pub fn random_connected_family(count: usize, max_n: usize, seed: u64) -> Vec<(String, Graph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(2..=max_n);
            let p = rng.gen_range(0.1..0.7);
            (
                format!("random:n={n}#{i}"),
                random_connected(n, p, &mut rng),
            )
        })
        .collect()
}

/// Random connected regular graphs with `r` in {2, 3} and `n <= 8`, two per
/// admissible `(r, n)`.
pub fn random_regular_family(seed: u64) -> Vec<(String, Graph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for r in [2, 3] {
        for n in (r + 1)..=8 {
            for i in 0..2 {
                if let Some(g) = random_regular_connected(n, r, &mut rng) {
                    out.push((format!("random_regular:r={r}:n={n}#{i}"), g));
                }
            }
        }
    }
    out
}

/// Cycles 3..=8, complete graphs 3..=6, paths 2..=10, stars 3..=8, complete
/// bipartite graphs with `m <= n` and `m + n <= 8`, and 50 random connected
/// graphs on at most 8 vertices.
pub fn golden_corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    out.extend((3..=8).map(|n| named(GraphKind::Cycle(n))));
    out.extend((3..=6).map(|n| named(GraphKind::Complete(n))));
    out.extend((2..=10).map(|n| named(GraphKind::Path(n))));
    out.extend((3..=8).map(|n| named(GraphKind::Star(n))));
    for m in 1..=4 {
        for n in m..=(8 - m) {
            out.push(named(GraphKind::CompleteBipartite(m, n)));
        }
    }
    out.extend(random_connected_family(50, 8, CORPUS_SEED));
    out
}

/// C3..C6, K4, K5 and the random regular family.
pub fn regular_corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<_> = (3..=6).map(|n| named(GraphKind::Cycle(n))).collect();
    out.push(named(GraphKind::Complete(4)));
    out.push(named(GraphKind::Complete(5)));
    out.extend(random_regular_family(CORPUS_SEED));
    out
}

/// Graphs of the default verification suite: C3..C8, K3..K6, P5..P8,
/// K_{2,3} and S5.
pub fn default_suite_graphs() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    out.extend((3..=8).map(|n| named(GraphKind::Cycle(n))));
    out.extend((3..=6).map(|n| named(GraphKind::Complete(n))));
    out.extend((5..=8).map(|n| named(GraphKind::Path(n))));
    out.push(named(GraphKind::CompleteBipartite(2, 3)));
    out.push(named(GraphKind::Star(5)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_graphs_are_connected_and_deterministic() {
        let a = random_connected_family(20, 8, 7);
        let b = random_connected_family(20, 8, 7);
        assert_eq!(a, b);
        assert!(a.iter().all(|(_, g)| g.is_connected() && g.order() <= 8));
    }

    #[test]
    fn random_regular_graphs() {
        let fam = random_regular_family(CORPUS_SEED);
        assert!(fam.len() >= 10);
        for (label, g) in &fam {
            assert!(g.is_connected(), "{label}");
            let r = g.is_regular().unwrap();
            assert!(r == 2 || r == 3, "{label}");
        }
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(random_regular_connected(5, 3, &mut rng).is_none());
    }

    #[test]
    fn corpus_sizes() {
        assert_eq!(default_suite_graphs().len(), 16);
        let golden = golden_corpus();
        assert!(
            golden
                .iter()
                .filter(|(l, _)| l.starts_with("random:"))
                .count()
                == 50
        );
    }
}
