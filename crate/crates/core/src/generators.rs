//! Instance families: small named graphs and seeded random generators.

use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GenError {
    #[error("no {r}-regular graph on {n} vertices (need n > r and n*r even)")]
    NoRegularGraph { n: usize, r: usize },
    #[error("pairing model found no simple graph after {0} attempts")]
    PairingExhausted(usize),
    #[error("expected a cubic graph")]
    NotCubic,
    #[error("invalid parameter: {0}")]
    Parameter(String),
}

/// Fixed graphs used throughout tests and examples.
pub mod named {
    use super::*;

    pub fn empty(n: usize) -> Graph {
        Graph::unweighted(n, []).unwrap()
    }

    pub fn path(n: usize) -> Graph {
        Graph::unweighted(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        Graph::unweighted(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        Graph::unweighted(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    /// `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Graph {
        Graph::unweighted(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::unweighted(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j)))).unwrap()
    }

    /// Triangle 0-1-2 with pendant 3 on vertex 0.
    pub fn paw() -> Graph {
        Graph::unweighted(4, [(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap()
    }

    pub fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::unweighted(10, outer.chain(spokes).chain(inner)).unwrap()
    }

    /// Triangular prism `K3 x K2`.
    pub fn prism() -> Graph {
        Graph::unweighted(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).unwrap()
    }

    /// `k` diamonds (K4 minus an edge) joined in a ring through their
    /// degree-2 tips. Cubic and claw-free for `k >= 2`.
    pub fn diamond_ring(k: usize) -> Graph {
        assert!(k >= 2);
        let mut edges = Vec::new();
        for i in 0..k {
            let b = 4 * i;
            // tips b and b+3, middle b+1, b+2
            edges.extend([(b, b + 1), (b, b + 2), (b + 1, b + 2), (b + 1, b + 3), (b + 2, b + 3)]);
            edges.push((b + 3, (b + 4) % (4 * k)));
        }
        Graph::unweighted(4 * k, edges).unwrap()
    }

    /// The 12-vertex shield gadget.
    pub fn shield() -> Graph {
        crate::gadgets::shield()
    }
}

/// Random `r`-regular simple graph via the pairing (configuration) model,
/// rejecting pairings with loops or parallel edges.
pub fn random_regular<R: Rng + ?Sized>(n: usize, r: usize, rng: &mut R) -> Result<Graph, GenError> {
    if n <= r || (n * r) % 2 == 1 {
        return Err(GenError::NoRegularGraph { n, r });
    }
    const ATTEMPTS: usize = 100_000;
    let mut points: Vec<Vertex> = (0..n).flat_map(|v| std::iter::repeat_n(v, r)).collect();
    let mut seen = std::collections::HashSet::with_capacity(n * r / 2);
    'attempt: for _ in 0..ATTEMPTS {
        points.shuffle(rng);
        seen.clear();
        for pair in points.chunks_exact(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v || !seen.insert((u, v)) {
                continue 'attempt;
            }
        }
        return Ok(Graph::unweighted(n, seen.iter().copied()).unwrap());
    }
    Err(GenError::PairingExhausted(ATTEMPTS))
}

pub fn random_cubic<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Graph, GenError> {
    random_regular(n, 3, rng)
}

/// Replaces every vertex of a cubic graph by a triangle. Vertex `v` becomes
/// `3v, 3v+1, 3v+2`; its `i`-th neighbor (in sorted order) attaches to `3v+i`.
pub fn inflate(g: &Graph) -> Result<Graph, GenError> {
    if !g.is_regular(3) {
        return Err(GenError::NotCubic);
    }
    let slot = |v: Vertex, u: Vertex| 3 * v + g.neighbors(v).position(|x| x == u).unwrap();
    let mut edges = Vec::with_capacity(3 * g.n() + g.m());
    for v in 0..g.n() {
        edges.extend([(3 * v, 3 * v + 1), (3 * v, 3 * v + 2), (3 * v + 1, 3 * v + 2)]);
    }
    for e in g.edges() {
        edges.push((slot(e.u, e.v), slot(e.v, e.u)));
    }
    Ok(Graph::unweighted(3 * g.n(), edges).unwrap())
}

/// Random split graph: a clique on `0..clique`, the rest independent, each
/// clique/independent pair joined with probability `p`. Independent vertices
/// always get at least one clique neighbor so the graph is connected when
/// `clique > 0`.
pub fn random_split<R: Rng + ?Sized>(n: usize, clique: usize, p: f64, rng: &mut R) -> Result<Graph, GenError> {
    if clique > n || (clique == 0 && n > 1) {
        return Err(GenError::Parameter(format!("clique size {clique} for n = {n}")));
    }
    let mut edges: Vec<(Vertex, Vertex)> = (0..clique).flat_map(|i| (i + 1..clique).map(move |j| (i, j))).collect();
    for v in clique..n {
        let before = edges.len();
        for c in 0..clique {
            if rng.gen_bool(p) {
                edges.push((c, v));
            }
        }
        if edges.len() == before {
            edges.push((rng.gen_range(0..clique), v));
        }
    }
    Ok(Graph::unweighted(n, edges).unwrap())
}

/// Split graph with `m = O(n)`: a clique of about `sqrt(2n)` vertices and
/// every other vertex attached to `attach` random clique vertices.
pub fn sparse_split<R: Rng + ?Sized>(n: usize, attach: usize, rng: &mut R) -> Result<Graph, GenError> {
    let clique = ((2 * n) as f64).sqrt().round().max(1.0) as usize;
    if clique > n || attach == 0 {
        return Err(GenError::Parameter(format!("sparse split with n = {n}")));
    }
    let mut edges: Vec<(Vertex, Vertex)> = (0..clique).flat_map(|i| (i + 1..clique).map(move |j| (i, j))).collect();
    let pool: Vec<Vertex> = (0..clique).collect();
    for v in clique..n {
        for &c in pool.choose_multiple(rng, attach.min(clique)) {
            edges.push((c, v));
        }
    }
    Ok(Graph::unweighted(n, edges).unwrap())
}

/// Erdos-Renyi `G(n, p)`.
pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::unweighted(n, edges).unwrap()
}

/// Random connected graph: a uniform random recursive tree plus each
/// remaining pair with probability `p`.
pub fn random_connected<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = std::collections::BTreeSet::new();
    for v in 1..n {
        edges.insert((rng.gen_range(0..v), v));
    }
    for i in 0..n {
        for j in i + 1..n {
            if !edges.contains(&(i, j)) && rng.gen_bool(p) {
                edges.insert((i, j));
            }
        }
    }
    Graph::unweighted(n, edges).unwrap()
}

/// Complement of a random bipartite graph: two cliques with random edges
/// between them. Always P5-free.
pub fn co_bipartite<R: Rng + ?Sized>(a: usize, b: usize, p: f64, rng: &mut R) -> Graph {
    let n = a + b;
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let same_side = (i < a) == (j < a);
            if same_side || !rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::unweighted(n, edges).unwrap()
}

/// Random cograph (P4-free) on `n` vertices, built by recursive disjoint
/// unions and joins; joins that would push a degree above `max_degree` are
/// turned into unions.
pub fn random_cograph<R: Rng + ?Sized>(n: usize, max_degree: usize, rng: &mut R) -> Graph {
    fn build<R: Rng + ?Sized>(
        vs: &[Vertex],
        max_degree: usize,
        rng: &mut R,
        out: &mut Vec<(Vertex, Vertex)>,
        deg: &mut [usize],
    ) {
        if vs.len() <= 1 {
            return;
        }
        let cut = rng.gen_range(1..vs.len());
        let (left, right) = vs.split_at(cut);
        build(left, max_degree, rng, out, deg);
        build(right, max_degree, rng, out, deg);
        let fits = left.iter().all(|&x| deg[x] + right.len() <= max_degree)
            && right.iter().all(|&y| deg[y] + left.len() <= max_degree);
        if fits && rng.gen_bool(0.5) {
            for &x in left {
                for &y in right {
                    out.push((x, y));
                    deg[x] += 1;
                    deg[y] += 1;
                }
            }
        }
    }
    let vs: Vec<Vertex> = (0..n).collect();
    let mut edges = Vec::new();
    let mut deg = vec![0; n];
    build(&vs, max_degree, rng, &mut edges, &mut deg);
    Graph::unweighted(n, edges).unwrap()
}

/// Same structure with weights drawn uniformly from `[lo, hi]`.
pub fn random_weights<R: Rng + ?Sized>(g: &Graph, lo: f64, hi: f64, rng: &mut R) -> Graph {
    let w: Vec<f64> = (0..g.m()).map(|_| rng.gen_range(lo..=hi)).collect();
    g.with_weights(&w).unwrap()
}
