//! Hardness gadgets: the shield graph, magnification of cubic graphs, and
//! `3k`-subdivision, each with a map back to the source graph.

mod dichotomy;
mod numbers;
mod reductions;

pub use dichotomy::{
    classify_dichotomy, find_induced_linear_forest, solve_hfree_bounded, Dichotomy, HFreeError, HardnessReason,
};
pub use numbers::{k_prime, reduction_numbers, ReductionNumbers};
pub use reductions::{
    magnify_witness, subdivide_witness, verify_reduction_magnify, verify_reduction_subdivide, MagnifyReport,
    ReductionError, SubdivideReport,
};

use serde::Serialize;
use thiserror::Error;

use crate::graph::{EdgeId, Graph, Vertex};

/// Shield vertices `v1..v12` are `0..12`; these are `v3`, `v7`, `v11`.
pub const CONTACTS: [Vertex; 3] = [2, 6, 10];

/// The 12-vertex shield: a 12-cycle `v1..v12` plus chords `v2v4`, `v6v8`,
/// `v10v12`.
pub fn shield() -> Graph {
    let cycle = (0..12).map(|i| (i, (i + 1) % 12));
    Graph::unweighted(12, cycle.chain([(1, 3), (5, 7), (9, 11)])).unwrap()
}

/// How a gadget graph relates to its source graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GadgetMap {
    /// Source vertex to the gadget vertices that replace it.
    pub vertices: Vec<Vec<Vertex>>,
    /// Source edge to the gadget edges that replace it, ordered from the
    /// smaller source endpoint.
    pub edges: Vec<Vec<EdgeId>>,
    /// Contact vertices `v3, v7, v11` of each shield (magnification only).
    pub contacts: Vec<[Vertex; 3]>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GadgetError {
    #[error("magnification needs a cubic graph; vertex {vertex} has degree {degree}")]
    NotCubic { vertex: Vertex, degree: usize },
}

/// Replaces every vertex `v` of a cubic graph by a shield `S_v`. If `x < y < z`
/// are the neighbors of `v`, the edges `xv, yv, zv` attach to `v3, v7, v11` of
/// `S_v` respectively. Shield `v` occupies vertices `12v..12v+12`. Shield
/// edges get weight 1; connecting edges keep their source weight.
pub fn magnify(g: &Graph) -> Result<(Graph, GadgetMap), GadgetError> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) != 3) {
        return Err(GadgetError::NotCubic { vertex: v, degree: g.degree(v) });
    }
    let s = shield();
    let mut edges = Vec::with_capacity(15 * g.n() + g.m());
    for v in 0..g.n() {
        edges.extend(s.edges().iter().map(|e| (12 * v + e.u, 12 * v + e.v, 1.0)));
    }
    let contact = |v: Vertex, u: Vertex| 12 * v + CONTACTS[g.neighbors(v).position(|x| x == u).unwrap()];
    for e in g.edges() {
        edges.push((contact(e.u, e.v), contact(e.v, e.u), e.weight));
    }
    let out = Graph::new(12 * g.n(), edges).unwrap();
    let map = GadgetMap {
        vertices: (0..g.n()).map(|v| (12 * v..12 * v + 12).collect()).collect(),
        edges: g
            .edges()
            .iter()
            .map(|e| vec![out.edge_between(contact(e.u, e.v), contact(e.v, e.u)).unwrap()])
            .collect(),
        contacts: (0..g.n()).map(|v| CONTACTS.map(|c| 12 * v + c)).collect(),
    };
    Ok((out, map))
}

/// The `3k`-subdivision: each edge `uv` (`u < v`) becomes a path
/// `u, x_0, ..., x_{3k-1}, v` with fresh vertices `x_j = n + 3k*id + j`. The
/// path edges `e_0..e_{3k}` are listed from `u` and carry the source weight.
pub fn subdivide(g: &Graph, k: usize) -> (Graph, GadgetMap) {
    let s = 3 * k;
    let n = g.n();
    let inner = |id: EdgeId, j: usize| n + s * id + j;
    let mut edges = Vec::with_capacity((s + 1) * g.m());
    let mut paths = Vec::with_capacity(g.m());
    for (id, e) in g.edges().iter().enumerate() {
        let mut walk = vec![e.u];
        walk.extend((0..s).map(|j| inner(id, j)));
        walk.push(e.v);
        let path: Vec<(Vertex, Vertex)> = walk.windows(2).map(|p| (p[0], p[1])).collect();
        edges.extend(path.iter().map(|&(a, b)| (a, b, e.weight)));
        paths.push(path);
    }
    let out = Graph::new(n + s * g.m(), edges).unwrap();
    let map = GadgetMap {
        vertices: (0..n).map(|v| vec![v]).collect(),
        edges: paths.iter().map(|p| p.iter().map(|&(a, b)| out.edge_between(a, b).unwrap()).collect()).collect(),
        contacts: Vec::new(),
    };
    (out, map)
}
