//! Immutable weighted simple graphs.
//!
//! Vertices are dense `0..n` ids. Edges are stored canonically (`u < v`) and
//! sorted by `(u, v)`, so an edge id is its rank in that order. Every other
//! module works on this representation.

mod dimacs;
mod edge_set;
mod structure;

pub use dimacs::ParseError;
pub use edge_set::EdgeSet;
pub use structure::{Bfs, Claw};

use thiserror::Error;

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
    pub weight: f64,
}

impl Edge {
    /// The endpoint of this edge that is not `x`.
    pub fn other(&self, x: Vertex) -> Vertex {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("edge id {id} out of range for a graph with {m} edges")]
    EdgeOutOfRange { id: EdgeId, m: usize },
    #[error("weight of edge {0}-{1} is not finite")]
    NonFiniteWeight(Vertex, Vertex),
    #[error("expected {expected} weights, got {got}")]
    WeightCount { expected: usize, got: usize },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    /// Row `v` of the adjacency is `adj[offsets[v]..offsets[v + 1]]`, sorted
    /// by neighbor id; each entry carries the connecting edge id.
    offsets: Vec<usize>,
    adj: Vec<(Vertex, EdgeId)>,
}

/// Result of [`Graph::induced_subgraph`].
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `vertex_map[i]` is the parent-graph id of subgraph vertex `i`.
    pub vertex_map: Vec<Vertex>,
    /// `edge_map[e]` is the parent-graph id of subgraph edge `e`.
    pub edge_map: Vec<EdgeId>,
}

impl Graph {
    /// Builds a graph from weighted edges given in any orientation and order.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex, f64)>,
    {
        let mut list = Vec::new();
        for (a, b, weight) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            if !weight.is_finite() {
                return Err(GraphError::NonFiniteWeight(a, b));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            list.push(Edge { u, v, weight });
        }
        list.sort_by_key(|e| (e.u, e.v));
        if let Some(w) = list.windows(2).find(|w| (w[0].u, w[0].v) == (w[1].u, w[1].v)) {
            return Err(GraphError::DuplicateEdge(w[0].u, w[0].v));
        }

        let mut offsets = vec![0usize; n + 1];
        for e in &list {
            offsets[e.u + 1] += 1;
            offsets[e.v + 1] += 1;
        }
        for v in 0..n {
            offsets[v + 1] += offsets[v];
        }
        // Edges are sorted by (u, v), so each row fills in neighbor order.
        let mut fill = offsets[..n].to_vec();
        let mut adj = vec![(0, 0); 2 * list.len()];
        for (id, e) in list.iter().enumerate() {
            adj[fill[e.u]] = (e.v, id);
            fill[e.u] += 1;
            adj[fill[e.v]] = (e.u, id);
            fill[e.v] += 1;
        }
        Ok(Self { n, edges: list, offsets, adj })
    }

    /// Builds a graph with every edge weighted 1.0.
    pub fn unweighted<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Self::new(n, edges.into_iter().map(|(u, v)| (u, v, 1.0)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[id]
    }

    pub fn weight(&self, id: EdgeId) -> f64 {
        self.edges[id].weight
    }

    pub fn total_weight(&self) -> f64 {
        self.edges.iter().map(|e| e.weight).sum()
    }

    /// Neighbors of `v` with the connecting edge ids, sorted by neighbor.
    pub fn incident(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.incident(v).iter().map(|&(u, _)| u)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_regular(&self, r: usize) -> bool {
        (0..self.n).all(|v| self.degree(v) == r)
    }

    pub fn edge_between(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        let row = self.incident(u);
        row.binary_search_by_key(&v, |&(x, _)| x).ok().map(|i| row[i].1)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// Same structure with all weights set to 1.0.
    pub fn with_unit_weights(&self) -> Self {
        let mut g = self.clone();
        for e in &mut g.edges {
            e.weight = 1.0;
        }
        g
    }

    /// Same structure with weights replaced, indexed by edge id.
    pub fn with_weights(&self, weights: &[f64]) -> Result<Self, GraphError> {
        if weights.len() != self.m() {
            return Err(GraphError::WeightCount { expected: self.m(), got: weights.len() });
        }
        let mut g = self.clone();
        for (e, &w) in g.edges.iter_mut().zip(weights) {
            if !w.is_finite() {
                return Err(GraphError::NonFiniteWeight(e.u, e.v));
            }
            e.weight = w;
        }
        Ok(g)
    }

    /// Subgraph induced by `vertices` (deduplicated and sorted), preserving weights.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> InducedSubgraph {
        let mut vertex_map: Vec<Vertex> = vertices.to_vec();
        vertex_map.sort_unstable();
        vertex_map.dedup();
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertex_map.iter().enumerate() {
            local[v] = i;
        }
        // Parent edges are sorted by (u, v) and the relabelling is monotone,
        // so the subgraph edge order matches the parent order.
        let mut edge_map = Vec::new();
        let mut edges = Vec::new();
        for (id, e) in self.edges.iter().enumerate() {
            if local[e.u] != usize::MAX && local[e.v] != usize::MAX {
                edge_map.push(id);
                edges.push((local[e.u], local[e.v], e.weight));
            }
        }
        let graph = Graph::new(vertex_map.len(), edges).expect("induced subgraph of a valid graph");
        InducedSubgraph { graph, vertex_map, edge_map }
    }

    /// Vertex-disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .map(|e| (e.u, e.v, e.weight))
            .chain(other.edges.iter().map(|e| (e.u + shift, e.v + shift, e.weight)));
        Graph::new(self.n + other.n, edges).expect("union of valid graphs")
    }

    /// Edge weights in id order.
    pub fn weights(&self) -> Vec<f64> {
        self.edges.iter().map(|e| e.weight).collect()
    }
}
