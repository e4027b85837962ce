//! Complexity of PEDS on `H`-free graphs of maximum degree `d`, and the
//! polynomial-side solver that exploits bounded component size.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{EdgeSet, Graph, Vertex};
use crate::oracle::{self, DEFAULT_LIMIT};
use crate::search;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum HardnessReason {
    /// `H` has an induced cycle of this length (its girth).
    ContainsCycle(usize),
    /// `H` is a forest with a vertex of degree at least 3.
    ForestWithBranchVertex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Dichotomy {
    /// `H` is a linear forest with `t` paths and `H` is an induced subgraph of
    /// `P_q`, `q = |V(H)| + t - 1`. Components of an `H`-free graph of
    /// maximum degree `d` have at most `(d^(q-1) - 1)/(d - 1)` vertices
    /// (`None` on overflow).
    Polynomial {
        q: usize,
        component_bound: Option<u128>,
    },
    NpComplete(HardnessReason),
}

/// Classifies `H` for maximum degree `d >= 3`.
pub fn classify_dichotomy(h: &Graph, d: usize) -> Dichotomy {
    assert!(d >= 3, "degree bound must be at least 3");
    if let Some(s) = h.girth() {
        return Dichotomy::NpComplete(HardnessReason::ContainsCycle(s));
    }
    if !h.is_linear_forest() {
        return Dichotomy::NpComplete(HardnessReason::ForestWithBranchVertex);
    }
    let t = h.components().len();
    let q = (h.n() + t).saturating_sub(1);
    Dichotomy::Polynomial { q, component_bound: component_bound(d, q) }
}

/// `(d^(q-1) - 1)/(d - 1)`, i.e. `1 + d + .. + d^(q-2)`.
fn component_bound(d: usize, q: usize) -> Option<u128> {
    if q == 0 {
        return Some(0);
    }
    let d = d as u128;
    let top = d.checked_pow(u32::try_from(q - 1).ok()?)?;
    Some((top - 1) / (d - 1))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HFreeError {
    #[error("H is not a linear forest ({0:?}); the problem is NP-complete")]
    NotPolynomial(HardnessReason),
    #[error("vertex {vertex} has degree {degree} > {d}")]
    DegreeExceeded { vertex: Vertex, degree: usize, d: usize },
    #[error("component of {size} vertices exceeds the bound {bound}; induced path {witness:?}")]
    ComponentTooLarge { size: usize, bound: u128, witness: Vec<Vertex> },
    #[error("graph contains H as an induced subgraph at {witness:?}")]
    ContainsH { witness: Vec<Vertex> },
}

/// Vertex-disjoint induced paths of `g`, with no edges between them,
/// matching the components of the linear forest `h`. Vertices are listed path
/// by path, longest path first.
pub fn find_induced_linear_forest(g: &Graph, h: &Graph) -> Option<Vec<Vertex>> {
    assert!(h.is_linear_forest());
    let mut lengths: Vec<usize> = h.components().iter().map(|c| c.len()).collect();
    lengths.sort_unstable_by(|a, b| b.cmp(a));

    struct Ctx<'a> {
        g: &'a Graph,
        lengths: Vec<usize>,
        chosen: Vec<Vertex>,
        in_set: Vec<bool>,
        touching: Vec<u32>,
    }
    impl Ctx<'_> {
        fn add(&mut self, v: Vertex) {
            self.chosen.push(v);
            self.in_set[v] = true;
            for u in self.g.neighbors(v) {
                self.touching[u] += 1;
            }
        }
        fn remove(&mut self) {
            let v = self.chosen.pop().unwrap();
            self.in_set[v] = false;
            for u in self.g.neighbors(v) {
                self.touching[u] -= 1;
            }
        }
        /// Places path `p`, of which `placed` vertices are already chosen.
        fn place(&mut self, p: usize, placed: usize) -> bool {
            if p == self.lengths.len() {
                return true;
            }
            if placed == self.lengths[p] {
                return self.place(p + 1, 0);
            }
            let candidates: Vec<Vertex> = if placed == 0 {
                (0..self.g.n()).filter(|&v| !self.in_set[v] && self.touching[v] == 0).collect()
            } else {
                let end = *self.chosen.last().unwrap();
                self.g.neighbors(end).filter(|&v| !self.in_set[v] && self.touching[v] == 1).collect()
            };
            for v in candidates {
                self.add(v);
                if self.place(p, placed + 1) {
                    return true;
                }
                self.remove();
            }
            false
        }
    }

    let mut ctx = Ctx { g, lengths, chosen: Vec::new(), in_set: vec![false; g.n()], touching: vec![0; g.n()] };
    ctx.place(0, 0).then_some(ctx.chosen)
}

/// Minimum-weight PEDS of an `H`-free graph of maximum degree `d`, solved
/// exactly per component. Refuses inputs outside the class with a witness.
pub fn solve_hfree_bounded(g: &Graph, h: &Graph, d: usize) -> Result<(EdgeSet, f64), HFreeError> {
    let (q, bound) = match classify_dichotomy(h, d) {
        Dichotomy::NpComplete(reason) => return Err(HFreeError::NotPolynomial(reason)),
        Dichotomy::Polynomial { q, component_bound } => (q, component_bound.unwrap_or(u128::MAX)),
    };
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) > d) {
        return Err(HFreeError::DegreeExceeded { vertex: v, degree: g.degree(v), d });
    }
    let comps = g.components();
    for comp in &comps {
        if comp.len() as u128 > bound {
            return Err(HFreeError::ComponentTooLarge {
                size: comp.len(),
                bound,
                witness: long_induced_path(g, comp, q),
            });
        }
    }
    if let Some(witness) = find_induced_linear_forest(g, h) {
        return Err(HFreeError::ContainsH { witness });
    }
    let mut out = EdgeSet::empty(g);
    for comp in &comps {
        let sub = g.induced_subgraph(comp);
        let p = if comp.len() <= DEFAULT_LIMIT {
            oracle::min_weight_peds_bruteforce(&sub.graph).expect("within oracle limit").0
        } else {
            search::min_weight_peds(&sub.graph).0
        };
        out = out.union(&p.lift(g, &sub.edge_map), g);
    }
    let w = out.weight();
    Ok((out, w))
}

/// An induced path on `q` vertices inside a component too large to be
/// `P_q`-free: a shortest path from the component's first vertex to a vertex
/// at distance at least `q - 1`.
fn long_induced_path(g: &Graph, comp: &[Vertex], q: usize) -> Vec<Vertex> {
    let bfs = g.bfs(comp[0]);
    let far = bfs.farthest();
    let mut path = bfs.path_to(far).unwrap();
    path.truncate(q.max(1));
    path
}
