//! Exact minimum-weight dominating induced matching (EEDS) by branch and bound.
//!
//! An EEDS is the same thing as a white/yellow labeling where whites are
//! independent and every yellow vertex has exactly one yellow neighbor; the
//! matching is the set of yellow-yellow edges. The search labels vertices,
//! propagates forced labels, and bounds by the fixed matching weight plus all
//! negative weights that could still join it.

use thiserror::Error;

use crate::domination::peds_from_white_mask;
use crate::graph::{EdgeSet, Graph, Vertex};
use crate::{Counters, EPS};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DimError {
    #[error("seed set does not dominate vertex {0}")]
    NotDominating(Vertex),
    #[error("seed vertex {0} out of range")]
    OutOfRange(Vertex),
}

const FREE: u8 = 0;
const WHITE: u8 = 1;
const YELLOW: u8 = 2;

struct State<'g> {
    g: &'g Graph,
    label: Vec<u8>,
    yellow_nbrs: Vec<u32>,
    free_nbrs: Vec<u32>,
    trail: Vec<Vertex>,
    queue: Vec<Vertex>,
    /// Weight of yellow-yellow edges.
    fixed: f64,
    /// Sum of negative weights on edges that may still become yellow-yellow.
    open_negative: f64,
    counters: Counters,
}

impl<'g> State<'g> {
    fn new(g: &'g Graph) -> Self {
        let free_nbrs = (0..g.n()).map(|v| g.degree(v) as u32).collect();
        let open_negative = g.edges().iter().map(|e| e.weight.min(0.0)).sum();
        Self {
            g,
            label: vec![FREE; g.n()],
            yellow_nbrs: vec![0; g.n()],
            free_nbrs,
            trail: Vec::new(),
            queue: Vec::new(),
            fixed: 0.0,
            open_negative,
            counters: Counters::default(),
        }
    }

    fn bound(&self) -> f64 {
        self.fixed + self.open_negative
    }

    /// Labels `v`; false on an immediate white-white conflict.
    fn assign(&mut self, v: Vertex, l: u8) -> bool {
        debug_assert_eq!(self.label[v], FREE);
        self.label[v] = l;
        self.trail.push(v);
        self.counters.propagations += 1;
        let mut ok = true;
        for &(u, id) in self.g.incident(v) {
            self.free_nbrs[u] -= 1;
            let w = self.g.weight(id).min(0.0);
            match (l, self.label[u]) {
                (WHITE, WHITE) => ok = false,
                (WHITE, _) => self.open_negative -= w,
                (YELLOW, YELLOW) => {
                    self.open_negative -= w;
                    self.fixed += self.g.weight(id);
                }
                _ => {}
            }
            if l == YELLOW {
                self.yellow_nbrs[u] += 1;
            }
            self.queue.push(u);
        }
        self.queue.push(v);
        ok
    }

    fn undo_to(&mut self, len: usize) {
        while self.trail.len() > len {
            let v = self.trail.pop().unwrap();
            let l = self.label[v];
            for &(u, _) in self.g.incident(v) {
                self.free_nbrs[u] += 1;
                if l == YELLOW {
                    self.yellow_nbrs[u] -= 1;
                }
            }
            self.label[v] = FREE;
        }
    }

    /// Applies forcing rules until a fixpoint; false on conflict.
    fn propagate(&mut self) -> bool {
        while let Some(x) = self.queue.pop() {
            match self.label[x] {
                WHITE => {
                    let g = self.g;
                    for &(u, _) in g.incident(x) {
                        let label = self.label[u];
                        match label {
                            WHITE => return self.fail(),
                            FREE if !self.assign(u, YELLOW) => return self.fail(),
                            _ => {}
                        }
                    }
                }
                YELLOW => match (self.yellow_nbrs[x], self.free_nbrs[x]) {
                    (0, 0) => return self.fail(),
                    (0, 1) => {
                        let u = self.free_neighbor(x);
                        if !self.assign(u, YELLOW) {
                            return self.fail();
                        }
                    }
                    (1, f) if f > 0 => {
                        let g = self.g;
                        for &(u, _) in g.incident(x) {
                            if self.label[u] == FREE && !self.assign(u, WHITE) {
                                return self.fail();
                            }
                        }
                    }
                    (y, _) if y >= 2 => return self.fail(),
                    _ => {}
                },
                _ => {
                    if self.yellow_nbrs[x] >= 2 && !self.assign(x, WHITE) {
                        return self.fail();
                    }
                }
            }
        }
        true
    }

    fn fail(&mut self) -> bool {
        self.queue.clear();
        false
    }

    fn free_neighbor(&self, x: Vertex) -> Vertex {
        self.g.neighbors(x).find(|&u| self.label[u] == FREE).unwrap()
    }

    /// Highest degree first, then most labeled neighbors, then smallest id.
    fn pick(&self, priority: &[Vertex]) -> Option<Vertex> {
        if let Some(&v) = priority.iter().find(|&&v| self.label[v] == FREE) {
            return Some(v);
        }
        let mut best: Option<(usize, u32, Vertex)> = None;
        for v in 0..self.g.n() {
            if self.label[v] != FREE {
                continue;
            }
            let deg = self.g.degree(v);
            let labeled = deg as u32 - self.free_nbrs[v];
            if best.is_none_or(|(d, l, _)| (deg, labeled) > (d, l)) {
                best = Some((deg, labeled, v));
            }
        }
        best.map(|b| b.2)
    }

    fn leaf(&self) -> Option<EdgeSet> {
        let white: Vec<bool> = self.label.iter().map(|&l| l == WHITE).collect();
        let (p, coloring) = peds_from_white_mask(self.g, &white)?;
        coloring.black().is_empty().then_some(p)
    }
}

struct Frame {
    var: Vertex,
    tried: u8,
    trail_len: usize,
    fixed: f64,
    open_negative: f64,
}

/// Branch and bound on one graph. `priority` vertices are branched on first,
/// in order.
fn search(g: &Graph, priority: &[Vertex], counters: &mut Counters) -> Option<EdgeSet> {
    let mut st = State::new(g);
    let mut best: Option<EdgeSet> = None;
    let mut stack: Vec<Frame> = Vec::new();
    let branch_labels = [WHITE, YELLOW];

    // `descend` is true when the current node has just been propagated
    // successfully and should be expanded.
    let mut descend = true;
    loop {
        if descend {
            let pruned = best.as_ref().is_some_and(|b| st.bound() >= b.weight() - EPS);
            if !pruned {
                match st.pick(priority) {
                    None => {
                        if let Some(p) = st.leaf() {
                            if best.as_ref().is_none_or(|b| p.better_than(b)) {
                                best = Some(p);
                            }
                        }
                    }
                    Some(var) => {
                        stack.push(Frame {
                            var,
                            tried: 0,
                            trail_len: st.trail.len(),
                            fixed: st.fixed,
                            open_negative: st.open_negative,
                        });
                    }
                }
            }
        }
        let Some(top) = stack.last_mut() else { break };
        if top.tried as usize == branch_labels.len() {
            stack.pop();
            descend = false;
            continue;
        }
        let l = branch_labels[top.tried as usize];
        top.tried += 1;
        let (var, len, fixed, open_negative) = (top.var, top.trail_len, top.fixed, top.open_negative);
        st.undo_to(len);
        st.fixed = fixed;
        st.open_negative = open_negative;
        st.queue.clear();
        st.counters.branchings += 1;
        descend = st.assign(var, l) && st.propagate();
    }
    *counters += st.counters;
    best
}

/// [`search`] on a graph known to be connected.
pub(crate) fn dim_connected(g: &Graph, seeds: &[Vertex], counters: &mut Counters) -> Option<EdgeSet> {
    search(g, seeds, counters)
}

/// Solves each component separately and takes the union.
fn by_components(g: &Graph, seeds: &[Vertex], counters: &mut Counters) -> Option<EdgeSet> {
    let comps = g.components();
    if comps.len() == 1 {
        return search(g, seeds, counters);
    }
    let mut out = EdgeSet::empty(g);
    for comp in comps {
        let sub = g.induced_subgraph(&comp);
        let local_seeds: Vec<Vertex> = seeds.iter().filter_map(|s| comp.binary_search(s).ok()).collect();
        let p = search(&sub.graph, &local_seeds, counters)?;
        out = out.union(&p.lift(g, &sub.edge_map), g);
    }
    Some(out)
}

/// Minimum-weight EEDS of `g`, or `None` if `g` has no EEDS.
pub fn dim_min_weight(g: &Graph) -> Option<(EdgeSet, f64)> {
    dim_min_weight_counted(g, &mut Counters::default())
}

pub fn dim_min_weight_counted(g: &Graph, counters: &mut Counters) -> Option<(EdgeSet, f64)> {
    by_components(g, &[], counters).map(|p| {
        let w = p.weight();
        (p, w)
    })
}

/// Like [`dim_min_weight`], but first enumerates the white/yellow labelings of
/// the dominating set `d`.
pub fn dim_min_weight_seeded(g: &Graph, d: &[Vertex]) -> Result<Option<(EdgeSet, f64)>, DimError> {
    dim_min_weight_seeded_counted(g, d, &mut Counters::default())
}

pub fn dim_min_weight_seeded_counted(
    g: &Graph,
    d: &[Vertex],
    counters: &mut Counters,
) -> Result<Option<(EdgeSet, f64)>, DimError> {
    let mut dominated = vec![false; g.n()];
    for &v in d {
        if v >= g.n() {
            return Err(DimError::OutOfRange(v));
        }
        dominated[v] = true;
        for u in g.neighbors(v) {
            dominated[u] = true;
        }
    }
    if let Some(v) = dominated.iter().position(|&x| !x) {
        return Err(DimError::NotDominating(v));
    }
    Ok(by_components(g, d, counters).map(|p| {
        let w = p.weight();
        (p, w)
    }))
}
