//! Exact minimum-weight PEDS on general graphs by branch and bound.
//!
//! Each vertex carries a domain of still-possible colors. Filtering enforces
//! the coloring rules locally: whites see only yellows, a yellow has exactly
//! one non-white neighbor, a black has at least two. The bound is the weight of
//! edges already forced into `P` plus every negative weight that may still
//! join. Used where the oracle's vertex cap is too small.

use crate::domination::peds_from_white_mask;
use crate::graph::{EdgeSet, Graph, Vertex};
use crate::{Counters, EPS};

const W: u8 = 1;
const Y: u8 = 2;
const B: u8 = 4;
const NONWHITE: u8 = Y | B;
const ALL: u8 = W | Y | B;

#[derive(Clone)]
struct Domains {
    dom: Vec<u8>,
}

impl Domains {
    fn def_nonwhite(&self, v: Vertex) -> bool {
        self.dom[v] & W == 0
    }

    fn pos_nonwhite(&self, v: Vertex) -> bool {
        self.dom[v] & NONWHITE != 0
    }

    /// Fewest and most non-white neighbors `u` can have under its domain: a
    /// white sees only non-whites, a yellow exactly one, a black two or more.
    fn need_max(&self, g: &Graph, u: Vertex) -> (usize, usize) {
        let d = self.dom[u];
        let deg = g.degree(u);
        let mut range = (usize::MAX, 0);
        for (c, lo, hi) in [(W, deg, deg), (Y, 1, 1), (B, 2, deg)] {
            if d & c != 0 {
                range = (range.0.min(lo), range.1.max(hi));
            }
        }
        range
    }

    /// New domain for `v` from its neighborhood and its neighbors' needs.
    fn revise(&self, g: &Graph, v: Vertex) -> u8 {
        let mut d = self.dom[v];
        let (mut def, mut pos) = (0, 0);
        for u in g.neighbors(v) {
            def += usize::from(self.def_nonwhite(u));
            pos += usize::from(self.pos_nonwhite(u));
            if self.dom[u] & Y == 0 {
                d &= !W;
            }
            if self.dom[u] == W {
                d &= Y;
            }
        }
        if def > 1 || pos == 0 {
            d &= !Y;
        }
        if pos < 2 {
            d &= !B;
        }
        for u in g.neighbors(v) {
            let (need, max) = self.need_max(g, u);
            let (mut others_def, mut others_pos) = (0, 0);
            for x in g.neighbors(u) {
                if x != v {
                    others_def += usize::from(self.def_nonwhite(x));
                    others_pos += usize::from(self.pos_nonwhite(x));
                }
            }
            if others_def >= max {
                d &= W;
            }
            if others_pos < need {
                d &= NONWHITE;
            }
        }
        d
    }

    /// Filters to a fixpoint starting from `dirty`; false on a wipe-out.
    fn propagate(&mut self, g: &Graph, mut dirty: Vec<Vertex>, counters: &mut Counters) -> bool {
        let mut queued = vec![false; g.n()];
        for &v in &dirty {
            queued[v] = true;
        }
        while let Some(v) = dirty.pop() {
            queued[v] = false;
            let d = self.revise(g, v);
            if d == 0 {
                return false;
            }
            if d != self.dom[v] {
                self.dom[v] = d;
                counters.propagations += 1;
                for u in g.neighbors(v) {
                    for x in std::iter::once(u).chain(g.neighbors(u)) {
                        if !queued[x] {
                            queued[x] = true;
                            dirty.push(x);
                        }
                    }
                }
            }
        }
        true
    }

    fn bound(&self, g: &Graph) -> f64 {
        g.edges()
            .iter()
            .map(|e| {
                if self.def_nonwhite(e.u) && self.def_nonwhite(e.v) {
                    e.weight
                } else if self.pos_nonwhite(e.u) && self.pos_nonwhite(e.v) {
                    e.weight.min(0.0)
                } else {
                    0.0
                }
            })
            .sum()
    }

    /// Unfixed vertex with the smallest domain, then the most fixed
    /// neighbors, then the smallest id.
    fn pick(&self, g: &Graph) -> Option<Vertex> {
        let fixed = |x: Vertex| self.dom[x].count_ones() == 1;
        (0..g.n()).filter(|&v| !fixed(v)).min_by_key(|&v| {
            let f = g.neighbors(v).filter(|&u| fixed(u)).count();
            (self.dom[v].count_ones(), usize::MAX - f, v)
        })
    }
}

fn branch(g: &Graph, st: Domains, best: &mut EdgeSet, counters: &mut Counters) {
    if st.bound(g) >= best.weight() - EPS {
        return;
    }
    let Some(v) = st.pick(g) else {
        let white: Vec<bool> = st.dom.iter().map(|&d| d == W).collect();
        if let Some((p, _)) = peds_from_white_mask(g, &white) {
            if p.better_than(best) {
                *best = p;
            }
        }
        return;
    };
    for c in [W, Y, B] {
        if st.dom[v] & c == 0 {
            continue;
        }
        counters.branchings += 1;
        let mut next = st.clone();
        next.dom[v] = c;
        let dirty: Vec<Vertex> =
            std::iter::once(v).chain(g.neighbors(v)).chain(g.neighbors(v).flat_map(|u| g.neighbors(u))).collect();
        if next.propagate(g, dirty, counters) {
            branch(g, next, best, counters);
        }
    }
}

fn solve_connected(g: &Graph, counters: &mut Counters) -> EdgeSet {
    let mut best = EdgeSet::all(g);
    let mut st = Domains { dom: vec![ALL; g.n()] };
    if st.propagate(g, (0..g.n()).collect(), counters) {
        branch(g, st, &mut best, counters);
    }
    best
}

/// A minimum-weight PEDS of `g`. Among equal-weight optima the first one
/// found is kept.
pub fn min_weight_peds(g: &Graph) -> (EdgeSet, f64) {
    min_weight_peds_counted(g, &mut Counters::default())
}

pub fn min_weight_peds_counted(g: &Graph, counters: &mut Counters) -> (EdgeSet, f64) {
    let mut out = EdgeSet::empty(g);
    let comps = g.components();
    if comps.len() == 1 {
        let p = solve_connected(g, counters);
        let w = p.weight();
        return (p, w);
    }
    for comp in comps {
        let sub = g.induced_subgraph(&comp);
        let p = solve_connected(&sub.graph, counters);
        out = out.union(&p.lift(g, &sub.edge_map), g);
    }
    let w = out.weight();
    (out, w)
}
