//! Robust minimum-weight PEDS for P5-free graphs.
//!
//! On any input the solver returns either an optimal PEDS or an induced P5.
//! Each component is handled through a principal vertex, a dominating clique
//! or induced P3 grown from it, and a short list of candidate sets read off
//! the coloring patterns a proper PEDS can show on that P3.

mod principal;
mod structure;

pub use principal::{principal_vertex, test_vertex, Principal, PrincipalSearch, TestResult};
pub use structure::{dominating_structure, DominatingStructure, Domination, StructureError};

use serde::Serialize;

use crate::dim::dim_min_weight_seeded_counted;
use crate::domination::{coloring_from_peds, peds_from_white_set, single_black_completion, Color, Coloring};
use crate::graph::{EdgeSet, Graph, Vertex};
use crate::{Counters, PedsKind};

#[derive(Clone, Debug)]
pub enum SolveOutcome {
    Optimal { peds: EdgeSet, weight: f64, kind: PedsKind },
    P5Certificate([Vertex; 5]),
}

/// Colors of `(v1, v2, v3)` on an induced P3, up to reversal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum P3Pattern {
    /// BBY
    A,
    /// BYW
    B,
    /// YBY
    C,
    /// WYW
    D,
    /// YWY
    E,
    /// BBB, forces a trivial set.
    F,
    /// YYW, forces an efficient set.
    G,
}

impl P3Pattern {
    pub fn is_proper_pattern(self) -> bool {
        !matches!(self, P3Pattern::F | P3Pattern::G)
    }
}

/// Pattern of `c` on the path `p`, or `None` for a combination no valid
/// coloring can show.
pub fn p3_pattern(c: &Coloring, p: [Vertex; 3]) -> Option<P3Pattern> {
    use Color::{Black as B, White as W, Yellow as Y};
    let t = (c.get(p[0]), c.get(p[1]), c.get(p[2]));
    Some(match t {
        (B, B, Y) | (Y, B, B) => P3Pattern::A,
        (B, Y, W) | (W, Y, B) => P3Pattern::B,
        (Y, B, Y) => P3Pattern::C,
        (W, Y, W) => P3Pattern::D,
        (Y, W, Y) => P3Pattern::E,
        (B, B, B) => P3Pattern::F,
        (Y, Y, W) | (W, Y, Y) => P3Pattern::G,
        _ => return None,
    })
}

/// Every dominating induced P3 `[v1, v2, v3]` with `v1 < v3`.
pub fn dominating_induced_p3s(g: &Graph) -> Vec<[Vertex; 3]> {
    let mut out = Vec::new();
    let mut seen = vec![0usize; g.n()];
    let mut stamp = 0;
    for v2 in 0..g.n() {
        let nb: Vec<Vertex> = g.neighbors(v2).collect();
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if g.has_edge(a, b) {
                    continue;
                }
                stamp += 1;
                let mut covered = 0;
                for c in [a, v2, b] {
                    for x in std::iter::once(c).chain(g.neighbors(c)) {
                        if seen[x] != stamp {
                            seen[x] = stamp;
                            covered += 1;
                        }
                    }
                }
                if covered == g.n() {
                    out.push([a.min(b), v2, a.max(b)]);
                }
            }
        }
    }
    out
}

struct Candidates<'g> {
    g: &'g Graph,
    best: EdgeSet,
}

impl<'g> Candidates<'g> {
    fn new(g: &'g Graph) -> Self {
        Candidates { g, best: EdgeSet::all(g) }
    }

    fn offer(&mut self, p: EdgeSet) {
        if p.better_than(&self.best) {
            self.best = p;
        }
    }

    fn offer_white(&mut self, white: impl IntoIterator<Item = Vertex>) {
        let white: Vec<Vertex> = white.into_iter().collect();
        if let Some((p, _)) = peds_from_white_set(self.g, &white) {
            self.offer(p);
        }
    }

    fn offer_single_black(&mut self, yellow: &[Vertex]) {
        if let Some(s) = single_black_completion(self.g, yellow) {
            self.offer(s.peds);
        }
    }

    fn offer_eeds(&mut self, d: &[Vertex], counters: &mut Counters) {
        if let Ok(Some((p, _))) = dim_min_weight_seeded_counted(self.g, d, counters) {
            self.offer(p);
        }
    }
}

fn nbrs_except(g: &Graph, v: Vertex, skip: Vertex) -> impl Iterator<Item = Vertex> + '_ {
    g.neighbors(v).filter(move |&x| x != skip)
}

fn union_sorted(a: impl Iterator<Item = Vertex>, b: impl Iterator<Item = Vertex>) -> Vec<Vertex> {
    let mut v: Vec<Vertex> = a.chain(b).collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// Adds the EEDS and every proper-PEDS candidate for a dominating induced
/// P3, or returns an induced P5 found along the way.
fn p3_candidates(
    g: &Graph,
    [v1, v2, v3]: [Vertex; 3],
    cands: &mut Candidates,
    counters: &mut Counters,
) -> Result<(), [Vertex; 5]> {
    cands.offer_eeds(&[v1, v2, v3], counters);
    // (a) BBY and YBB.
    cands.offer_white(nbrs_except(g, v3, v2));
    cands.offer_white(nbrs_except(g, v1, v2));
    // (b) BYW and WYB.
    cands.offer_white(nbrs_except(g, v2, v1));
    cands.offer_white(nbrs_except(g, v2, v3));
    // (c) YBY.
    cands.offer_white(union_sorted(nbrs_except(g, v1, v2), nbrs_except(g, v3, v2)));
    // (d) WYW.
    cands.offer_single_black(&union_sorted(g.neighbors(v1), g.neighbors(v3)));
    // (e) YWY.
    let y2: Vec<Vertex> = g.neighbors(v2).collect();
    let t12 = g.common_neighbors(v1, v2).len();
    let t23 = g.common_neighbors(v2, v3).len();
    match (t12, t23) {
        (0, 0) => {
            let a13: Vec<Vertex> = g.neighbors(v1).filter(|&x| x != v2 && !g.has_edge(x, v3)).collect();
            let a31: Vec<Vertex> = g.neighbors(v3).filter(|&x| x != v2 && !g.has_edge(x, v1)).collect();
            let mut in_a31 = vec![false; g.n()];
            for &c in &a31 {
                in_a31[c] = true;
            }
            for &a in &a13 {
                if g.neighbors(a).filter(|&x| in_a31[x]).count() < a31.len() {
                    let c = *a31.iter().find(|&&c| !g.has_edge(a, c)).unwrap();
                    return Err([a, v1, v2, v3, c]);
                }
            }
            cands.offer_single_black(&y2);
            if let ([b1], [b3]) = (a13.as_slice(), a31.as_slice()) {
                let mut out = vec![false; g.n()];
                for &y in y2.iter().chain([b1, b3]) {
                    out[y] = true;
                }
                cands.offer_white((0..g.n()).filter(|&x| !out[x]));
            }
        }
        (1, 0) | (0, 1) => cands.offer_single_black(&y2),
        // Two yellow neighbors of v1 or v3, or no room for a black vertex.
        _ => {}
    }
    Ok(())
}

fn solve_connected(g: &Graph, counters: &mut Counters) -> Result<EdgeSet, [Vertex; 5]> {
    let mut cands = Candidates::new(g);
    if g.m() <= 1 {
        return Ok(cands.best);
    }
    let v = match principal_vertex(g).result {
        Principal::Vertex(v) => v,
        Principal::P5(p) => return Err(p),
        Principal::Disconnected => unreachable!("components are connected"),
    };
    let structure = match dominating_structure(g, v).expect("v is principal") {
        Domination::Structure(s) => s,
        Domination::P5(p) => return Err(p),
    };
    let p3 = match structure {
        DominatingStructure::Kp(k) if k.len() >= 4 => return Ok(cands.best),
        DominatingStructure::Kp(k) => {
            cands.offer_eeds(&k, counters);
            match k[..] {
                [a, b] if g.common_neighbors(a, b).is_empty() => {
                    if let Some(x) = nbrs_except(g, b, a).next() {
                        [a, b, x]
                    } else if let Some(x) = nbrs_except(g, a, b).next() {
                        [x, a, b]
                    } else {
                        return Ok(cands.best);
                    }
                }
                _ => return Ok(cands.best),
            }
        }
        DominatingStructure::InducedP3(p) => p,
    };
    p3_candidates(g, p3, &mut cands, counters)?;
    Ok(cands.best)
}

/// Minimum-weight PEDS of `g`, or an induced P5 of `g`.
pub fn solve_p5free(g: &Graph) -> SolveOutcome {
    solve_p5free_counted(g, &mut Counters::default())
}

pub fn solve_p5free_counted(g: &Graph, counters: &mut Counters) -> SolveOutcome {
    let mut out = EdgeSet::empty(g);
    let comps = g.components();
    if comps.len() == 1 {
        return match solve_connected(g, counters) {
            Ok(p) => optimal(g, p),
            Err(p5) => SolveOutcome::P5Certificate(p5),
        };
    }
    for comp in comps {
        let sub = g.induced_subgraph(&comp);
        match solve_connected(&sub.graph, counters) {
            Ok(p) => out = out.union(&p.lift(g, &sub.edge_map), g),
            Err(p5) => return SolveOutcome::P5Certificate(p5.map(|x| sub.vertex_map[x])),
        }
    }
    optimal(g, out)
}

fn optimal(g: &Graph, peds: EdgeSet) -> SolveOutcome {
    let kind = coloring_from_peds(g, &peds).expect("component optima form a PEDS").kind();
    let weight = peds.weight();
    SolveOutcome::Optimal { peds, weight, kind }
}
