//! Minimum-weight PEDS on cubic claw-free graphs and on claw-free graphs whose
//! degree-2 vertices have adjacent neighbors.
//!
//! In a connected graph where every vertex lies on a triangle, one black
//! vertex forces every vertex black, so the only PEDS are the EEDS and the
//! trivial set. The solver therefore takes, per component, the lighter of
//! `E(G)` and the best EEDS.

use thiserror::Error;

use crate::dim::dim_connected;
use crate::domination::coloring_from_peds;
use crate::graph::{Claw, EdgeSet, Graph, Vertex};
use crate::{Counters, PedsKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassViolation {
    Degree {
        vertex: Vertex,
        degree: usize,
    },
    NoTriangle {
        vertex: Vertex,
    },
    Claw(Claw),
    /// A degree-2 vertex whose two neighbors are not adjacent.
    OpenDegreeTwo {
        vertex: Vertex,
    },
    Disconnected,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CubicError {
    #[error("component {component} is outside the class: {violation:?}")]
    NotInClass { component: usize, violation: ClassViolation },
    #[error("black propagation needs {0:?}")]
    Precondition(ClassViolation),
}

/// Cubic and every vertex on a triangle (equivalently: cubic and claw-free).
pub fn check_class_cubic_clawfree(g: &Graph) -> Result<(), ClassViolation> {
    for v in 0..g.n() {
        if g.degree(v) != 3 {
            return Err(ClassViolation::Degree { vertex: v, degree: g.degree(v) });
        }
    }
    match (0..g.n()).find(|&v| !g.in_triangle(v)) {
        Some(v) => Err(ClassViolation::NoTriangle { vertex: v }),
        None => Ok(()),
    }
}

/// Claw-free, and every degree-2 vertex has adjacent neighbors. Pendant
/// vertices are allowed.
pub fn check_class_extended(g: &Graph) -> Result<(), ClassViolation> {
    for v in 0..g.n() {
        if g.degree(v) == 2 {
            let nb: Vec<Vertex> = g.neighbors(v).collect();
            if !g.has_edge(nb[0], nb[1]) {
                return Err(ClassViolation::OpenDegreeTwo { vertex: v });
            }
        }
    }
    match g.find_claw() {
        Some(c) => Err(ClassViolation::Claw(c)),
        None => Ok(()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlackStep {
    Seed,
    /// Blackened as a member of a triangle through this black vertex.
    Triangle {
        from: Vertex,
    },
    /// Blackened as the neighbor of a black vertex outside its triangle.
    Edge {
        from: Vertex,
    },
}

/// Trace of black propagation from a seed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlackPropagation {
    pub order: Vec<(Vertex, BlackStep)>,
    pub n: usize,
}

impl BlackPropagation {
    pub fn all_black(&self) -> bool {
        self.order.len() == self.n
    }
}

/// Replays the argument that a connected graph with every vertex on a
/// triangle has no proper PEDS: seed vertex 0 black, blacken whole triangles
/// through black vertices, and cross edges to unreached vertices.
pub fn check_no_proper_peds(g: &Graph) -> Result<BlackPropagation, CubicError> {
    if !g.is_connected() {
        return Err(CubicError::Precondition(ClassViolation::Disconnected));
    }
    if let Some(v) = (0..g.n()).find(|&v| !g.in_triangle(v)) {
        return Err(CubicError::Precondition(ClassViolation::NoTriangle { vertex: v }));
    }
    let mut black = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    let mut queue = std::collections::VecDeque::new();
    if g.n() > 0 {
        black[0] = true;
        order.push((0, BlackStep::Seed));
        queue.push_back(0);
    }
    loop {
        while let Some(v) = queue.pop_front() {
            let nb: Vec<Vertex> = g.neighbors(v).collect();
            for (i, &a) in nb.iter().enumerate() {
                for &b in &nb[i + 1..] {
                    if g.has_edge(a, b) {
                        for x in [a, b] {
                            if !black[x] {
                                black[x] = true;
                                order.push((x, BlackStep::Triangle { from: v }));
                                queue.push_back(x);
                            }
                        }
                    }
                }
            }
        }
        // A black vertex with an unreached neighbor: that neighbor's triangle
        // avoids the black vertex, so it has two non-white neighbors.
        let cross = order.iter().find_map(|&(u, _)| g.neighbors(u).find(|&w| !black[w]).map(|w| (u, w)));
        match cross {
            Some((u, w)) => {
                black[w] = true;
                order.push((w, BlackStep::Edge { from: u }));
                queue.push_back(w);
            }
            None => break,
        }
    }
    Ok(BlackPropagation { order, n: g.n() })
}

#[derive(Clone, Debug)]
pub struct CubicSolution {
    pub peds: EdgeSet,
    pub weight: f64,
    pub kind: PedsKind,
    pub counters: Counters,
}

/// Minimum-weight PEDS, component by component. Every non-trivial component
/// must pass [`check_class_cubic_clawfree`] or [`check_class_extended`].
pub fn solve_cubic_clawfree(g: &Graph) -> Result<CubicSolution, CubicError> {
    let mut counters = Counters::default();
    let comps = g.components();
    let out = if comps.len() == 1 {
        solve_component(g, &mut counters).map_err(|violation| CubicError::NotInClass { component: 0, violation })?
    } else {
        let mut out = EdgeSet::empty(g);
        for (idx, comp) in comps.iter().enumerate() {
            let sub = g.induced_subgraph(comp);
            let best = solve_component(&sub.graph, &mut counters)
                .map_err(|violation| CubicError::NotInClass { component: idx, violation: relabel(violation, comp) })?;
            out = out.union(&best.lift(g, &sub.edge_map), g);
        }
        out
    };
    let kind = coloring_from_peds(g, &out).expect("component optima form a PEDS").kind();
    let weight = out.weight();
    Ok(CubicSolution { peds: out, weight, kind, counters })
}

/// The lighter of `E(h)` and the best EEDS of the connected graph `h`.
fn solve_component(h: &Graph, counters: &mut Counters) -> Result<EdgeSet, ClassViolation> {
    if h.m() > 1 && check_class_cubic_clawfree(h).is_err() {
        check_class_extended(h)?;
    }
    let mut best = EdgeSet::all(h);
    if let Some(d) = dim_connected(h, &[], counters) {
        if d.better_than(&best) {
            best = d;
        }
    }
    Ok(best)
}

fn relabel(v: ClassViolation, map: &[Vertex]) -> ClassViolation {
    match v {
        ClassViolation::Degree { vertex, degree } => ClassViolation::Degree { vertex: map[vertex], degree },
        ClassViolation::NoTriangle { vertex } => ClassViolation::NoTriangle { vertex: map[vertex] },
        ClassViolation::OpenDegreeTwo { vertex } => ClassViolation::OpenDegreeTwo { vertex: map[vertex] },
        ClassViolation::Claw(c) => {
            ClassViolation::Claw(Claw { center: map[c.center], leaves: c.leaves.map(|x| map[x]) })
        }
        ClassViolation::Disconnected => ClassViolation::Disconnected,
    }
}
