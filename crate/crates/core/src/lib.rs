//! Perfect and efficient edge domination.
//!
//! A *perfect edge dominating set* (PEDS) of a graph is an edge set `P` such
//! that every edge outside `P` touches exactly one edge of `P`. An *efficient*
//! one (EEDS, a dominating induced matching) also has every edge of `P`
//! touched exactly once. This crate provides exact solvers for the classes
//! where the minimum-weight problem is tractable (cubic claw-free graphs,
//! P5-free graphs, bounded-degree `H`-free graphs with `H` a linear forest),
//! an exhaustive oracle, and the hardness gadgets together with checks of
//! their counting identities.

pub mod bench;
pub mod cubic;
pub mod dim;
pub mod domination;
pub mod gadgets;
pub mod generators;
pub mod graph;
pub mod oracle;
pub mod p5free;
pub mod search;

pub use domination::{Color, Coloring, PedsKind};
pub use graph::{Edge, EdgeId, EdgeSet, Graph, Vertex};

/// Weight comparisons use this absolute tolerance.
pub const EPS: f64 = 1e-9;

/// Work counters reported by the search-based solvers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct Counters {
    pub branchings: u64,
    pub propagations: u64,
}

impl std::ops::AddAssign for Counters {
    fn add_assign(&mut self, rhs: Self) {
        self.branchings += rhs.branchings;
        self.propagations += rhs.propagations;
    }
}
