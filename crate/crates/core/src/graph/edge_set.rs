use std::cmp::Ordering;

use fixedbitset::FixedBitSet;

use super::{EdgeId, Graph, GraphError};

/// A set of edge ids of one graph with a cached total weight.
///
/// Equality ignores the cached weight. The ordering is by cardinality, then
/// lexicographically by ascending edge ids; solvers use it to break weight ties.
#[derive(Clone, Debug)]
pub struct EdgeSet {
    members: FixedBitSet,
    weight: f64,
}

impl EdgeSet {
    pub fn empty(g: &Graph) -> Self {
        Self { members: FixedBitSet::with_capacity(g.m()), weight: 0.0 }
    }

    /// The trivial set `E(G)`.
    pub fn all(g: &Graph) -> Self {
        let mut members = FixedBitSet::with_capacity(g.m());
        members.insert_range(..);
        Self { members, weight: g.total_weight() }
    }

    pub fn from_ids<I>(g: &Graph, ids: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = EdgeId>,
    {
        let mut set = Self::empty(g);
        for id in ids {
            if id >= g.m() {
                return Err(GraphError::EdgeOutOfRange { id, m: g.m() });
            }
            set.insert(g, id);
        }
        Ok(set)
    }

    /// Adds `id`; returns false if it was already present. Panics if out of range.
    pub fn insert(&mut self, g: &Graph, id: EdgeId) -> bool {
        if self.members.put(id) {
            false
        } else {
            self.weight += g.weight(id);
            true
        }
    }

    pub fn contains(&self, id: EdgeId) -> bool {
        self.members.contains(id)
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_clear()
    }

    /// Ascending edge ids.
    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.members.ones()
    }

    pub fn ids(&self) -> Vec<EdgeId> {
        self.iter().collect()
    }

    pub fn weight(&self) -> f64 {
        self.weight
    }

    /// Number of edges of the graph this set was built for.
    pub fn universe(&self) -> usize {
        self.members.len()
    }

    /// Sum of member weights, recomputed from `g`.
    pub fn recompute_weight(&self, g: &Graph) -> f64 {
        self.iter().map(|id| g.weight(id)).sum()
    }

    /// Rebuilds this set inside another graph through an id map
    /// (`map[local] = target id`), e.g. lifting a component solution.
    pub fn lift(&self, target: &Graph, map: &[EdgeId]) -> EdgeSet {
        let mut out = EdgeSet::empty(target);
        for id in self.iter() {
            out.insert(target, map[id]);
        }
        out
    }

    /// Strictly preferred as a minimum: lighter by more than [`crate::EPS`], or
    /// tied on weight and smaller in the set order.
    pub fn better_than(&self, other: &EdgeSet) -> bool {
        if (self.weight - other.weight).abs() > crate::EPS {
            self.weight < other.weight
        } else {
            self < other
        }
    }

    /// Union of two sets over the same graph.
    pub fn union(&self, other: &EdgeSet, g: &Graph) -> EdgeSet {
        let mut out = self.clone();
        for id in other.iter() {
            out.insert(g, id);
        }
        out
    }
}

impl PartialEq for EdgeSet {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for EdgeSet {}

impl Ord for EdgeSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for EdgeSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
