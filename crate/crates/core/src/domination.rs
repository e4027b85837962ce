//! The black/yellow/white vertex coloring associated with a perfect edge
//! dominating set, and the predicates built on it.
//!
//! For a PEDS `P`, a vertex is black when it meets at least two edges of `P`,
//! yellow when it meets exactly one and white when it meets none. Conversely,
//! `P` is recovered from the white set alone: it is the set of edges with both
//! endpoints non-white. So valid white sets and PEDS are in bijection, which
//! the oracle and every solver below rely on.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{EdgeSet, Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Color {
    Black,
    Yellow,
    White,
}

impl Color {
    pub fn letter(self) -> char {
        match self {
            Color::Black => 'B',
            Color::Yellow => 'Y',
            Color::White => 'W',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PedsKind {
    /// No black vertex: the set is a dominating induced matching.
    Efficient,
    /// Black, yellow and white all present.
    Proper,
    /// No white vertex: the set is all of `E(G)`.
    Trivial,
}

impl fmt::Display for PedsKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PedsKind::Efficient => "efficient",
            PedsKind::Proper => "proper",
            PedsKind::Trivial => "trivial",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring(Vec<Color>);

impl Coloring {
    pub fn new(colors: Vec<Color>) -> Self {
        Self(colors)
    }

    pub fn colors(&self) -> &[Color] {
        &self.0
    }

    pub fn get(&self, v: Vertex) -> Color {
        self.0[v]
    }

    pub fn with(&self, color: Color) -> Vec<Vertex> {
        (0..self.0.len()).filter(|&v| self.0[v] == color).collect()
    }

    pub fn black(&self) -> Vec<Vertex> {
        self.with(Color::Black)
    }

    pub fn yellow(&self) -> Vec<Vertex> {
        self.with(Color::Yellow)
    }

    pub fn white(&self) -> Vec<Vertex> {
        self.with(Color::White)
    }

    /// Classifies by which color classes are empty. Efficient wins when both
    /// black and white are absent (a perfect matching graph).
    pub fn kind(&self) -> PedsKind {
        let has = |c| self.0.contains(&c);
        if !has(Color::Black) {
            PedsKind::Efficient
        } else if !has(Color::White) {
            PedsKind::Trivial
        } else {
            PedsKind::Proper
        }
    }

    /// Per-vertex letters `B`/`Y`/`W` in vertex order.
    pub fn letters(&self) -> String {
        self.0.iter().map(|c| c.letter()).collect()
    }

    pub fn from_letters(s: &str) -> Option<Self> {
        s.chars()
            .map(|ch| match ch {
                'B' => Some(Color::Black),
                'Y' => Some(Color::Yellow),
                'W' => Some(Color::White),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(Self)
    }

    /// Checks the three local conditions: white is independent, whites see
    /// only yellow, and among non-white vertices yellow has exactly one
    /// non-white neighbor while black has at least two.
    pub fn is_valid(&self, g: &Graph) -> bool {
        if self.0.len() != g.n() {
            return false;
        }
        (0..g.n()).all(|v| {
            let non_white = g.neighbors(v).filter(|&u| self.0[u] != Color::White).count();
            match self.0[v] {
                Color::White => g.neighbors(v).all(|u| self.0[u] == Color::Yellow),
                Color::Yellow => non_white == 1,
                Color::Black => non_white >= 2,
            }
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DominationError {
    #[error("edge set is not a perfect edge dominating set")]
    NotPeds,
    #[error("edge set belongs to a graph with {got} edges, expected {expected}")]
    WrongGraph { expected: usize, got: usize },
}

/// Outcome of [`verify_peds`]: validity plus, for every edge `e`, the number
/// of members of `P` in its closed edge neighborhood `N'[e]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominationCheck {
    pub valid: bool,
    pub counts: Vec<usize>,
}

impl DominationCheck {
    /// Edges whose count is not exactly one (the failures for an EEDS check;
    /// for a PEDS check only non-members matter).
    pub fn violations(&self, p: &EdgeSet, members_too: bool) -> Vec<usize> {
        (0..self.counts.len()).filter(|&e| (members_too || !p.contains(e)) && self.counts[e] != 1).collect()
    }
}

fn p_degrees(g: &Graph, p: &EdgeSet) -> Vec<usize> {
    let mut deg = vec![0; g.n()];
    for id in p.iter() {
        let e = g.edge(id);
        deg[e.u] += 1;
        deg[e.v] += 1;
    }
    deg
}

fn domination_counts(g: &Graph, p: &EdgeSet) -> Vec<usize> {
    let deg = p_degrees(g, p);
    g.edges().iter().enumerate().map(|(id, e)| deg[e.u] + deg[e.v] - usize::from(p.contains(id))).collect()
}

/// Every edge outside `p` is dominated by exactly one member of `p`.
pub fn verify_peds(g: &Graph, p: &EdgeSet) -> DominationCheck {
    assert_eq!(p.universe(), g.m(), "edge set built for another graph");
    let counts = domination_counts(g, p);
    let valid = (0..g.m()).all(|e| p.contains(e) || counts[e] == 1);
    DominationCheck { valid, counts }
}

/// Every edge, members included, is dominated by exactly one member of `p`.
pub fn verify_eeds(g: &Graph, p: &EdgeSet) -> bool {
    assert_eq!(p.universe(), g.m(), "edge set built for another graph");
    domination_counts(g, p).iter().all(|&c| c == 1)
}

/// Labels vertices by their number of incident `p` edges: 0 white, 1 yellow,
/// 2 or more black.
pub fn coloring_from_peds(g: &Graph, p: &EdgeSet) -> Result<Coloring, DominationError> {
    if p.universe() != g.m() {
        return Err(DominationError::WrongGraph { expected: g.m(), got: p.universe() });
    }
    if !verify_peds(g, p).valid {
        return Err(DominationError::NotPeds);
    }
    Ok(coloring_by_degree(g, p))
}

fn coloring_by_degree(g: &Graph, p: &EdgeSet) -> Coloring {
    Coloring(
        p_degrees(g, p)
            .into_iter()
            .map(|d| match d {
                0 => Color::White,
                1 => Color::Yellow,
                _ => Color::Black,
            })
            .collect(),
    )
}

/// Reconstructs the PEDS whose white set is exactly `white`, if one exists.
///
/// `P` is taken as every edge with both endpoints outside `white`; yellow and
/// black follow from degrees in that subgraph. Returns `None` when the white
/// set is not independent, a white vertex has a non-yellow neighbor, or some
/// non-white vertex is left without a `P` edge.
pub fn peds_from_white_set(g: &Graph, white: &[Vertex]) -> Option<(EdgeSet, Coloring)> {
    let mut is_white = vec![false; g.n()];
    for &w in white {
        is_white[w] = true;
    }
    peds_from_white_mask(g, &is_white)
}

/// [`peds_from_white_set`] on a membership mask.
pub fn peds_from_white_mask(g: &Graph, is_white: &[bool]) -> Option<(EdgeSet, Coloring)> {
    debug_assert_eq!(is_white.len(), g.n());
    let mut deg = vec![0usize; g.n()];
    let mut p = EdgeSet::empty(g);
    for (id, e) in g.edges().iter().enumerate() {
        match (is_white[e.u], is_white[e.v]) {
            (true, true) => return None,
            (false, false) => {
                deg[e.u] += 1;
                deg[e.v] += 1;
                p.insert(g, id);
            }
            _ => {}
        }
    }
    let mut colors = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        colors.push(if is_white[v] {
            Color::White
        } else {
            match deg[v] {
                0 => return None,
                1 => Color::Yellow,
                _ => Color::Black,
            }
        });
    }
    for (v, _) in is_white.iter().enumerate().filter(|(_, &w)| w) {
        if g.neighbors(v).any(|u| colors[u] != Color::Yellow) {
            return None;
        }
    }
    Some((p, Coloring(colors)))
}

/// A PEDS whose coloring has a single black vertex and the given yellow set.
#[derive(Clone, Debug, PartialEq)]
pub struct SingleBlack {
    pub black: Vertex,
    pub peds: EdgeSet,
    pub coloring: Coloring,
}

/// Looks for a PEDS with coloring `({b}, yellow, V - yellow - {b})`.
///
/// Requires `G[yellow]` to have maximum degree 1 with at least one isolated
/// vertex and `V - yellow` to be independent. The black vertex must be a
/// common neighbor of every isolated yellow and adjacent to no matched yellow;
/// among those candidates the one with the lightest incident edges wins, ties
/// to the smaller id.
pub fn single_black_completion(g: &Graph, yellow: &[Vertex]) -> Option<SingleBlack> {
    let n = g.n();
    let mut in_y = vec![false; n];
    for &y in yellow {
        in_y[y] = true;
    }

    let mut isolated = Vec::new();
    let mut matched = Vec::new();
    for v in (0..n).filter(|&v| in_y[v]) {
        match g.neighbors(v).filter(|&u| in_y[u]).count() {
            0 => isolated.push(v),
            1 => matched.push(v),
            _ => return None,
        }
    }
    if isolated.is_empty() {
        return None;
    }
    let outside_independent = g.edges().iter().all(|e| in_y[e.u] || in_y[e.v]);
    if !outside_independent {
        return None;
    }

    // Candidates: common neighbors of all isolated yellows, minus neighbors
    // of matched yellows.
    let mut hits = vec![0usize; n];
    for &s in &isolated {
        for u in g.neighbors(s) {
            hits[u] += 1;
        }
    }
    let mut excluded = vec![false; n];
    for &y in &matched {
        for u in g.neighbors(y) {
            excluded[u] = true;
        }
    }
    let incident_weight = |b: Vertex| -> f64 { g.incident(b).iter().map(|&(_, id)| g.weight(id)).sum() };
    let black = (0..n)
        .filter(|&b| hits[b] == isolated.len() && !excluded[b] && !in_y[b])
        .map(|b| (incident_weight(b), b))
        .min_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)))?
        .1;

    let mut is_white: Vec<bool> = in_y.iter().map(|&y| !y).collect();
    is_white[black] = false;
    let (peds, coloring) = peds_from_white_mask(g, &is_white)?;
    Some(SingleBlack { black, peds, coloring })
}

/// Total weight of `p`.
pub fn weight(g: &Graph, p: &EdgeSet) -> f64 {
    p.recompute_weight(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::named;

    fn ids(g: &Graph, pairs: &[(usize, usize)]) -> EdgeSet {
        EdgeSet::from_ids(g, pairs.iter().map(|&(u, v)| g.edge_between(u - 1, v - 1).unwrap())).unwrap()
    }

    #[test]
    fn shield_eeds_checks() {
        let g = named::shield();
        let p = ids(&g, &[(2, 4), (6, 8), (10, 12)]);
        assert!(verify_peds(&g, &p).valid);
        assert!(verify_eeds(&g, &p));
        let c = coloring_from_peds(&g, &p).unwrap();
        assert_eq!(c.white(), vec![0, 2, 4, 6, 8, 10]);
        assert_eq!(c.yellow(), vec![1, 3, 5, 7, 9, 11]);
        assert_eq!(c.kind(), PedsKind::Efficient);
        assert_eq!(weight(&g, &p), 3.0);
    }

    #[test]
    fn shield_single_edge_is_not_peds() {
        let g = named::shield();
        let p = ids(&g, &[(1, 2)]);
        let check = verify_peds(&g, &p);
        assert!(!check.valid);
        // v6v7 sits far from v1v2 and is not dominated at all.
        let far = g.edge_between(5, 6).unwrap();
        assert_eq!(check.counts[far], 0);
        assert_eq!(coloring_from_peds(&g, &p), Err(DominationError::NotPeds));
    }

    #[test]
    fn trivial_set_always_peds() {
        for g in [named::shield(), named::complete(4), named::petersen()] {
            assert!(verify_peds(&g, &EdgeSet::all(&g)).valid);
        }
        let k4 = named::complete(4);
        let c = coloring_from_peds(&k4, &EdgeSet::all(&k4)).unwrap();
        assert_eq!(c.letters(), "BBBB");
        assert_eq!(c.kind(), PedsKind::Trivial);
    }

    #[test]
    fn k2_both_yellow() {
        let g = named::complete(2);
        let c = coloring_from_peds(&g, &EdgeSet::all(&g)).unwrap();
        assert_eq!(c.letters(), "YY");
    }

    #[test]
    fn c4_has_no_eeds() {
        let g = named::cycle(4);
        for mask in 0u32..16 {
            let p = EdgeSet::from_ids(&g, (0..4).filter(|i| mask >> i & 1 == 1)).unwrap();
            assert!(!verify_eeds(&g, &p), "mask {mask:04b}");
        }
    }

    #[test]
    fn k3_single_edge_is_eeds() {
        let g = named::complete(3);
        assert!(verify_eeds(&g, &EdgeSet::from_ids(&g, [0]).unwrap()));
    }

    #[test]
    fn white_set_reconstruction() {
        let g = named::shield();
        let (p, c) = peds_from_white_set(&g, &[0, 2, 4, 6, 8, 10]).unwrap();
        assert_eq!(p, ids(&g, &[(2, 4), (6, 8), (10, 12)]));
        assert_eq!(c.kind(), PedsKind::Efficient);
        assert!(peds_from_white_set(&named::complete(3), &[0, 1, 2]).is_none());
        // v4 white needs its neighbor v2 yellow, but v2 keeps two non-white
        // neighbors (v1, v3) and turns black.
        assert!(peds_from_white_set(&g, &[3]).is_none());
    }

    #[test]
    fn single_black_on_stars_and_paths() {
        let star = named::star(4);
        let sb = single_black_completion(&star, &[1, 2, 3, 4]).unwrap();
        assert_eq!(sb.black, 0);
        assert_eq!(sb.peds, EdgeSet::all(&star));

        let p3 = named::path(3);
        let sb = single_black_completion(&p3, &[0, 2]).unwrap();
        assert_eq!(sb.black, 1);
        assert_eq!(sb.peds.len(), 2);
    }

    #[test]
    fn single_black_picks_lightest_candidate() {
        // Y = {0, 1}, both isolated in G[Y]; 2 and 3 are common neighbors
        // and V - Y = {2, 3} is independent. Incident sums: 10 vs 3.
        let g = Graph::new(4, [(0, 2, 5.0), (1, 2, 5.0), (0, 3, 1.0), (1, 3, 2.0)]).unwrap();
        let sb = single_black_completion(&g, &[0, 1]).unwrap();
        assert_eq!(sb.black, 3);
        assert_eq!(sb.peds.weight(), 3.0);
        assert_eq!(sb.coloring.letters(), "YYWB");
    }

    #[test]
    fn single_black_star_with_pendant() {
        // Claw 0-{1,2,3} plus pendant 4 on leaf 1, leaves yellow.
        let g = Graph::new(5, [(0, 1, 2.0), (0, 2, 3.0), (0, 3, 4.0), (1, 4, 7.0)]).unwrap();
        let sb = single_black_completion(&g, &[1, 2, 3]).unwrap();
        assert_eq!(sb.black, 0);
        assert_eq!(sb.peds.weight(), 9.0);
        assert_eq!(sb.coloring.letters(), "BYYYW");
    }

    #[test]
    fn single_black_rejections() {
        let p3 = named::path(3);
        // No isolated yellow vertex.
        assert!(single_black_completion(&p3, &[0, 1]).is_none());
        // Y = {0}: V - Y = {1, 2} is not independent.
        assert!(single_black_completion(&p3, &[0]).is_none());
        // Yellow with two yellow neighbors.
        assert!(single_black_completion(&p3, &[0, 1, 2]).is_none());
    }

    #[test]
    fn letters_round_trip() {
        let c = Coloring::from_letters("BYWY").unwrap();
        assert_eq!(c.letters(), "BYWY");
        assert!(Coloring::from_letters("BX").is_none());
    }
}
