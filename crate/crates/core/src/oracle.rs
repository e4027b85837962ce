//! Exhaustive reference solvers for small graphs.
//!
//! PEDS are enumerated through their white sets: every PEDS is determined by
//! its independent set of white vertices, so walking all independent sets and
//! reconstructing finds each PEDS exactly once.

use thiserror::Error;

use crate::domination::{peds_from_white_mask, verify_eeds, verify_peds, PedsKind};
use crate::graph::{EdgeSet, Graph};

/// Default cap on the number of vertices.
pub const DEFAULT_LIMIT: usize = 24;
/// Cap on the number of edges for raw edge-subset enumeration.
pub const EDGE_SUBSET_LIMIT: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {n} vertices, oracle limit is {limit}")]
    TooManyVertices { n: usize, limit: usize },
    #[error("graph has {m} edges, edge-subset limit is {limit}")]
    TooManyEdges { m: usize, limit: usize },
}

fn check_n(g: &Graph, limit: usize) -> Result<(), OracleError> {
    if g.n() > limit {
        Err(OracleError::TooManyVertices { n: g.n(), limit })
    } else {
        Ok(())
    }
}

/// Calls `visit` with the membership mask of every independent set of `g`.
fn for_each_independent_set(g: &Graph, mut visit: impl FnMut(&[bool])) {
    fn rec(g: &Graph, v: usize, mask: &mut Vec<bool>, blocked: &mut Vec<u32>, visit: &mut dyn FnMut(&[bool])) {
        if v == g.n() {
            visit(mask);
            return;
        }
        rec(g, v + 1, mask, blocked, visit);
        if blocked[v] == 0 {
            mask[v] = true;
            for u in g.neighbors(v) {
                blocked[u] += 1;
            }
            rec(g, v + 1, mask, blocked, visit);
            for u in g.neighbors(v) {
                blocked[u] -= 1;
            }
            mask[v] = false;
        }
    }
    let mut mask = vec![false; g.n()];
    let mut blocked = vec![0u32; g.n()];
    rec(g, 0, &mut mask, &mut blocked, &mut visit);
}

/// All PEDS of `g` with their kinds, sorted by cardinality then edge ids.
pub fn enumerate_peds(g: &Graph, limit_n: usize) -> Result<Vec<(EdgeSet, PedsKind)>, OracleError> {
    check_n(g, limit_n)?;
    let mut out = Vec::new();
    for_each_independent_set(g, |mask| {
        if let Some((p, coloring)) = peds_from_white_mask(g, mask) {
            out.push((p, coloring.kind()));
        }
    });
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out.dedup_by(|a, b| a.0 == b.0);
    Ok(out)
}

/// All EEDS of `g`, sorted like [`enumerate_peds`].
pub fn enumerate_eeds(g: &Graph, limit_n: usize) -> Result<Vec<EdgeSet>, OracleError> {
    Ok(enumerate_peds(g, limit_n)?.into_iter().filter(|(p, _)| verify_eeds(g, p)).map(|(p, _)| p).collect())
}

/// A minimum-weight PEDS; ties go to fewer edges, then lexicographic ids.
pub fn min_weight_peds_bruteforce(g: &Graph) -> Result<(EdgeSet, f64), OracleError> {
    check_n(g, DEFAULT_LIMIT)?;
    let mut best = EdgeSet::all(g);
    for_each_independent_set(g, |mask| {
        if let Some((p, _)) = peds_from_white_mask(g, mask) {
            if p.better_than(&best) {
                best = p;
            }
        }
    });
    let w = best.weight();
    Ok((best, w))
}

/// A minimum-weight EEDS, or `None` when the graph has none.
pub fn min_weight_eeds_bruteforce(g: &Graph) -> Result<Option<(EdgeSet, f64)>, OracleError> {
    check_n(g, DEFAULT_LIMIT)?;
    let mut best: Option<EdgeSet> = None;
    for_each_independent_set(g, |mask| {
        if let Some((p, coloring)) = peds_from_white_mask(g, mask) {
            let efficient = coloring.black().is_empty() && verify_eeds(g, &p);
            if efficient && best.as_ref().is_none_or(|b| p.better_than(b)) {
                best = Some(p);
            }
        }
    });
    Ok(best.map(|p| {
        let w = p.weight();
        (p, w)
    }))
}

/// All PEDS found by testing every subset of `E(g)` directly. Independent of
/// the white-set reconstruction; used to cross-check it.
pub fn enumerate_peds_by_edges(g: &Graph) -> Result<Vec<EdgeSet>, OracleError> {
    if g.m() > EDGE_SUBSET_LIMIT {
        return Err(OracleError::TooManyEdges { m: g.m(), limit: EDGE_SUBSET_LIMIT });
    }
    let mut out = Vec::new();
    for bits in 0u32..(1u32 << g.m()) {
        let p = EdgeSet::from_ids(g, (0..g.m()).filter(|&i| bits >> i & 1 == 1)).unwrap();
        if verify_peds(g, &p).valid {
            out.push(p);
        }
    }
    out.sort();
    Ok(out)
}
