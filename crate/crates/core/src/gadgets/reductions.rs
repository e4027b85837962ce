//! Desk-scale checks of the two reductions from efficient edge domination on
//! regular graphs: magnification (cubic only) and `3k`-subdivision.

use num_rational::Ratio;
use thiserror::Error;

use super::{magnify, reduction_numbers, subdivide, GadgetMap};
use crate::dim::dim_min_weight;
use crate::domination::{coloring_from_peds, peds_from_white_set, verify_peds};
use crate::graph::{EdgeSet, Graph, Vertex};
use crate::search::min_weight_peds_counted;
use crate::{Color, Counters};

/// Largest source graph the reduction checks accept.
pub const MAGNIFY_LIMIT: usize = 12;
pub const SUBDIVIDE_LIMIT: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("graph is not regular (vertex {vertex} has degree {degree}, vertex 0 has {expected})")]
    NotRegular { vertex: Vertex, degree: usize, expected: usize },
    #[error("regularity {0} is below 3")]
    DegreeTooSmall(usize),
    #[error("graph has {n} vertices, limit is {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error(transparent)]
    Gadget(#[from] super::GadgetError),
}

fn regularity(g: &Graph) -> Result<usize, ReductionError> {
    let r = if g.n() == 0 { 0 } else { g.degree(0) };
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) != r) {
        return Err(ReductionError::NotRegular { vertex: v, degree: g.degree(v), expected: r });
    }
    if r < 3 {
        return Err(ReductionError::DegreeTooSmall(r));
    }
    Ok(r)
}

/// White sets inside one shield for the colorings used by the witness:
/// `v1, v3, .., v11` for a white source vertex, and for a yellow one the
/// proper coloring whose black contact is the given contact index.
fn shield_whites(source_white: bool, black_contact: usize) -> &'static [Vertex] {
    if source_white {
        return &[0, 2, 4, 6, 8, 10];
    }
    match black_contact {
        // v3 black: P = {v1v2, v2v3, v3v4, v4v5, v2v4, v7v8, v10v11}
        0 => &[5, 8, 11],
        // v7 black: P = {v2v3, v5v6, v6v7, v7v8, v8v9, v6v8, v11v12}
        1 => &[0, 3, 9],
        // v11 black: P = {v3v4, v6v7, v9v10, v10v11, v11v12, v12v1, v10v12}
        _ => &[1, 4, 7],
    }
}

/// The PEDS of `M(G)` built from an EEDS `d` of the cubic graph `g`: white
/// source vertices get the 3-edge shield coloring, yellow ones a 7-edge
/// coloring whose black contact faces their partner, and the edges of `d`
/// are kept. Returns the set and its edge count inside each shield.
pub fn magnify_witness(g: &Graph, m: &Graph, map: &GadgetMap, d: &EdgeSet) -> Option<(EdgeSet, Vec<usize>)> {
    let coloring = coloring_from_peds(g, d).ok()?;
    let mut white = Vec::new();
    for v in 0..g.n() {
        let is_white = coloring.get(v) == Color::White;
        let facing = if is_white {
            0
        } else {
            let partner = g.incident(v).iter().find(|&&(_, id)| d.contains(id)).map(|&(u, _)| u)?;
            g.neighbors(v).position(|u| u == partner)?
        };
        white.extend(shield_whites(is_white, facing).iter().map(|&x| map.vertices[v][x]));
    }
    let (p, _) = peds_from_white_set(m, &white)?;
    let counts = (0..g.n())
        .map(|v| {
            let base = map.vertices[v][0];
            p.iter()
                .filter(|&id| {
                    let e = m.edge(id);
                    (base..base + 12).contains(&e.u) && (base..base + 12).contains(&e.v)
                })
                .count()
        })
        .collect();
    Some((p, counts))
}

#[derive(Clone, Debug)]
pub struct MagnifyReport {
    pub n: usize,
    pub threshold: Ratio<i64>,
    /// A minimum EEDS of the source graph, if any.
    pub eeds: Option<EdgeSet>,
    /// Minimum cardinality of a PEDS of `M(G)`.
    pub min_peds_size: usize,
    pub witness: Option<EdgeSet>,
    /// Witness edges inside each shield.
    pub shield_counts: Vec<usize>,
    /// Whether "EEDS exists" equals "min PEDS of `M(G)` is at most the threshold".
    pub holds: bool,
    pub counters: Counters,
}

/// Compares EEDS existence in the cubic graph `g` with the minimum PEDS size
/// of its magnification against `57n/10`.
pub fn verify_reduction_magnify(g: &Graph) -> Result<MagnifyReport, ReductionError> {
    if g.n() > MAGNIFY_LIMIT {
        return Err(ReductionError::TooLarge { n: g.n(), limit: MAGNIFY_LIMIT });
    }
    let g = g.with_unit_weights();
    let (m, map) = magnify(&g)?;
    let threshold = reduction_numbers(3, g.n() as i64, 0).magnify_threshold;
    let eeds = dim_min_weight(&g).map(|r| r.0);
    let mut counters = Counters::default();
    let (min_p, _) = min_weight_peds_counted(&m, &mut counters);
    let min_peds_size = min_p.len();

    let (witness, shield_counts) = match &eeds {
        Some(d) => match magnify_witness(&g, &m, &map, d) {
            Some((w, c)) => (Some(w), c),
            None => (None, Vec::new()),
        },
        None => (None, Vec::new()),
    };
    let below = Ratio::from_integer(min_peds_size as i64) <= threshold;
    Ok(MagnifyReport {
        n: g.n(),
        threshold,
        holds: eeds.is_some() == below,
        eeds,
        min_peds_size,
        witness,
        shield_counts,
        counters,
    })
}

/// The PEDS of the `3k`-subdivision built from a white/yellow coloring of
/// `g`: a yellow-yellow edge keeps `e_0, e_3, .., e_3k`, a white-yellow edge
/// keeps `e_1, e_4, .., e_{3k-2}` counted from its white end.
pub fn subdivide_witness(s: &Graph, map: &GadgetMap, g: &Graph, yellow: &[bool], k: usize) -> EdgeSet {
    let mut p = EdgeSet::empty(s);
    for (id, e) in g.edges().iter().enumerate() {
        let path = &map.edges[id];
        if yellow[e.u] && yellow[e.v] {
            for j in 0..=k {
                p.insert(s, path[3 * j]);
            }
        } else {
            let from_u = !yellow[e.u];
            for j in 0..k {
                let i = 3 * j + 1;
                p.insert(s, path[if from_u { i } else { 3 * k - i }]);
            }
        }
    }
    p
}

/// A 2-coloring of `g` into independent whites and yellows with exactly one
/// yellow neighbor each, by exhaustive scan. `true` marks yellow.
pub fn white_yellow_coloring(g: &Graph) -> Option<Vec<bool>> {
    assert!(g.n() < 64);
    'masks: for mask in 0u64..(1u64 << g.n()) {
        let yellow: Vec<bool> = (0..g.n()).map(|v| mask >> v & 1 == 1).collect();
        for v in 0..g.n() {
            let yn = g.neighbors(v).filter(|&u| yellow[u]).count();
            let ok = if yellow[v] { yn == 1 } else { yn == g.degree(v) };
            if !ok {
                continue 'masks;
            }
        }
        return Some(yellow);
    }
    None
}

#[derive(Clone, Debug)]
pub struct SubdivideReport {
    pub r: usize,
    pub k: usize,
    pub bound: Ratio<i64>,
    pub min_peds_size: usize,
    /// (i) the subdivision has a PEDS of exactly the bound size.
    pub bound_attained: bool,
    /// (ii) a white/yellow coloring of the source graph exists.
    pub coloring_exists: bool,
    /// (iii) the source graph has an EEDS.
    pub has_eeds: bool,
    /// PEDS built from the coloring of (ii), when it exists.
    pub witness: Option<EdgeSet>,
    pub witness_valid: bool,
    pub agree: bool,
    pub counters: Counters,
}

/// Checks that the three conditions agree for the `3k`-subdivision of the
/// `r`-regular graph `g`.
pub fn verify_reduction_subdivide(g: &Graph, k: usize) -> Result<SubdivideReport, ReductionError> {
    let r = regularity(g)?;
    if g.n() > SUBDIVIDE_LIMIT {
        return Err(ReductionError::TooLarge { n: g.n(), limit: SUBDIVIDE_LIMIT });
    }
    let g = g.with_unit_weights();
    let (s, map) = subdivide(&g, k);
    let bound = reduction_numbers(r as i64, g.n() as i64, k as i64).subdivision_bound;
    let mut counters = Counters::default();
    let (min_p, _) = min_weight_peds_counted(&s, &mut counters);
    let min_peds_size = min_p.len();
    let bound_attained = Ratio::from_integer(min_peds_size as i64) == bound;
    let coloring = white_yellow_coloring(&g);
    let has_eeds = dim_min_weight(&g).is_some();
    let witness = coloring.as_ref().map(|y| subdivide_witness(&s, &map, &g, y, k));
    let witness_valid =
        witness.as_ref().is_some_and(|p| verify_peds(&s, p).valid && Ratio::from_integer(p.len() as i64) == bound);
    Ok(SubdivideReport {
        r,
        k,
        bound,
        min_peds_size,
        bound_attained,
        coloring_exists: coloring.is_some(),
        has_eeds,
        agree: bound_attained == coloring.is_some() && has_eeds == coloring.is_some(),
        witness,
        witness_valid,
        counters,
    })
}
