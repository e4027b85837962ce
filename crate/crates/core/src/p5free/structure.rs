use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, Vertex};

/// A dominating clique or a dominating induced P3.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum DominatingStructure {
    Kp(Vec<Vertex>),
    InducedP3([Vertex; 3]),
}

impl DominatingStructure {
    pub fn vertices(&self) -> Vec<Vertex> {
        match self {
            DominatingStructure::Kp(vs) => vs.clone(),
            DominatingStructure::InducedP3(p) => p.to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Domination {
    Structure(DominatingStructure),
    P5([Vertex; 5]),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("vertex {vertex} has eccentricity {ecc:?}, not at most 2")]
    NotPrincipal { vertex: Vertex, ecc: Option<usize> },
}

/// Shrinks `N[v]` to a minimal dominating set containing `v` and classifies it.
///
/// Neighbors of `v` are dropped in increasing order whenever every vertex at
/// distance 2 keeps another dominator. A surviving set of four or more that
/// is not a clique yields an induced P5 among three of its members, `v` and
/// their private neighbors.
pub fn dominating_structure(g: &Graph, v: Vertex) -> Result<Domination, StructureError> {
    let ecc = g.eccentricity(v);
    if !matches!(ecc, Some(e) if e <= 2) {
        return Err(StructureError::NotPrincipal { vertex: v, ecc });
    }
    let n = g.n();
    let mut in_closed = vec![false; n];
    in_closed[v] = true;
    for u in g.neighbors(v) {
        in_closed[u] = true;
    }
    // Dominators in X - {v} of each vertex at distance 2.
    let mut count = vec![0usize; n];
    for u in g.neighbors(v) {
        for x in g.neighbors(u) {
            if !in_closed[x] {
                count[x] += 1;
            }
        }
    }
    let mut kept: Vec<(Vertex, Vertex)> = Vec::new();
    for u in g.neighbors(v) {
        let private = g.neighbors(u).find(|&x| !in_closed[x] && count[x] == 1);
        match private {
            Some(x) => kept.push((u, x)),
            None => {
                for x in g.neighbors(u) {
                    if !in_closed[x] {
                        count[x] -= 1;
                    }
                }
            }
        }
    }

    let mut x: Vec<Vertex> = std::iter::once(v).chain(kept.iter().map(|&(u, _)| u)).collect();
    x.sort_unstable();
    let structure = match kept.len() {
        0 | 1 => DominatingStructure::Kp(x),
        2 => {
            let (a, b) = (kept[0].0, kept[1].0);
            if g.has_edge(a, b) {
                DominatingStructure::Kp(x)
            } else {
                DominatingStructure::InducedP3([a, v, b])
            }
        }
        _ if g.is_clique(&x) => DominatingStructure::Kp(x),
        _ => return Ok(Domination::P5(p5_from_private(g, v, &kept))),
    };
    Ok(Domination::Structure(structure))
}

/// Picks non-adjacent `v1, v3` and any third member `v2` of the kept
/// neighbors, then searches the seven vertices `v, v_i, w_i` for an induced
/// P5.
fn p5_from_private(g: &Graph, v: Vertex, kept: &[(Vertex, Vertex)]) -> [Vertex; 5] {
    let (i, j) = (0..kept.len())
        .flat_map(|i| (i + 1..kept.len()).map(move |j| (i, j)))
        .find(|&(i, j)| !g.has_edge(kept[i].0, kept[j].0))
        .expect("X is not a clique");
    let k = (0..kept.len()).find(|&k| k != i && k != j).unwrap();
    let mut pool = vec![v];
    for t in [i, k, j] {
        pool.push(kept[t].0);
        pool.push(kept[t].1);
    }
    induced_p5_within(g, &pool)
        .or_else(|| g.find_induced_p5())
        .expect("a minimal dominating set of four or more that is not a clique forces an induced P5")
}

/// First ordered induced P5 on vertices of `pool`.
pub(crate) fn induced_p5_within(g: &Graph, pool: &[Vertex]) -> Option<[Vertex; 5]> {
    fn extend(g: &Graph, pool: &[Vertex], path: &mut Vec<Vertex>) -> bool {
        if path.len() == 5 {
            return path[0] < path[4] && g.is_induced_path(path);
        }
        let last = *path.last().unwrap();
        for &c in pool {
            if path.contains(&c) || !g.has_edge(last, c) {
                continue;
            }
            if path[..path.len() - 1].iter().any(|&p| g.has_edge(p, c)) {
                continue;
            }
            path.push(c);
            if extend(g, pool, path) {
                return true;
            }
            path.pop();
        }
        false
    }
    let mut path = Vec::with_capacity(5);
    for &s in pool {
        path.clear();
        path.push(s);
        if extend(g, pool, &mut path) {
            return Some([path[0], path[1], path[2], path[3], path[4]]);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::named::*;

    #[test]
    fn star_shrinks_to_center() {
        assert_eq!(dominating_structure(&star(4), 0).unwrap(), Domination::Structure(DominatingStructure::Kp(vec![0])));
    }

    #[test]
    fn path_gives_k2() {
        assert_eq!(
            dominating_structure(&path(3), 0).unwrap(),
            Domination::Structure(DominatingStructure::Kp(vec![0, 1]))
        );
        assert_eq!(dominating_structure(&path(3), 1).unwrap(), Domination::Structure(DominatingStructure::Kp(vec![1])));
    }

    #[test]
    fn k4_with_pendants() {
        let mut edges: Vec<(usize, usize)> = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        edges.extend((0..4).map(|i| (i, i + 4)));
        let g = Graph::unweighted(8, edges).unwrap();
        assert_eq!(
            dominating_structure(&g, 0).unwrap(),
            Domination::Structure(DominatingStructure::Kp(vec![0, 1, 2, 3]))
        );
    }

    #[test]
    fn c5_gives_induced_p3() {
        assert_eq!(
            dominating_structure(&cycle(5), 0).unwrap(),
            Domination::Structure(DominatingStructure::InducedP3([1, 0, 4]))
        );
    }

    #[test]
    fn spider_gives_p5() {
        // Center 0 with three legs of length 2: 1-4, 2-5, 3-6.
        let g = Graph::unweighted(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]).unwrap();
        match dominating_structure(&g, 0).unwrap() {
            Domination::P5(p) => assert!(g.is_induced_path(&p)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rejects_non_principal() {
        assert_eq!(
            dominating_structure(&path(5), 0).unwrap_err(),
            StructureError::NotPrincipal { vertex: 0, ecc: Some(4) }
        );
    }
}
