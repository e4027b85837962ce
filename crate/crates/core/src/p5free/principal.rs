use serde::Serialize;

use crate::graph::{Bfs, Graph, Vertex};

/// Outcome of one eccentricity test from a vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum TestResult {
    Disconnected,
    /// Eccentricity at least 4; the first five vertices of a shortest path.
    AtLeast4([Vertex; 5]),
    /// Eccentricity exactly 3; an induced P4 starting at the tested vertex.
    Exactly3([Vertex; 4]),
    /// Eccentricity at most 2: the vertex is principal.
    AtMost2,
}

pub(crate) fn test_with_bfs(g: &Graph, v: Vertex) -> (TestResult, Bfs) {
    let bfs = g.bfs(v);
    let result = match bfs.eccentricity() {
        None => TestResult::Disconnected,
        Some(e) if e >= 4 => {
            let p = bfs.path_to(bfs.farthest()).unwrap();
            TestResult::AtLeast4([p[0], p[1], p[2], p[3], p[4]])
        }
        Some(3) => {
            let p = bfs.path_to(bfs.farthest()).unwrap();
            TestResult::Exactly3([p[0], p[1], p[2], p[3]])
        }
        Some(_) => TestResult::AtMost2,
    };
    (result, bfs)
}

/// One BFS from `v`, classified by eccentricity.
pub fn test_vertex(g: &Graph, v: Vertex) -> TestResult {
    test_with_bfs(g, v).0
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Principal {
    /// A vertex of eccentricity at most 2.
    Vertex(Vertex),
    P5([Vertex; 5]),
    Disconnected,
}

/// Result of [`principal_vertex`] with the number of eccentricity tests used.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrincipalSearch {
    pub result: Principal,
    pub tests: usize,
}

/// Finds a principal vertex or an induced P5 with at most three tests.
///
/// Tests the smallest vertex `u`. On eccentricity 3 with induced path
/// `u, v, w, z`, picks `v1` in `N(u) & N(w)` with the most neighbors outside
/// `N[u] | N[w] | N[z]`, then tests `v1` and `w`. If both have eccentricity 3
/// an induced P5 is extracted from the two BFS trees.
pub fn principal_vertex(g: &Graph) -> PrincipalSearch {
    let mut tests = 0;
    let mut run = |v: Vertex| {
        tests += 1;
        test_with_bfs(g, v)
    };
    let done = |result: Principal, tests: usize| PrincipalSearch { result, tests };

    if g.n() == 0 {
        return done(Principal::Disconnected, 0);
    }
    let u = 0;
    let path = match run(u).0 {
        TestResult::Disconnected => return done(Principal::Disconnected, tests),
        TestResult::AtLeast4(p) => return done(Principal::P5(p), tests),
        TestResult::AtMost2 => return done(Principal::Vertex(u), tests),
        TestResult::Exactly3(p) => p,
    };
    let (w, z) = (path[2], path[3]);

    let mut outside = vec![true; g.n()];
    for c in [u, w, z] {
        outside[c] = false;
        for x in g.neighbors(c) {
            outside[x] = false;
        }
    }
    let a_set = g.common_neighbors(u, w);
    let v1 = *a_set
        .iter()
        .max_by_key(|&&a| (g.neighbors(a).filter(|&y| outside[y]).count(), std::cmp::Reverse(a)))
        .expect("w is at distance 2 from u");

    let (t1, bfs_v1) = run(v1);
    match t1 {
        TestResult::AtLeast4(p) => return done(Principal::P5(p), tests),
        TestResult::AtMost2 => return done(Principal::Vertex(v1), tests),
        _ => {}
    }
    let (tw, bfs_w) = run(w);
    match tw {
        TestResult::AtLeast4(p) => return done(Principal::P5(p), tests),
        TestResult::AtMost2 => return done(Principal::Vertex(w), tests),
        _ => {}
    }

    let p5 = extract_p5(g, [u, v1, w, z], &outside, &bfs_v1, &bfs_w)
        .or_else(|| g.find_induced_p5())
        .expect("two vertices of eccentricity 3 force an induced P5");
    done(Principal::P5(p5), tests)
}

/// The case analysis for `dist(v1, x) = 3` with `x` at distance 3 or 2 from
/// `w`. Candidates are checked before being returned.
fn extract_p5(
    g: &Graph,
    [u, v1, w, z]: [Vertex; 4],
    outside: &[bool],
    bfs_v1: &Bfs,
    bfs_w: &Bfs,
) -> Option<[Vertex; 5]> {
    let x = bfs_v1.farthest();
    let mut candidates: Vec<[Vertex; 5]> = Vec::new();
    match bfs_w.dist[x] {
        Some(3) => {
            let p = bfs_v1.path_to(x)?;
            let (a, b) = (p[1], p[2]);
            candidates.extend([
                [x, b, u, v1, w],
                [x, b, z, w, v1],
                [w, v1, a, b, x],
                [x, b, a, v1, u],
                [x, b, a, w, z],
            ]);
        }
        Some(2) => {
            let p = bfs_w.path_to(x)?;
            let a = p[1];
            candidates.push([u, v1, w, z, x]);
            candidates.push([u, v1, w, a, x]);
            let y = g.neighbors(v1).find(|&y| outside[y] && !g.has_edge(a, y));
            if let Some(y) = y {
                candidates.push([y, v1, u, a, x]);
                candidates.push([x, y, v1, w, z]);
            }
        }
        _ => {}
    }
    candidates.into_iter().find(|c| g.is_induced_path(c))
}
