//! Structural queries: distances, cycles, components and the few fixed
//! induced patterns the solvers care about (claw, P5, paths).

use std::collections::VecDeque;

use super::{Graph, Vertex};

/// Breadth-first search tree from one source.
#[derive(Clone, Debug)]
pub struct Bfs {
    pub source: Vertex,
    /// `None` for unreachable vertices.
    pub dist: Vec<Option<usize>>,
    pub parent: Vec<Option<Vertex>>,
    /// Vertices in visiting order.
    pub order: Vec<Vertex>,
}

impl Bfs {
    /// Shortest path from the source to `t`, source first.
    pub fn path_to(&self, t: Vertex) -> Option<Vec<Vertex>> {
        self.dist[t]?;
        let mut path = vec![t];
        let mut x = t;
        while let Some(p) = self.parent[x] {
            path.push(p);
            x = p;
        }
        path.reverse();
        Some(path)
    }

    /// Largest finite distance, or `None` if some vertex is unreachable.
    pub fn eccentricity(&self) -> Option<usize> {
        if self.order.len() < self.dist.len() {
            return None;
        }
        self.order.last().and_then(|&v| self.dist[v])
    }

    /// A vertex realizing the eccentricity (the last one visited).
    pub fn farthest(&self) -> Vertex {
        *self.order.last().unwrap_or(&self.source)
    }
}

/// An induced `K_{1,3}`: a center and three pairwise non-adjacent neighbors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Claw {
    pub center: Vertex,
    pub leaves: [Vertex; 3],
}

impl Graph {
    pub fn bfs(&self, source: Vertex) -> Bfs {
        let mut dist = vec![None; self.n()];
        let mut parent = vec![None; self.n()];
        let mut order = Vec::with_capacity(self.n());
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            let dx = dist[x].unwrap();
            for y in self.neighbors(x) {
                if dist[y].is_none() {
                    dist[y] = Some(dx + 1);
                    parent[y] = Some(x);
                    queue.push_back(y);
                }
            }
        }
        Bfs { source, dist, parent, order }
    }

    /// Maximum distance from `v`; `None` (infinite) when the graph is disconnected.
    pub fn eccentricity(&self, v: Vertex) -> Option<usize> {
        self.bfs(v).eccentricity()
    }

    /// Length of a shortest cycle; `None` (infinite) for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n()];
        let mut parent = vec![usize::MAX; self.n()];
        let mut queue = VecDeque::new();
        for s in 0..self.n() {
            dist.fill(usize::MAX);
            dist[s] = 0;
            parent[s] = usize::MAX;
            queue.clear();
            queue.push_back(s);
            'bfs: while let Some(x) = queue.pop_front() {
                if let Some(b) = best {
                    if 2 * dist[x] + 1 >= b {
                        break 'bfs;
                    }
                }
                for y in self.neighbors(x) {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if parent[x] != y {
                        let len = dist[x] + dist[y] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for y in self.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.bfs(0).order.len() == self.n()
    }

    /// Some induced claw, scanning each vertex's neighbor triples.
    pub fn find_claw(&self) -> Option<Claw> {
        for c in 0..self.n() {
            let nb: Vec<Vertex> = self.neighbors(c).collect();
            for i in 0..nb.len() {
                for j in i + 1..nb.len() {
                    if self.has_edge(nb[i], nb[j]) {
                        continue;
                    }
                    for k in j + 1..nb.len() {
                        if !self.has_edge(nb[i], nb[k]) && !self.has_edge(nb[j], nb[k]) {
                            return Some(Claw { center: c, leaves: [nb[i], nb[j], nb[k]] });
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_claw_free(&self) -> bool {
        self.find_claw().is_none()
    }

    /// True iff every component is a path (max degree 2 and acyclic).
    pub fn is_linear_forest(&self) -> bool {
        self.max_degree() <= 2 && self.m() + self.components().len() == self.n()
    }

    /// Whether `vs` (in the given order) induces a path.
    pub fn is_induced_path(&self, vs: &[Vertex]) -> bool {
        for i in 0..vs.len() {
            if vs[i] >= self.n() {
                return false;
            }
            for j in i + 1..vs.len() {
                let adjacent = self.has_edge(vs[i], vs[j]);
                if vs[i] == vs[j] || adjacent != (j == i + 1) {
                    return false;
                }
            }
        }
        true
    }

    /// Whether `vs` is pairwise adjacent.
    pub fn is_clique(&self, vs: &[Vertex]) -> bool {
        (0..vs.len()).all(|i| (i + 1..vs.len()).all(|j| self.has_edge(vs[i], vs[j])))
    }

    /// Some induced P5 `a-b-c-d-e`, found by fixing the middle vertex `c`.
    pub fn find_induced_p5(&self) -> Option<[Vertex; 5]> {
        for c in 0..self.n() {
            let nb: Vec<Vertex> = self.neighbors(c).collect();
            for &b in &nb {
                for &d in &nb {
                    if d <= b || self.has_edge(b, d) {
                        continue;
                    }
                    for a in self.neighbors(b) {
                        if a == c || self.has_edge(a, c) || self.has_edge(a, d) {
                            continue;
                        }
                        for e in self.neighbors(d) {
                            if e == c || e == a || self.has_edge(e, c) || self.has_edge(e, b) || self.has_edge(e, a) {
                                continue;
                            }
                            return Some([a, b, c, d, e]);
                        }
                    }
                }
            }
        }
        None
    }

    /// Whether `v` lies on a triangle.
    pub fn in_triangle(&self, v: Vertex) -> bool {
        let nb = self.incident(v);
        (0..nb.len()).any(|i| (i + 1..nb.len()).any(|j| self.has_edge(nb[i].0, nb[j].0)))
    }

    /// Sorted common neighbors of `u` and `v`.
    pub fn common_neighbors(&self, u: Vertex, v: Vertex) -> Vec<Vertex> {
        let (a, b) = (self.incident(u), self.incident(v));
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i].0);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }
}
