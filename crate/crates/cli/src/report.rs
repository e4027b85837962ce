use peds::cubic::check_class_cubic_clawfree;
use peds::cubic::check_class_extended;
use peds::domination::{coloring_from_peds, verify_peds};
use peds::{Counters, EdgeSet, Graph, PedsKind, Vertex, EPS};
use serde::Serialize;

pub const SCHEMA: u32 = 1;

/// Largest instance on which `solve` reports P5-freeness by search.
const P5_CHECK_LIMIT: usize = 200;

#[derive(Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub args: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance: Option<Instance>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solver: Option<String>,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counters: Option<Counters>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
}

#[derive(Serialize)]
pub struct Instance {
    pub n: usize,
    pub m: usize,
    pub cubic_claw_free: bool,
    pub claw_free_closed_degree_two: bool,
    /// `None` above the size limit of the check.
    pub p5_free: Option<bool>,
}

impl Instance {
    pub fn of(g: &Graph) -> Self {
        Instance {
            n: g.n(),
            m: g.m(),
            cubic_claw_free: check_class_cubic_clawfree(g).is_ok(),
            claw_free_closed_degree_two: check_class_extended(g).is_ok(),
            p5_free: (g.n() <= P5_CHECK_LIMIT).then(|| g.find_induced_p5().is_none()),
        }
    }
}

#[derive(Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Outcome {
    Optimal(Solution),
    P5Certificate { vertices: Vec<Vertex> },
    NotInClass { reason: String, witness: Option<Vec<Vertex>> },
    Verified(Verification),
    Enumeration { count: usize, sets: Vec<Solution> },
    Value(serde_json::Value),
}

#[derive(Serialize)]
pub struct Solution {
    /// Endpoints are 1-based, as in instance files.
    pub edges: Vec<[Vertex; 2]>,
    pub size: usize,
    pub weight: f64,
    pub kind: PedsKind,
}

#[derive(Serialize)]
pub struct Verification {
    pub peds: bool,
    pub eeds: bool,
    pub kind: Option<PedsKind>,
    pub weight: f64,
    /// Edges (1-based endpoints) dominated a wrong number of times.
    pub violations: Vec<[Vertex; 2]>,
}

pub fn edge_pairs(g: &Graph, p: &EdgeSet) -> Vec<[Vertex; 2]> {
    p.iter()
        .map(|id| {
            let e = g.edge(id);
            [e.u + 1, e.v + 1]
        })
        .collect()
}

/// Builds the report entry for a claimed optimum after re-checking it.
pub fn solution(g: &Graph, p: &EdgeSet, weight: f64) -> Solution {
    assert!(verify_peds(g, p).valid, "solver returned an edge set that is not a PEDS");
    let recomputed = p.recompute_weight(g);
    assert!((recomputed - weight).abs() <= EPS, "reported weight {weight} but edges weigh {recomputed}");
    let kind = coloring_from_peds(g, p).expect("checked above").kind();
    Solution { edges: edge_pairs(g, p), size: p.len(), weight: recomputed, kind }
}

/// Certificate entry, 1-based, after re-checking that it induces a P5.
pub fn certificate(g: &Graph, p: [Vertex; 5]) -> Outcome {
    assert!(g.is_induced_path(&p), "solver returned a certificate that is not an induced P5");
    Outcome::P5Certificate { vertices: p.iter().map(|v| v + 1).collect() }
}
