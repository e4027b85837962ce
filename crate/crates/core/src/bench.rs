//! Doubling-size timing suites for the linear-time solvers.

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::cubic::solve_cubic_clawfree;
use crate::generators::{inflate, random_cubic, random_weights, sparse_split, GenError};
use crate::graph::Graph;
use crate::p5free::{solve_p5free_counted, SolveOutcome};
use crate::Counters;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    CubicClawFree,
    Split,
}

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("unknown suite {0:?}; expected cubic-claw-free or split")]
    UnknownSuite(String),
    #[error(transparent)]
    Generator(#[from] GenError),
    #[error("solver failed on n = {0}")]
    Solver(usize),
}

impl std::str::FromStr for Suite {
    type Err = BenchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cubic-claw-free" => Ok(Suite::CubicClawFree),
            "split" | "p5-free" => Ok(Suite::Split),
            other => Err(BenchError::UnknownSuite(other.to_string())),
        }
    }
}

impl Suite {
    /// `3 * 2^5 ..= 3 * 2^12` for inflations, `2^7 ..= 2^13` for split graphs.
    pub fn default_sizes(self) -> Vec<usize> {
        match self {
            Suite::CubicClawFree => (5..=12).map(|e| 3 << e).collect(),
            Suite::Split => (7..=13).map(|e| 1 << e).collect(),
        }
    }

    /// Weighted instance with about `n` vertices.
    pub fn instance(self, n: usize, seed: u64) -> Result<Graph, BenchError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ n as u64);
        let g = match self {
            Suite::CubicClawFree => {
                let base = (n / 3).max(4) & !1;
                inflate(&random_cubic(base, &mut rng)?)?
            }
            Suite::Split => sparse_split(n, 2, &mut rng)?,
        };
        Ok(random_weights(&g, -10.0, 10.0, &mut rng))
    }

    fn solve(self, g: &Graph) -> Result<Counters, BenchError> {
        match self {
            Suite::CubicClawFree => solve_cubic_clawfree(g).map(|s| s.counters).map_err(|_| BenchError::Solver(g.n())),
            Suite::Split => {
                let mut c = Counters::default();
                match solve_p5free_counted(g, &mut c) {
                    SolveOutcome::Optimal { .. } => Ok(c),
                    SolveOutcome::P5Certificate(_) => Err(BenchError::Solver(g.n())),
                }
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    pub runs_ms: Vec<f64>,
    pub median_ms: f64,
    pub counters: Counters,
    /// Median time over the previous row's median.
    pub ratio: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchTable {
    pub suite: Suite,
    pub seed: u64,
    pub rows: Vec<BenchRow>,
}

impl BenchTable {
    pub fn max_ratio(&self) -> Option<f64> {
        self.rows.iter().filter_map(|r| r.ratio).reduce(f64::max)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{:>8} {:>8} {:>12} {:>8} {:>12}\n", "n", "m", "median_ms", "ratio", "branchings");
        for r in &self.rows {
            let ratio = r.ratio.map_or("-".to_string(), |x| format!("{x:.2}"));
            s += &format!("{:>8} {:>8} {:>12.3} {:>8} {:>12}\n", r.n, r.m, r.median_ms, ratio, r.counters.branchings);
        }
        s
    }
}

pub fn median(xs: &[f64]) -> f64 {
    let mut v = xs.to_vec();
    v.sort_by(f64::total_cmp);
    let k = v.len() / 2;
    if v.len() % 2 == 1 {
        v[k]
    } else {
        (v[k - 1] + v[k]) / 2.0
    }
}

/// Short solves are repeated until a run lasts this long.
const MIN_RUN: Duration = Duration::from_millis(5);

/// Times `runs` solves per size and records growth between consecutive sizes.
pub fn run_suite(suite: Suite, sizes: &[usize], seed: u64, runs: usize) -> Result<BenchTable, BenchError> {
    let mut rows: Vec<BenchRow> = Vec::new();
    for &n in sizes {
        let g = suite.instance(n, seed)?;
        let mut times = Vec::with_capacity(runs);
        let mut counters = Counters::default();
        for _ in 0..runs.max(1) {
            let start = Instant::now();
            let mut reps = 0u32;
            while reps == 0 || start.elapsed() < MIN_RUN {
                counters = suite.solve(&g)?;
                reps += 1;
            }
            times.push(start.elapsed().as_secs_f64() * 1e3 / f64::from(reps));
        }
        let median_ms = median(&times);
        let ratio = rows.last().map(|prev| median_ms / prev.median_ms.max(1e-6));
        rows.push(BenchRow { n: g.n(), m: g.m(), runs_ms: times, median_ms, counters, ratio });
    }
    Ok(BenchTable { suite, seed, rows })
}
