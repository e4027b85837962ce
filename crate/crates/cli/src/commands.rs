use std::io::Write;
use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use peds::bench::{run_suite, Suite};
use peds::cubic::{solve_cubic_clawfree, ClassViolation, CubicError};
use peds::domination::{coloring_from_peds, verify_eeds, verify_peds};
use peds::gadgets::{
    classify_dichotomy, magnify, solve_hfree_bounded, subdivide, verify_reduction_magnify, verify_reduction_subdivide,
    HFreeError,
};
use peds::generators::named::{complete, petersen, prism};
use peds::generators::{inflate, random_cubic, random_split, random_weights};
use peds::oracle::{enumerate_peds, min_weight_peds_bruteforce, DEFAULT_LIMIT};
use peds::p5free::{solve_p5free_counted, SolveOutcome};
use peds::{Counters, EdgeSet, Graph, Vertex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::report::{certificate, solution, Instance, Outcome, Report, Verification, SCHEMA};
use crate::{Class, Command, Family, GadgetKind};

pub const EXIT_ERROR: u8 = 1;
const EXIT_CERTIFICATE: u8 = 2;
const EXIT_NOT_IN_CLASS: u8 = 3;
const EXIT_INVALID: u8 = 4;

pub fn run(cmd: Command) -> Result<ExitCode> {
    match cmd {
        Command::Solve { file, class, h, d, timing } => solve(&file, class, h.as_deref(), d, timing),
        Command::Verify { file, edges, p5 } => verify(&file, edges.as_deref(), p5.as_deref()),
        Command::Enumerate { file, limit } => enumerate(&file, limit),
        Command::Gadget { kind, file, k, check } => gadget(kind, &file, k, check),
        Command::Classify { h, d } => classify(&h, d),
        Command::Gen { family, n, base, k, clique, p, weights, seed, out } => {
            let g = generate(family, n, base.as_deref(), k, clique, p, seed)?;
            let g = match weights {
                Some(range) => {
                    let (lo, hi) = parse_range(&range)?;
                    random_weights(&g, lo, hi, &mut ChaCha8Rng::seed_from_u64(seed.wrapping_add(1)))
                }
                None => g,
            };
            emit_graph(&g, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench { suite, sizes, seed, runs, json } => bench(&suite, sizes, seed, runs, json),
    }
}

fn load(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Graph::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write_out(text: &str) -> Result<()> {
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(())
}

fn print(report: &Report) -> Result<()> {
    write_out(&(serde_json::to_string(report)? + "\n"))
}

fn exit_for(outcome: &Outcome) -> ExitCode {
    match outcome {
        Outcome::P5Certificate { .. } => ExitCode::from(EXIT_CERTIFICATE),
        Outcome::NotInClass { .. } => ExitCode::from(EXIT_NOT_IN_CLASS),
        _ => ExitCode::SUCCESS,
    }
}

fn report(
    command: &str,
    g: Option<&Graph>,
    solver: Option<&str>,
    outcome: Outcome,
    counters: Option<Counters>,
) -> Report {
    Report {
        schema: SCHEMA,
        command: command.to_string(),
        args: std::env::args().skip(2).collect(),
        instance: g.map(Instance::of),
        solver: solver.map(str::to_string),
        outcome,
        counters,
        wall_ms: None,
    }
}

fn one_based(vs: impl IntoIterator<Item = Vertex>) -> Vec<Vertex> {
    vs.into_iter().map(|v| v + 1).collect()
}

type Solved = (&'static str, Outcome, Option<Counters>);

fn solve_cubic(g: &Graph) -> Solved {
    let outcome = match solve_cubic_clawfree(g) {
        Ok(s) => Outcome::Optimal(solution(g, &s.peds, s.weight)),
        Err(e) => {
            let witness = match &e {
                CubicError::NotInClass { violation, .. } | CubicError::Precondition(violation) => {
                    violation_vertices(violation)
                }
            };
            return ("cubic-claw-free", Outcome::NotInClass { reason: e.to_string(), witness }, None);
        }
    };
    let counters = solve_cubic_clawfree(g).ok().map(|s| s.counters);
    ("cubic-claw-free", outcome, counters)
}

fn violation_vertices(v: &ClassViolation) -> Option<Vec<Vertex>> {
    match v {
        ClassViolation::Degree { vertex, .. }
        | ClassViolation::NoTriangle { vertex }
        | ClassViolation::OpenDegreeTwo { vertex } => Some(one_based([*vertex])),
        ClassViolation::Claw(c) => Some(one_based(std::iter::once(c.center).chain(c.leaves))),
        ClassViolation::Disconnected => None,
    }
}

fn solve_p5(g: &Graph) -> Solved {
    let mut counters = Counters::default();
    let outcome = match solve_p5free_counted(g, &mut counters) {
        SolveOutcome::Optimal { peds, weight, .. } => Outcome::Optimal(solution(g, &peds, weight)),
        SolveOutcome::P5Certificate(p) => certificate(g, p),
    };
    ("p5-free", outcome, Some(counters))
}

fn solve_oracle(g: &Graph) -> Result<Solved> {
    let (p, w) = min_weight_peds_bruteforce(g)?;
    Ok(("oracle", Outcome::Optimal(solution(g, &p, w)), None))
}

fn solve_hfree(g: &Graph, h: Option<&Path>, d: Option<usize>) -> Result<Solved> {
    let h = load(h.ok_or_else(|| anyhow!("--class hfree needs --h"))?)?;
    let d = d.ok_or_else(|| anyhow!("--class hfree needs --d"))?;
    if d < 3 {
        bail!("--d must be at least 3");
    }
    let outcome = match solve_hfree_bounded(g, &h, d) {
        Ok((p, w)) => Outcome::Optimal(solution(g, &p, w)),
        Err(e) => {
            let witness = match &e {
                HFreeError::NotPolynomial(_) => None,
                HFreeError::DegreeExceeded { vertex, .. } => Some(one_based([*vertex])),
                HFreeError::ComponentTooLarge { witness, .. } | HFreeError::ContainsH { witness } => {
                    Some(one_based(witness.iter().copied()))
                }
            };
            Outcome::NotInClass { reason: e.to_string(), witness }
        }
    };
    Ok(("hfree", outcome, None))
}

fn solve_auto(g: &Graph) -> Result<Solved> {
    let cubic = solve_cubic(g);
    if matches!(cubic.1, Outcome::Optimal(_)) {
        return Ok(cubic);
    }
    let p5 = solve_p5(g);
    if matches!(p5.1, Outcome::Optimal(_)) || g.n() > DEFAULT_LIMIT {
        return Ok(p5);
    }
    solve_oracle(g)
}

fn solve(file: &Path, class: Class, h: Option<&Path>, d: Option<usize>, timing: bool) -> Result<ExitCode> {
    let g = load(file)?;
    let start = Instant::now();
    let (solver, outcome, counters) = match class {
        Class::Auto => solve_auto(&g)?,
        Class::CubicClawFree => solve_cubic(&g),
        Class::P5Free => solve_p5(&g),
        Class::Hfree => solve_hfree(&g, h, d)?,
        Class::Oracle => solve_oracle(&g)?,
    };
    let elapsed = start.elapsed();
    let code = exit_for(&outcome);
    let mut r = report("solve", Some(&g), Some(solver), outcome, counters);
    if timing {
        r.wall_ms = Some(elapsed.as_secs_f64() * 1e3);
    }
    print(&r)?;
    Ok(code)
}

fn parse_edges(g: &Graph, text: &str) -> Result<EdgeSet> {
    let mut ids = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (a, b) = item.split_once('-').ok_or_else(|| anyhow!("edge `{item}` is not of the form u-v"))?;
        let (u, v): (usize, usize) = (a.trim().parse()?, b.trim().parse()?);
        if u == 0 || v == 0 {
            bail!("vertices are 1-based, got `{item}`");
        }
        ids.push(g.edge_between(u - 1, v - 1).ok_or_else(|| anyhow!("{u}-{v} is not an edge"))?);
    }
    Ok(EdgeSet::from_ids(g, ids)?)
}

fn verify(file: &Path, edges: Option<&str>, p5: Option<&str>) -> Result<ExitCode> {
    let g = load(file)?;
    if let Some(list) = p5 {
        let vs: Vec<usize> = list.split(',').map(|s| s.trim().parse::<usize>()).collect::<Result<_, _>>()?;
        if vs.len() != 5 || vs.iter().any(|&v| v == 0 || v > g.n()) {
            bail!("--p5 needs five 1-based vertices");
        }
        let local: Vec<Vertex> = vs.iter().map(|v| v - 1).collect();
        let ok = g.is_induced_path(&local);
        let outcome = Outcome::Value(json!({ "induced_p5": ok, "vertices": vs }));
        print(&report("verify", Some(&g), None, outcome, None))?;
        return Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(EXIT_INVALID) });
    }
    let p = parse_edges(&g, edges.ok_or_else(|| anyhow!("give --edges or --p5"))?)?;
    let check = verify_peds(&g, &p);
    let violations = check
        .violations(&p, false)
        .into_iter()
        .map(|id| {
            let e = g.edge(id);
            [e.u + 1, e.v + 1]
        })
        .collect();
    let v = Verification {
        peds: check.valid,
        eeds: verify_eeds(&g, &p),
        kind: coloring_from_peds(&g, &p).ok().filter(|_| check.valid).map(|c| c.kind()),
        weight: p.weight(),
        violations,
    };
    let ok = v.peds;
    print(&report("verify", Some(&g), None, Outcome::Verified(v), None))?;
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(EXIT_INVALID) })
}

fn enumerate(file: &Path, limit: usize) -> Result<ExitCode> {
    let g = load(file)?;
    let sets: Vec<_> = enumerate_peds(&g, limit)?
        .into_iter()
        .map(|(p, _)| {
            let w = p.weight();
            solution(&g, &p, w)
        })
        .collect();
    let outcome = Outcome::Enumeration { count: sets.len(), sets };
    print(&report("enumerate", Some(&g), Some("oracle"), outcome, None))?;
    Ok(ExitCode::SUCCESS)
}

fn gadget(kind: GadgetKind, file: &Path, k: usize, check: bool) -> Result<ExitCode> {
    let g = load(file)?;
    if !check {
        let built = match kind {
            GadgetKind::Magnify => magnify(&g)?.0,
            GadgetKind::Subdivide => subdivide(&g, k).0,
        };
        write_out(&built.to_dimacs())?;
        return Ok(ExitCode::SUCCESS);
    }
    let (value, counters) = match kind {
        GadgetKind::Magnify => {
            let r = verify_reduction_magnify(&g)?;
            let value = json!({
                "gadget": "magnify",
                "n": r.n,
                "threshold": r.threshold.to_string(),
                "source_has_eeds": r.eeds.is_some(),
                "min_peds_size": r.min_peds_size,
                "witness_size": r.witness.as_ref().map(EdgeSet::len),
                "shield_counts": r.shield_counts,
                "holds": r.holds,
            });
            (value, r.counters)
        }
        GadgetKind::Subdivide => {
            let r = verify_reduction_subdivide(&g, k)?;
            let value = json!({
                "gadget": "subdivide",
                "r": r.r,
                "k": r.k,
                "bound": r.bound.to_string(),
                "min_peds_size": r.min_peds_size,
                "bound_attained": r.bound_attained,
                "coloring_exists": r.coloring_exists,
                "source_has_eeds": r.has_eeds,
                "witness_size": r.witness.as_ref().map(EdgeSet::len),
                "witness_valid": r.witness_valid,
                "agree": r.agree,
            });
            (value, r.counters)
        }
    };
    print(&report("gadget", Some(&g), None, Outcome::Value(value), Some(counters)))?;
    Ok(ExitCode::SUCCESS)
}

fn classify(h: &Path, d: usize) -> Result<ExitCode> {
    let h = load(h)?;
    if d < 3 {
        bail!("--d must be at least 3");
    }
    let value = serde_json::to_value(classify_dichotomy(&h, d))?;
    print(&report("classify", None, None, Outcome::Value(value), None))?;
    Ok(ExitCode::SUCCESS)
}

fn base_graph(base: Option<&str>, n: Option<usize>, rng: &mut ChaCha8Rng) -> Result<Graph> {
    Ok(match base {
        Some("K4" | "k4") => complete(4),
        Some("prism") => prism(),
        Some("petersen") => petersen(),
        Some(path) => load(Path::new(path))?,
        None => random_cubic(n.ok_or_else(|| anyhow!("give --base or --n"))?, rng)?,
    })
}

fn generate(
    family: Family,
    n: Option<usize>,
    base: Option<&str>,
    k: usize,
    clique: Option<usize>,
    p: f64,
    seed: u64,
) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(match family {
        Family::Cubic => random_cubic(n.ok_or_else(|| anyhow!("cubic needs --n"))?, &mut rng)?,
        Family::Inflate => inflate(&base_graph(base, n, &mut rng)?)?,
        Family::Split => {
            let n = n.ok_or_else(|| anyhow!("split needs --n"))?;
            let clique = clique.unwrap_or_else(|| ((2 * n) as f64).sqrt().round().max(1.0) as usize).min(n);
            random_split(n, clique, p, &mut rng)?
        }
        Family::Magnify => magnify(&base_graph(base, n, &mut rng)?)?.0,
        Family::Subdivide => subdivide(&base_graph(base, n, &mut rng)?, k).0,
    })
}

fn parse_range(s: &str) -> Result<(f64, f64)> {
    let (a, b) = s.split_once(':').ok_or_else(|| anyhow!("weights must be lo:hi"))?;
    let (lo, hi): (f64, f64) = (a.parse()?, b.parse()?);
    if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
        bail!("bad weight range {s}");
    }
    Ok((lo, hi))
}

fn emit_graph(g: &Graph, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, g.to_dimacs()).with_context(|| format!("writing {}", path.display())),
        None => write_out(&g.to_dimacs()),
    }
}

fn bench(suite: &str, sizes: Option<Vec<usize>>, seed: u64, runs: usize, json: bool) -> Result<ExitCode> {
    let suite: Suite = suite.parse()?;
    let sizes = sizes.unwrap_or_else(|| suite.default_sizes());
    let table = run_suite(suite, &sizes, seed, runs)?;
    if json {
        let value = serde_json::to_value(&table)?;
        print(&report("bench", None, None, Outcome::Value(value), None))?;
    } else {
        let mut text = table.to_text();
        if let Some(r) = table.max_ratio() {
            text += &format!("max growth ratio per doubling: {r:.2}\n");
        }
        write_out(&text)?;
    }
    Ok(ExitCode::SUCCESS)
}
