//! Acceptance suite: one PASS/FAIL line per criterion.

use std::time::{Duration, Instant};

use num_rational::Ratio;
use peds::bench::{run_suite, Suite};
use peds::cubic::{check_class_cubic_clawfree, check_class_extended, solve_cubic_clawfree};
use peds::domination::{coloring_from_peds, verify_peds};
use peds::gadgets::{
    classify_dichotomy, verify_reduction_magnify, verify_reduction_subdivide, Dichotomy, HardnessReason,
};
use peds::generators::named::*;
use peds::generators::{
    co_bipartite, gnp, inflate, random_cograph, random_connected, random_cubic, random_regular, random_split,
    random_weights,
};
use peds::oracle::{enumerate_eeds, enumerate_peds, min_weight_peds_bruteforce, DEFAULT_LIMIT};
use peds::p5free::{dominating_induced_p3s, p3_pattern, principal_vertex, solve_p5free, Principal, SolveOutcome};
use peds::{Graph, PedsKind, EPS};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn FnOnce(&mut ChaCha8Rng) -> Outcome + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn shield_enumeration() -> Outcome {
    let start = Instant::now();
    let g = shield();
    let all = enumerate_peds(&g, DEFAULT_LIMIT).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let sizes: Vec<usize> = all.iter().map(|(p, _)| p.len()).collect();
    ensure(sizes == [3, 7, 7, 7, 15], || format!("sizes {sizes:?}"))?;
    let chords: Vec<usize> = [(1, 3), (5, 7), (9, 11)].iter().map(|&(u, v)| g.edge_between(u, v).unwrap()).collect();
    ensure(all[0].0.ids() == chords, || format!("size-3 set {:?}", all[0].0.ids()))?;
    let mut whites: Vec<Vec<usize>> =
        all[1..4].iter().map(|(p, _)| coloring_from_peds(&g, p).unwrap().white()).collect();
    whites.sort();
    let expected = vec![vec![0, 3, 9], vec![1, 4, 7], vec![5, 8, 11]];
    ensure(whites == expected, || format!("proper white sets {whites:?}"))?;
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("5 sets {sizes:?} in {elapsed:.2?}"))
}

fn eeds_size_law(rng: &mut ChaCha8Rng) -> Outcome {
    let (mut graphs, mut with_eeds) = (0, 0);
    for n in (4..=14).step_by(2) {
        for _ in 0..12 {
            let g = random_regular(n, 3, rng).map_err(|e| e.to_string())?;
            let eeds = enumerate_eeds(&g, DEFAULT_LIMIT).map_err(|e| e.to_string())?;
            graphs += 1;
            if (3 * n) % 10 != 0 {
                ensure(eeds.is_empty(), || format!("n = {n} has an EEDS"))?;
            }
            for d in &eeds {
                ensure(d.len() * 10 == 3 * n, || format!("EEDS of size {} at n = {n}", d.len()))?;
            }
            with_eeds += usize::from(!eeds.is_empty());
        }
    }
    Ok(format!("{graphs} cubic graphs, {with_eeds} with an EEDS"))
}

fn cubic_pool(rng: &mut ChaCha8Rng) -> Result<Vec<Graph>, String> {
    let mut pool = Vec::new();
    for n in [4, 6, 8, 10] {
        for _ in 0..6 {
            pool.push(random_cubic(n, rng).map_err(|e| e.to_string())?);
        }
    }
    pool.push(petersen());
    pool.push(prism());
    Ok(pool)
}

fn magnification(pool: &[Graph]) -> Outcome {
    let start = Instant::now();
    let mut yes = 0;
    for g in pool {
        let r = verify_reduction_magnify(g).map_err(|e| e.to_string())?;
        ensure(r.holds, || format!("biconditional fails on {}", g.to_dimacs()))?;
        if r.eeds.is_some() {
            yes += 1;
            let at = Ratio::from_integer(r.min_peds_size as i64) == r.threshold;
            ensure(at, || format!("minimum {} vs {}", r.min_peds_size, r.threshold))?;
            let witness = r.witness.as_ref().ok_or("no witness")?;
            let m = peds::gadgets::magnify(g).unwrap().0;
            ensure(verify_peds(&m, witness).valid && witness.len() == r.min_peds_size, || "witness".into())?;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("{} graphs, {yes} with an EEDS, {elapsed:.2?}", pool.len()))
}

fn subdivision(pool: &[Graph]) -> Outcome {
    let mut witnesses = 0;
    for g in pool {
        for k in [0, 1] {
            let r = verify_reduction_subdivide(g, k).map_err(|e| e.to_string())?;
            ensure(r.agree, || format!("conditions disagree (k = {k}) on {}", g.to_dimacs()))?;
            if r.coloring_exists {
                witnesses += 1;
                ensure(r.witness_valid, || format!("bad witness (k = {k})"))?;
                ensure(Ratio::from_integer(r.min_peds_size as i64) == r.bound, || "minimum below bound".into())?;
            }
        }
    }
    Ok(format!("{} graphs x k in {{0, 1}}, {witnesses} witnesses", pool.len()))
}

fn cubic_clawfree(rng: &mut ChaCha8Rng) -> Outcome {
    let mut bases = vec![complete(4), prism(), diamond_ring(2), diamond_ring(3), complete(3), paw()];
    bases.push(inflate(&complete(4)).unwrap());
    bases.push(complete(4).disjoint_union(&complete(3)));
    bases.push(complete(4).disjoint_union(&complete(4)));
    let mut count = 0;
    for round in 0..25 {
        for base in &bases {
            let g = random_weights(base, -10.0, 10.0, rng);
            let g = if round % 2 == 0 { g.with_weights(&round_weights(&g)).unwrap() } else { g };
            let ours = solve_cubic_clawfree(&g).map_err(|e| e.to_string())?;
            let oracle = min_weight_peds_bruteforce(&g).map_err(|e| e.to_string())?.1;
            ensure((ours.weight - oracle).abs() <= EPS, || format!("{} vs {oracle}", ours.weight))?;
            ensure(verify_peds(&g, &ours.peds).valid, || "invalid PEDS".into())?;
            if check_class_cubic_clawfree(&g).is_ok() && g.is_connected() {
                let kinds = enumerate_peds(&g, DEFAULT_LIMIT).unwrap();
                ensure(kinds.iter().all(|(_, k)| *k != PedsKind::Proper), || "proper PEDS found".into())?;
            }
            debug_assert!(check_class_extended(&g).is_ok() || check_class_cubic_clawfree(&g).is_ok());
            count += 1;
        }
    }
    Ok(format!("{count} weighted instances"))
}

fn round_weights(g: &Graph) -> Vec<f64> {
    g.weights().iter().map(|w| w.round()).collect()
}

fn p5_robustness(rng: &mut ChaCha8Rng) -> Outcome {
    let (mut optimal, mut certs, mut split) = (0, 0, 0);
    for i in 0..600 {
        let n = rng.gen_range(2..=14);
        let (g, is_split) = match i % 6 {
            0 | 1 => (random_split(n, rng.gen_range(1..=n), rng.gen_range(0.1..0.9), rng).unwrap(), true),
            2 => (gnp(n, rng.gen_range(0.1..0.7), rng), false),
            3 => (random_connected(n, rng.gen_range(0.1..0.6), rng), false),
            4 => (if i % 12 == 4 { path(n) } else { cycle(n.max(3)) }, false),
            _ => (co_bipartite(n / 2, n - n / 2, rng.gen_range(0.1..0.9), rng), false),
        };
        let g = random_weights(&g, -10.0, 10.0, rng);
        split += usize::from(is_split);
        match solve_p5free(&g) {
            SolveOutcome::Optimal { peds, weight, .. } => {
                let oracle = min_weight_peds_bruteforce(&g).unwrap().1;
                ensure((weight - oracle).abs() <= EPS, || format!("{weight} vs {oracle} on {}", g.to_dimacs()))?;
                ensure(verify_peds(&g, &peds).valid, || "invalid PEDS".into())?;
                optimal += 1;
            }
            SolveOutcome::P5Certificate(p) => {
                ensure(!is_split, || format!("certificate on a split graph: {}", g.to_dimacs()))?;
                ensure(g.is_induced_path(&p), || format!("bad certificate {p:?}"))?;
                certs += 1;
            }
        }
    }
    Ok(format!("{optimal} optimal, {certs} certificates, {split} split graphs all optimal"))
}

fn pattern_completeness(rng: &mut ChaCha8Rng) -> Outcome {
    let (mut graphs, mut proper) = (0, 0);
    let mut pool: Vec<Graph> = vec![cycle(3), cycle(4), cycle(5), path(3), path(4), paw(), star(3)];
    for i in 0..400 {
        let n = rng.gen_range(3..=12);
        pool.push(match i % 4 {
            0 => random_split(n, rng.gen_range(1..=n), rng.gen_range(0.2..0.8), rng).unwrap(),
            1 => co_bipartite(n / 2, n - n / 2, rng.gen_range(0.1..0.9), rng),
            2 => random_cograph(n, 4, rng),
            _ => gnp(n, rng.gen_range(0.2..0.7), rng),
        });
    }
    for g in pool.iter().filter(|g| g.is_connected() && g.find_induced_p5().is_none()) {
        graphs += 1;
        let p3s = dominating_induced_p3s(g);
        for (p, kind) in enumerate_peds(g, DEFAULT_LIMIT).unwrap() {
            if kind != PedsKind::Proper {
                continue;
            }
            proper += 1;
            let c = coloring_from_peds(g, &p).unwrap();
            let pats: Vec<_> = p3s.iter().map(|&t| p3_pattern(&c, t)).collect();
            ensure(pats.iter().any(|x| x.is_some_and(|x| x.is_proper_pattern())), || {
                format!("no dominating P3 with a proper pattern: {}", g.to_dimacs())
            })?;
            ensure(pats.iter().all(|x| x.is_some_and(|x| x.is_proper_pattern())), || {
                format!("pattern f/g on a proper set: {}", g.to_dimacs())
            })?;
        }
    }
    Ok(format!("{graphs} P5-free graphs, {proper} proper sets"))
}

fn dichotomy() -> Outcome {
    let g = |n, e: &[(usize, usize)]| Graph::unweighted(n, e.iter().copied()).unwrap();
    let polynomial = [
        ("P2", path(2), 2),
        ("P4", path(4), 4),
        ("P5", path(5), 5),
        ("P2+P4", path(2).disjoint_union(&path(4)), 7),
        ("2P3", path(3).disjoint_union(&path(3)), 7),
    ];
    for (name, h, q) in polynomial {
        let expected = (3u128.pow(q as u32 - 1) - 1) / 2;
        ensure(classify_dichotomy(&h, 3) == Dichotomy::Polynomial { q, component_bound: Some(expected) }, || {
            name.to_string()
        })?;
    }
    let hard = [
        ("K1,3", star(3), HardnessReason::ForestWithBranchVertex),
        ("C3", cycle(3), HardnessReason::ContainsCycle(3)),
        ("C4", cycle(4), HardnessReason::ContainsCycle(4)),
        ("paw", paw(), HardnessReason::ContainsCycle(3)),
        ("K4", g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]), HardnessReason::ContainsCycle(3)),
    ];
    for (name, h, reason) in hard {
        ensure(classify_dichotomy(&h, 3) == Dichotomy::NpComplete(reason), || name.to_string())?;
    }
    Ok("5 polynomial, 5 NP-complete; P5 with d = 3 gives q = 5 and bound 40".into())
}

fn scaling() -> Outcome {
    let mut parts = Vec::new();
    let mut failed = false;
    for suite in [Suite::CubicClawFree, Suite::Split] {
        let t = run_suite(suite, &suite.default_sizes(), 2024, 5).map_err(|e| e.to_string())?;
        let worst = t.max_ratio().unwrap_or(0.0);
        let last = t.rows.last().unwrap();
        failed |= worst > 2.5;
        parts.push(format!("{suite:?} up to n = {}: max ratio {worst:.2}", last.n));
    }
    let msg = parts.join("; ");
    if failed {
        Err(msg)
    } else {
        Ok(msg)
    }
}

fn principal_contract(rng: &mut ChaCha8Rng) -> Outcome {
    let (mut principal, mut certs) = (0, 0);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=40);
        let g = random_connected(n, rng.gen_range(0.02..0.5), rng);
        let s = principal_vertex(&g);
        ensure(s.tests <= 3, || format!("{} tests", s.tests))?;
        match s.result {
            Principal::Vertex(v) => {
                ensure(g.eccentricity(v).is_some_and(|e| e <= 2), || format!("vertex {v}"))?;
                principal += 1;
            }
            Principal::P5(p) => {
                ensure(g.is_induced_path(&p), || format!("bad certificate {p:?}"))?;
                certs += 1;
            }
            Principal::Disconnected => return Err("connected graph reported disconnected".into()),
        }
    }
    Ok(format!("{principal} principal vertices, {certs} certificates"))
}

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(20240607);
    let pool = cubic_pool(&mut rng);
    let criteria: Vec<Criterion> = vec![
        ("shield enumeration", Box::new(|_| shield_enumeration())),
        ("EEDS size law", Box::new(eeds_size_law)),
        ("magnification biconditional", Box::new(|_| magnification(pool.as_ref().map_err(Clone::clone)?))),
        ("subdivision equivalence", Box::new(|_| subdivision(pool.as_ref().map_err(Clone::clone)?))),
        ("cubic claw-free optimality", Box::new(cubic_clawfree)),
        ("P5-free robustness", Box::new(p5_robustness)),
        ("pattern completeness", Box::new(pattern_completeness)),
        ("dichotomy classifier", Box::new(|_| dichotomy())),
        ("scaling probe", Box::new(|_| scaling())),
        ("principal vertex contract", Box::new(principal_contract)),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.into_iter().enumerate() {
        match run(&mut rng) {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", 10 - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
