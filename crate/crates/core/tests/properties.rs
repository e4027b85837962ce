use peds::dim::{dim_min_weight, dim_min_weight_seeded};
use peds::domination::{coloring_from_peds, peds_from_white_set, verify_eeds, verify_peds};
use peds::oracle::{enumerate_peds, min_weight_eeds_bruteforce, min_weight_peds_bruteforce, DEFAULT_LIMIT};
use peds::p5free::{solve_p5free, SolveOutcome};
use peds::search::min_weight_peds;
use peds::{Graph, PedsKind, EPS};
use proptest::prelude::*;

/// Graph on `n <= 9` vertices from a pair mask, with integer weights in [-6, 6].
fn graph() -> impl Strategy<Value = Graph> {
    (1usize..=9)
        .prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (Just(n), proptest::collection::vec(any::<bool>(), pairs), proptest::collection::vec(-6i32..=6, pairs))
        })
        .prop_map(|(n, keep, w)| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if keep[k] {
                        edges.push((u, v, f64::from(w[k])));
                    }
                    k += 1;
                }
            }
            Graph::new(n, edges).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn white_set_round_trip(g in graph()) {
        for (p, kind) in enumerate_peds(&g, DEFAULT_LIMIT).unwrap() {
            let c = coloring_from_peds(&g, &p).unwrap();
            prop_assert_eq!(c.kind(), kind);
            prop_assert!(c.is_valid(&g));
            let (q, c2) = peds_from_white_set(&g, &c.white()).unwrap();
            prop_assert_eq!(q, p);
            prop_assert_eq!(c2, c);
        }
    }

    #[test]
    fn search_matches_oracle(g in graph()) {
        let (p, w) = min_weight_peds(&g);
        prop_assert!(verify_peds(&g, &p).valid);
        prop_assert!((w - min_weight_peds_bruteforce(&g).unwrap().1).abs() < EPS);
    }

    #[test]
    fn dim_matches_oracle(g in graph()) {
        let ours = dim_min_weight(&g);
        let oracle = min_weight_eeds_bruteforce(&g).unwrap();
        prop_assert_eq!(ours.is_some(), oracle.is_some());
        if let (Some((d, w)), Some((_, ow))) = (ours, oracle) {
            prop_assert!(verify_eeds(&g, &d));
            prop_assert!((w - ow).abs() < EPS);
        }
    }

    #[test]
    fn seeding_with_all_vertices_changes_nothing(g in graph()) {
        let all: Vec<usize> = (0..g.n()).collect();
        let seeded = dim_min_weight_seeded(&g, &all).unwrap().map(|r| r.1);
        let plain = dim_min_weight(&g).map(|r| r.1);
        prop_assert_eq!(seeded.is_some(), plain.is_some());
        if let (Some(a), Some(b)) = (seeded, plain) {
            prop_assert!((a - b).abs() < EPS);
        }
    }

    #[test]
    fn p5free_is_optimal_or_certifies(g in graph()) {
        match solve_p5free(&g) {
            SolveOutcome::Optimal { peds, weight, kind } => {
                prop_assert!(verify_peds(&g, &peds).valid);
                prop_assert_eq!(coloring_from_peds(&g, &peds).unwrap().kind(), kind);
                prop_assert!((weight - min_weight_peds_bruteforce(&g).unwrap().1).abs() < EPS);
            }
            SolveOutcome::P5Certificate(p) => prop_assert!(g.is_induced_path(&p)),
        }
    }

    #[test]
    fn dominating_vertex_or_triangle_excludes_proper(g in graph()) {
        let dominates = |s: &[usize]| {
            (0..g.n()).all(|x| s.iter().any(|&v| v == x || g.has_edge(v, x)))
        };
        let n = g.n();
        let k1 = (0..n).any(|v| dominates(&[v]));
        let k3 = (0..n).any(|a| (a + 1..n).any(|b| (b + 1..n).any(|c| {
            g.is_clique(&[a, b, c]) && dominates(&[a, b, c])
        })));
        if g.is_connected() && (k1 || k3) {
            let all = enumerate_peds(&g, DEFAULT_LIMIT).unwrap();
            prop_assert!(all.iter().all(|(_, k)| *k != PedsKind::Proper));
        }
    }
}
