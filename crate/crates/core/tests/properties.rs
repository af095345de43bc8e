//! Property tests for graph plumbing, certificate algebra, checkers, oracle
//! and generators.

use bicert::algo::{check, check_with_stats, leaf_peel_two_color, Algorithm};
use bicert::generate::{generate, Density, GenSpec};
use bicert::io::{parse_dimacs, parse_edge_list, write_dimacs, write_edge_list};
use bicert::oracle::{brute_force_bipartite, count_proper_2colorings, find_odd_cycle_exhaustive};
use bicert::{
    check_path_parity, connected_components, find_path, flip_component, simplify,
    verify_bipartition, verify_odd_cycle, CheckOutcome, Graph,
};
use proptest::prelude::*;

/// Small graphs with optional loops and parallel edges.
fn small_graph(max_n: usize, max_m: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 0..=max_m)
            .prop_map(move |pairs| Graph::new(n, &pairs).unwrap())
    })
}

/// Loop-free graphs, bipartite or not.
fn loopless_graph(max_n: usize, max_m: usize) -> impl Strategy<Value = Graph> {
    small_graph(max_n, max_m).prop_map(|g| {
        let pairs: Vec<_> = g.pairs().into_iter().filter(|(u, v)| u != v).collect();
        Graph::new(g.vertex_count(), &pairs).unwrap()
    })
}

/// Bipartite graphs built from a hidden side assignment.
fn bipartite_graph(max_n: usize, max_m: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(move |n| {
        (
            prop::collection::vec(any::<bool>(), n),
            prop::collection::vec((0..n, 0..n), 0..=max_m),
        )
            .prop_map(move |(side, pairs)| {
                let pairs: Vec<_> = pairs
                    .into_iter()
                    .filter(|&(u, v)| side[u] != side[v])
                    .collect();
                Graph::new(n, &pairs).unwrap()
            })
    })
}

fn branch(out: &CheckOutcome) -> bool {
    out.is_bipartite()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn adjacency_sizes(g in small_graph(8, 16)) {
        let loops = g.edges().iter().filter(|e| e.is_loop()).count();
        let total: usize = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(total, 2 * (g.edge_count() - loops) + loops);
        for e in g.edges() {
            let at_u = g.neighbors(e.u).iter().filter(|i| i.edge == e.id).count();
            prop_assert_eq!(at_u, 1);
            if !e.is_loop() {
                let at_v = g.neighbors(e.v).iter().filter(|i| i.edge == e.id).count();
                prop_assert_eq!(at_v, 1);
            }
        }
    }

    #[test]
    fn simplify_is_idempotent(g in small_graph(6, 16)) {
        let (s, _) = simplify(&g);
        prop_assert_eq!(simplify(&s).1, 0);
        prop_assert_eq!(s.first_loop().is_some(), g.first_loop().is_some());
    }

    #[test]
    fn components_match_reachability(g in small_graph(6, 10)) {
        let labels = connected_components(&g);
        let n = g.vertex_count();
        for a in 0..n {
            for b in 0..n {
                let reachable = find_path(&g, |_| true, a, b).is_some();
                prop_assert_eq!(reachable, labels.component_of[a] == labels.component_of[b]);
            }
        }
        let distinct: std::collections::BTreeSet<_> = labels.component_of.iter().collect();
        prop_assert_eq!(distinct.len(), labels.count);
    }

    #[test]
    fn found_paths_are_valid_and_allowed(g in small_graph(7, 12), mask in any::<u8>()) {
        let allowed = |v: usize| mask & (1 << v) != 0;
        for a in 0..g.vertex_count() {
            for b in 0..g.vertex_count() {
                if let Some(p) = find_path(&g, allowed, a, b) {
                    prop_assert!(p.is_valid_in(&g));
                    prop_assert!(p.vertices.iter().all(|&v| allowed(v)));
                    prop_assert_eq!((p.first(), p.last()), (a, b));
                }
            }
        }
    }

    #[test]
    fn flipping_component_unions_preserves_validity(g in bipartite_graph(10, 20), pick in any::<u32>()) {
        let bp = check(&g, Algorithm::Growth).unwrap().bipartition().unwrap().clone();
        let members = connected_components(&g).members();
        let comp: Vec<_> = members
            .iter()
            .enumerate()
            .filter(|(i, _)| pick & (1 << (i % 32)) != 0)
            .flat_map(|(_, m)| m.iter().copied())
            .collect();
        let flipped = flip_component(&bp, &comp);
        prop_assert!(verify_bipartition(&g, &flipped).unwrap());
        prop_assert_eq!(flip_component(&flipped, &comp), bp);
    }

    #[test]
    fn verified_bipartitions_alternate_along_paths(g in bipartite_graph(6, 12)) {
        let bp = brute_force_bipartite(&g).unwrap().unwrap();
        for a in 0..g.vertex_count() {
            for b in 0..g.vertex_count() {
                if let Some(p) = find_path(&g, |_| true, a, b) {
                    prop_assert!(check_path_parity(&bp, &p));
                    prop_assert_eq!(bp.side(a) == bp.side(b), p.len() % 2 == 0);
                }
            }
        }
    }

    #[test]
    fn loops_never_admit_a_bipartition(g in small_graph(6, 10), v in 0usize..6) {
        let v = v % g.vertex_count();
        let mut pairs = g.pairs();
        pairs.push((v, v));
        let g = Graph::new(g.vertex_count(), &pairs).unwrap();
        prop_assert_eq!(brute_force_bipartite(&g).unwrap(), None);
        for a in Algorithm::ALL {
            prop_assert!(!branch(&check(&g, a).unwrap()));
        }
    }

    #[test]
    fn checkers_self_certify_and_agree_with_oracle(g in small_graph(9, 18)) {
        let truth = brute_force_bipartite(&g).unwrap();
        let cycle = find_odd_cycle_exhaustive(&g).unwrap();
        prop_assert_eq!(truth.is_some(), cycle.is_none());
        for a in Algorithm::ALL {
            let out = check(&g, a).unwrap();
            prop_assert!(out.verify(&g));
            prop_assert_eq!(branch(&out), truth.is_some(), "{}", a);
            // Exclusivity: a verified certificate of one kind never coexists
            // with a verified certificate of the other.
            match &out {
                CheckOutcome::Bipartite(_) => prop_assert!(cycle.is_none()),
                CheckOutcome::OddCycle(c) => {
                    prop_assert!(verify_odd_cycle(&g, c));
                    prop_assert!(truth.is_none());
                }
            }
        }
    }

    #[test]
    fn connected_bipartite_inputs_give_one_canonical_bipartition(g in bipartite_graph(10, 24)) {
        // Restrict to the component of vertex 0.
        let labels = connected_components(&g);
        let keep: Vec<_> = (0..g.vertex_count()).filter(|&v| labels.component_of[v] == 0).collect();
        let (h, _) = bicert::induced_subgraph(&g, &keep).unwrap();
        let canon: Vec<_> = Algorithm::ALL
            .iter()
            .map(|&a| check(&h, a).unwrap().bipartition().unwrap().canonicalized(&h))
            .collect();
        prop_assert!(canon.windows(2).all(|w| w[0] == w[1]));
    }

    #[test]
    fn multi_edges_do_not_change_the_branch(g in small_graph(8, 20)) {
        let (s, _) = simplify(&g);
        for a in Algorithm::ALL {
            prop_assert_eq!(branch(&check(&g, a).unwrap()), branch(&check(&s, a).unwrap()));
        }
    }

    #[test]
    fn isolated_vertices_do_not_change_the_branch(g in loopless_graph(8, 16), extra in 1usize..4) {
        let bigger = Graph::new(g.vertex_count() + extra, &g.pairs()).unwrap();
        for a in Algorithm::ALL {
            prop_assert_eq!(branch(&check(&g, a).unwrap()), branch(&check(&bigger, a).unwrap()));
        }
    }

    #[test]
    fn checkers_are_deterministic(g in small_graph(10, 20)) {
        for a in Algorithm::ALL {
            prop_assert_eq!(check_with_stats(&g, a).unwrap(), check_with_stats(&g, a).unwrap());
        }
    }

    #[test]
    fn coloring_count_is_two_to_the_components(g in small_graph(10, 12)) {
        let count = count_proper_2colorings(&g).unwrap();
        if brute_force_bipartite(&g).unwrap().is_some() {
            prop_assert_eq!(count, 1u64 << connected_components(&g).count);
        } else {
            prop_assert_eq!(count, 0);
        }
    }

    #[test]
    fn oracle_certificates_verify(g in small_graph(8, 14)) {
        if let Some(bp) = brute_force_bipartite(&g).unwrap() {
            prop_assert!(verify_bipartition(&g, &bp).unwrap());
        }
        if let Some(c) = find_odd_cycle_exhaustive(&g).unwrap() {
            prop_assert!(verify_odd_cycle(&g, &c));
        }
    }

    #[test]
    fn edge_list_and_dimacs_round_trip(g in small_graph(10, 20)) {
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g.clone());
        prop_assert_eq!(parse_dimacs(&write_dimacs(&g)).unwrap(), g);
    }

    #[test]
    fn generators_are_deterministic_and_keep_their_promises(
        seed in any::<u64>(),
        left in 0usize..8,
        right in 0usize..8,
        n in 1usize..40,
    ) {
        let spec = GenSpec::random(n, Density::Probability(0.2), seed).with_loops(true);
        prop_assert_eq!(generate(&spec).unwrap(), generate(&spec).unwrap());

        let planted = generate(&GenSpec::planted_bipartite(left, right, Density::Probability(0.5), seed)).unwrap();
        prop_assert!(brute_force_bipartite(&planted).unwrap().is_some());
        for a in Algorithm::ALL {
            prop_assert!(check(&planted, a).unwrap().is_bipartite());
        }

        let odd = generate(&GenSpec::planted_odd_cycle(left, right, Density::Probability(0.5), 5, seed)).unwrap();
        for a in Algorithm::ALL {
            prop_assert!(!check(&odd, a).unwrap().is_bipartite());
        }

        let forest = generate(&GenSpec::forest(n, seed)).unwrap();
        prop_assert!(forest.edge_count() < n);
        prop_assert!(leaf_peel_two_color(&forest).is_ok());
        if n <= 12 {
            prop_assert_eq!(find_odd_cycle_exhaustive(&forest).unwrap(), None);
        }
    }
}
