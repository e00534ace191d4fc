mod common;

use common::small_cut;
use mbcut::analysis::{build_maze, find_bowtie, is_maze_bowtie, AnalysisGuard};
use mbcut::generate::{gen_random_chain, gen_random_skew, RandomParams};
use mbcut::graph::{is_budget_respecting, is_cut, reachable_after};
use mbcut::important::{brute_important, check_respecting_minimal, dominates};
use mbcut::oracle::{self, SizeGuard};
use mbcut::skew::{is_skew_multicut, solve_skew};
use mbcut::{enumerate_candidates, max_flow_z, solve_mbcut, solve_mbcut_with, EdgeSet, FlowOutcome, SolverOptions};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn solver_witness_is_valid_and_matches_oracle(seed in any::<u64>()) {
        let inst = small_cut(seed);
        let (cut, _) = solve_mbcut(&inst).unwrap();
        let brute = oracle::brute_solve_mbcut_by_vertex_sets(&inst, &SizeGuard::default()).unwrap();
        prop_assert_eq!(cut.is_some(), brute.is_some());
        if let Some(c) = cut {
            let g = &inst.graph;
            prop_assert!(is_cut(g, &inst.x, &inst.y, &c.to_edge_set(g.num_edges())));
            prop_assert!(is_budget_respecting(g, &c, &inst.budgets));
        }
    }

    #[test]
    fn solver_is_deterministic_and_parallel_safe(seed in any::<u64>()) {
        let inst = small_cut(seed);
        let a = solve_mbcut(&inst).unwrap();
        let b = solve_mbcut(&inst).unwrap();
        let p = solve_mbcut_with(&inst, SolverOptions { parallel: true }).unwrap();
        prop_assert_eq!(&a.0, &b.0);
        prop_assert_eq!(a.1.nodes, b.1.nodes);
        prop_assert_eq!(&a.0, &p.0);
    }

    #[test]
    fn flow_cut_is_minimum_and_inside_bottleneck(seed in any::<u64>()) {
        let inst = small_cut(seed);
        let g = &inst.graph;
        let z = EdgeSet::full(g.num_edges());
        if let FlowOutcome::Certificate(c) = max_flow_z(g, &inst.x, &inst.y, &z, g.num_edges()).unwrap() {
            prop_assert_eq!(c.cut.len(), c.lambda);
            prop_assert_eq!(c.paths.len(), c.lambda);
            prop_assert!(is_cut(g, &inst.x, &inst.y, &c.cut.to_edge_set(g.num_edges())));
            prop_assert!(c.cut.edges().iter().all(|&e| c.bottleneck.contains(e)));
        }
    }

    #[test]
    fn enumeration_contains_every_important_cut(seed in any::<u64>()) {
        let inst = small_cut(seed);
        let z = inst.graph.colored_edges();
        let (family, stats) = enumerate_candidates(&inst, &z).unwrap();
        let exact = brute_important(&inst, &z, &SizeGuard::default()).unwrap();
        prop_assert!(exact.is_subset(&family));
        prop_assert!(u128::from(stats.nodes()) <= stats.node_bound);
        for c in family.cuts() {
            prop_assert!(check_respecting_minimal(&inst, &z, c).is_ok());
        }
    }

    #[test]
    fn domination_is_reflexive_and_reach_monotone(seed in any::<u64>()) {
        let inst = small_cut(seed);
        let z = inst.graph.colored_edges();
        let exact = brute_important(&inst, &z, &SizeGuard::default()).unwrap();
        for a in exact.cuts() {
            prop_assert!(dominates(&inst, &z, a, a).unwrap());
            for b in exact.cuts() {
                if a != b && dominates(&inst, &z, a, b).unwrap() {
                    let (ra, rb) = (reachable_after(&inst.graph, &inst.x, a), reachable_after(&inst.graph, &inst.x, b));
                    prop_assert!(rb.is_subset(&ra));
                }
            }
        }
    }

    #[test]
    fn skew_witness_is_valid(seed in any::<u64>(), q in 1usize..=3) {
        let p = RandomParams { n: 6, m: 9, num_colors: 2, budgets: vec![1, 1], color_density: 0.6, simple: true };
        let inst = gen_random_skew(seed, &p, q).unwrap();
        let (cut, _) = solve_skew(&inst).unwrap();
        let brute = oracle::brute_solve_skew(&inst, &SizeGuard::default()).unwrap();
        prop_assert_eq!(cut.is_some(), brute.is_some());
        if let Some(c) = cut {
            prop_assert!(is_skew_multicut(&inst, &c));
            prop_assert!(is_budget_respecting(&inst.graph, &c, &inst.budgets));
        }
    }

    #[test]
    fn bowties_reverse(seed in any::<u64>()) {
        let chain = gen_random_chain(seed, 3, 3, 1, 3).unwrap();
        let guard = SizeGuard::default();
        let all = EdgeSet::full(chain.graph.num_edges());
        let cuts = oracle::minimal_cuts_within(&chain.graph, &[chain.s], &[chain.t], &all, 3, &guard).unwrap();
        // greedy disjoint equal-size subfamily of the smallest cuts
        let size = cuts.iter().map(|c| c.len()).min().unwrap_or(0);
        let mut family = Vec::new();
        for c in cuts.into_iter().filter(|c| c.len() == size && size > 0) {
            if family.iter().all(|f: &mbcut::CutSet| f.is_disjoint(&c)) && family.len() < 5 {
                family.push(c);
            }
        }
        let maze = build_maze(&chain.graph, chain.s, chain.t, &family).unwrap();
        if let Some(bt) = find_bowtie(&maze, 2, &AnalysisGuard::default()).unwrap() {
            prop_assert!(is_maze_bowtie(&maze, &bt));
            prop_assert!(is_maze_bowtie(&maze, &bt.reversed()));
        }
    }
}
