//! Flow-guided branching for multi-budgeted cut.
//!
//! Each node computes a maximum flow restricted to the deletable set `Z`. If
//! the closest-to-`Y` minimum cut already fits the budgets it is returned;
//! otherwise the node guesses, per color `i`, the set `A_i` of flow paths on
//! which the solution deletes an edge of color `i`, and drops every other
//! color-`i` edge of those paths from `Z`. A child whose flow value does not
//! grow is guaranteed to return at once, so the tree has depth at most `k + 1`.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::flow::{max_flow_z, FlowCertificate, FlowOutcome};
use crate::graph::{is_budget_respecting, Budgets, ColoredDigraph, CutSet, EdgeSet};
use crate::instance::CutInstance;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    /// Branching-tree nodes visited.
    pub nodes: u64,
    pub flow_calls: u64,
    pub depth_max: usize,
    /// Children whose flow value equalled their parent's.
    pub same_lambda_children: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SolveStats {
    pub fn merge(&mut self, other: &SolveStats) {
        self.nodes += other.nodes;
        self.flow_calls += other.flow_calls;
        self.depth_max = self.depth_max.max(other.depth_max);
        self.same_lambda_children += other.same_lambda_children;
    }
}

#[derive(Default)]
struct Counters {
    nodes: AtomicU64,
    flow_calls: AtomicU64,
    depth_max: AtomicUsize,
    same_lambda: AtomicU64,
}

impl Counters {
    fn snapshot(&self, elapsed: Duration) -> SolveStats {
        SolveStats {
            nodes: self.nodes.load(Ordering::Relaxed),
            flow_calls: self.flow_calls.load(Ordering::Relaxed),
            depth_max: self.depth_max.load(Ordering::Relaxed),
            same_lambda_children: self.same_lambda.load(Ordering::Relaxed),
            elapsed,
        }
    }
}

/// One branch label: per color, a bitmask over the flow paths (bit `j` is path `j + 1`).
pub type BranchTuple = Vec<u64>;

/// All tuples `(A_1, …, A_ℓ)` with `A_i ⊆ [λ]` and `|A_i| ≤ k_i`, in
/// lexicographic order of the per-color bitmasks.
pub fn branch_tuples(lambda: usize, budgets: &Budgets) -> Result<Vec<BranchTuple>> {
    if lambda > 63 {
        return Err(Error::Guard(format!("flow value {lambda} too large to branch on")));
    }
    let per_color: Vec<Vec<u64>> = budgets
        .0
        .iter()
        .map(|&k| (0u64..1 << lambda).filter(|m| (m.count_ones() as i64) <= k).collect())
        .collect();
    if per_color.is_empty() {
        return Ok(vec![Vec::new()]);
    }
    Ok(per_color.into_iter().multi_cartesian_product().collect())
}

/// The solver's branch order: fewer guessed (color, path) pairs first, ties
/// in canonical tuple order.
pub fn ordered_branch_tuples(lambda: usize, budgets: &Budgets) -> Result<Vec<BranchTuple>> {
    let mut tuples = branch_tuples(lambda, budgets)?;
    tuples.sort_by_key(|t| t.iter().map(|m| m.count_ones()).sum::<u32>());
    Ok(tuples)
}

/// `Z` minus every color-`i` edge lying on a path `j ∉ A_i`. With
/// `restrict_to` set, only edges of that set are removed (the important-cut
/// enumeration restricts removal to the bottleneck edges).
pub(crate) fn shrink_deletable(
    graph: &ColoredDigraph,
    z: &EdgeSet,
    paths: &[Vec<crate::graph::EdgeId>],
    tuple: &[u64],
    restrict_to: Option<&CutSet>,
) -> EdgeSet {
    let mut out = z.clone();
    for (j, path) in paths.iter().enumerate() {
        for &e in path {
            if !out.contains(e) {
                continue;
            }
            if let Some(b) = restrict_to {
                if !b.contains(e) {
                    continue;
                }
            }
            let excluded = graph.edge(e).colors.iter().any(|c| tuple[c - 1] & (1 << j) == 0);
            if excluded {
                out.remove(e);
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SolverOptions {
    /// Evaluate sibling branches concurrently; the lowest-order witness still wins.
    pub parallel: bool,
}

struct Search<'a> {
    inst: &'a CutInstance,
    k: usize,
    opts: SolverOptions,
    counters: Counters,
}

impl Search<'_> {
    fn solve(&self, z: &EdgeSet, depth: usize, parent_lambda: Option<usize>) -> Result<Option<CutSet>> {
        self.counters.nodes.fetch_add(1, Ordering::Relaxed);
        self.counters.depth_max.fetch_max(depth, Ordering::Relaxed);
        self.counters.flow_calls.fetch_add(1, Ordering::Relaxed);
        let g = &self.inst.graph;
        let cert = match max_flow_z(g, &self.inst.x, &self.inst.y, z, self.k)? {
            FlowOutcome::NoCutWithinK => return Ok(None),
            FlowOutcome::Certificate(c) => c,
        };
        let respecting = is_budget_respecting(g, &cert.cut, &self.inst.budgets);
        if parent_lambda == Some(cert.lambda) {
            self.counters.same_lambda.fetch_add(1, Ordering::Relaxed);
            if !respecting {
                return Err(Error::Internal(format!(
                    "child kept flow value {} but its closest cut {:?} is not budget-respecting",
                    cert.lambda,
                    cert.cut.numbers()
                )));
            }
        }
        if respecting {
            return Ok(Some(cert.cut));
        }
        let tuples = ordered_branch_tuples(cert.lambda, &self.inst.budgets)?;
        if self.opts.parallel {
            let found = tuples
                .par_iter()
                .map(|t| self.child(z, &cert, t, depth))
                .find_map_first(|r| match r {
                    Ok(None) => None,
                    other => Some(other),
                });
            return found.unwrap_or(Ok(None));
        }
        for t in &tuples {
            if let Some(c) = self.child(z, &cert, t, depth)? {
                return Ok(Some(c));
            }
        }
        Ok(None)
    }

    fn child(&self, z: &EdgeSet, cert: &FlowCertificate, tuple: &[u64], depth: usize) -> Result<Option<CutSet>> {
        let z_hat = shrink_deletable(&self.inst.graph, z, &cert.paths, tuple, None);
        self.solve(&z_hat, depth + 1, Some(cert.lambda))
    }
}

/// Decides a multi-budgeted cut instance, returning a budget-respecting
/// XY-cut when one exists. Requires every budget to be at least one.
pub fn solve_mbcut(instance: &CutInstance) -> Result<(Option<CutSet>, SolveStats)> {
    solve_mbcut_with(instance, SolverOptions::default())
}

pub fn solve_mbcut_with(instance: &CutInstance, opts: SolverOptions) -> Result<(Option<CutSet>, SolveStats)> {
    instance.validate_top_level()?;
    solve_mbcut_relaxed(instance, opts)
}

/// Same as [`solve_mbcut_with`] but accepts budgets below one, as produced
/// inside other algorithms. A negative budget makes the instance infeasible.
pub fn solve_mbcut_relaxed(instance: &CutInstance, opts: SolverOptions) -> Result<(Option<CutSet>, SolveStats)> {
    let start = Instant::now();
    if instance.budgets.any_negative() {
        return Ok((None, SolveStats::default()));
    }
    let search = Search {
        inst: instance,
        k: instance.budgets.total() as usize,
        opts,
        counters: Counters::default(),
    };
    let z = instance.graph.colored_edges();
    let cut = search.solve(&z, 1, None)?;
    Ok((cut, search.counters.snapshot(start.elapsed())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{GraphBuilder, Vertex};

    fn v(n: usize) -> Vertex {
        Vertex::from_number(n)
    }

    fn masks(tuples: &[BranchTuple]) -> Vec<Vec<u64>> {
        tuples.to_vec()
    }

    #[test]
    fn tuple_counts() {
        assert_eq!(
            masks(&branch_tuples(1, &Budgets(vec![1])).unwrap()),
            vec![vec![0], vec![1]]
        );
        assert_eq!(
            masks(&branch_tuples(2, &Budgets(vec![1])).unwrap()),
            vec![vec![0], vec![1], vec![2]]
        );
        assert_eq!(branch_tuples(2, &Budgets(vec![1, 1])).unwrap().len(), 9);
        assert_eq!(branch_tuples(3, &Budgets(vec![0, 2])).unwrap().len(), 7);
    }

    #[test]
    fn ordered_tuples_put_small_guesses_first() {
        let t = ordered_branch_tuples(2, &Budgets(vec![1, 1])).unwrap();
        assert_eq!(t[0], vec![0, 0]);
        let sums: Vec<u32> = t.iter().map(|m| m.iter().map(|x| x.count_ones()).sum()).collect();
        assert!(sums.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn root_cut_already_respecting() {
        let mut b = GraphBuilder::new(2, 2);
        b.arc(1, 2, &[1]);
        b.arc(1, 2, &[2]);
        let inst = CutInstance::new(b.build().unwrap(), vec![v(1)], vec![v(2)], Budgets(vec![1, 1])).unwrap();
        let (cut, stats) = solve_mbcut(&inst).unwrap();
        assert_eq!(cut, Some(CutSet::from_numbers([1, 2])));
        assert_eq!(stats.nodes, 1);
    }

    #[test]
    fn closest_edge_is_the_witness() {
        let mut b = GraphBuilder::new(3, 1);
        b.arc(1, 2, &[1]);
        b.arc(2, 3, &[1]);
        let inst = CutInstance::new(b.build().unwrap(), vec![v(1)], vec![v(3)], Budgets(vec![1])).unwrap();
        let (cut, _) = solve_mbcut(&inst).unwrap();
        assert_eq!(cut, Some(CutSet::from_numbers([2])));
    }

    #[test]
    fn zero_budget_gadget_is_infeasible() {
        // s=1 → u=2 (color 1), u → v=3 (colorless), v → t=4 (color 2)
        let mut b = GraphBuilder::new(4, 2);
        b.arc(1, 2, &[1]);
        b.arc(2, 3, &[]);
        b.arc(3, 4, &[2]);
        let inst = CutInstance::new(b.build().unwrap(), vec![v(1)], vec![v(4)], Budgets(vec![0, 0])).unwrap();
        assert!(solve_mbcut(&inst).is_err(), "top-level validation demands k_i ≥ 1");
        let (cut, _) = solve_mbcut_relaxed(&inst, SolverOptions::default()).unwrap();
        assert_eq!(cut, None);
    }

    #[test]
    fn factorial_two_needs_branching() {
        // path 1: s→a (c1), a→t (c2); path 2: s→b (c1), b→t (c2)
        let mut b = GraphBuilder::new(4, 2);
        b.arc(1, 2, &[1]);
        b.arc(2, 4, &[2]);
        b.arc(1, 3, &[1]);
        b.arc(3, 4, &[2]);
        let inst = CutInstance::new(b.build().unwrap(), vec![v(1)], vec![v(4)], Budgets(vec![1, 1])).unwrap();
        let (cut, stats) = solve_mbcut(&inst).unwrap();
        let cut = cut.unwrap();
        assert!(is_budget_respecting(&inst.graph, &cut, &inst.budgets));
        assert_eq!(cut.len(), 2);
        assert!(stats.depth_max <= 3);
        let (par, _) = solve_mbcut_with(&inst, SolverOptions { parallel: true }).unwrap();
        assert_eq!(par, Some(cut));
    }

    #[test]
    fn colorless_path_is_no() {
        let mut b = GraphBuilder::new(2, 1);
        b.arc(1, 2, &[]);
        let inst = CutInstance::new(b.build().unwrap(), vec![v(1)], vec![v(2)], Budgets(vec![3])).unwrap();
        assert_eq!(solve_mbcut(&inst).unwrap().0, None);
    }
}
