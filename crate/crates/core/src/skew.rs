//! Multi-budgeted skew edge multicut and directed feedback arc set.
//!
//! Skew multicut branches on important cuts separating the last source from
//! all remaining sinks. Feedback arc set guesses the topological order of a
//! small feedback vertex set, splits those vertices into terminal pairs and
//! hands the result to the skew solver.

use std::time::Instant;

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::Result;
use crate::graph::{
    is_acyclic, reachable, topological_order, Budgets, ColorSet, ColoredDigraph, CutSet, Edge, EdgeId, EdgeSet, Vertex,
    VertexSet,
};
use crate::important::enumerate_candidates;
use crate::instance::{CutInstance, DfasInstance, SkewInstance};
use crate::solver::{SolveStats, SolverOptions};

/// True when `cut` destroys every `s_i → t_j` path with `i ≥ j`.
pub fn is_skew_multicut(instance: &SkewInstance, cut: &CutSet) -> bool {
    let g = &instance.graph;
    let removed = cut.to_edge_set(g.num_edges());
    instance.pairs.iter().enumerate().all(|(i, &(s, _))| {
        let r = reachable(g, &[s], &removed);
        instance.pairs[..=i].iter().all(|&(_, t)| !r.contains(t))
    })
}

/// One pruning probe on the first `q` pairs of `G − removed`: if `s_q`
/// reaches none of `t_1..t_q`, returns the vertices it reaches. Those lie on
/// no `s_j → t_{j'}` path with `j, j' ≤ q` and may be discarded.
pub fn prune_probe(
    graph: &ColoredDigraph,
    removed: &EdgeSet,
    pairs: &[(Vertex, Vertex)],
    q: usize,
) -> Option<VertexSet> {
    let s = pairs[q - 1].0;
    let r = reachable(graph, &[s], removed);
    pairs[..q].iter().all(|&(_, t)| !r.contains(t)).then_some(r)
}

fn remove_incident(graph: &ColoredDigraph, removed: &mut EdgeSet, vertices: &VertexSet) {
    for v in vertices.iter() {
        for &e in graph.out_edges(v).iter().chain(graph.in_edges(v)) {
            removed.insert(e);
        }
    }
}

struct SkewSearch<'a> {
    inst: &'a SkewInstance,
    opts: SolverOptions,
}

impl SkewSearch<'_> {
    /// Returns the cut edges chosen below this node (original ids).
    fn solve(
        &self,
        mut removed: EdgeSet,
        budgets: Budgets,
        mut q: usize,
        depth: usize,
        stats: &mut SolveStats,
    ) -> Result<Option<CutSet>> {
        stats.nodes += 1;
        stats.depth_max = stats.depth_max.max(depth);
        let g = &self.inst.graph;
        if budgets.any_negative() {
            return Ok(None);
        }
        // t_q is kept as an ordinary vertex: it may still sit on an s_j → t_{j'} path with j' < q
        loop {
            if q == 0 {
                return Ok(Some(CutSet::empty()));
            }
            let s = self.inst.pairs[q - 1].0;
            if self.inst.pairs[..q].iter().any(|&(_, t)| t == s) {
                return Ok(None);
            }
            match prune_probe(g, &removed, &self.inst.pairs, q) {
                Some(visited) => {
                    remove_incident(g, &mut removed, &visited);
                    q -= 1;
                }
                None => break,
            }
        }

        let s = self.inst.pairs[q - 1].0;
        let ys: Vec<Vertex> = self.inst.pairs[..q].iter().map(|&(_, t)| t).collect();
        let (sub, original) = g.without_edges(&removed);
        let cut_inst = CutInstance::new(sub, vec![s], ys, budgets.clone())?;
        let z = cut_inst.graph.colored_edges();
        let (family, enum_stats) = enumerate_candidates(&cut_inst, &z)?;
        stats.flow_calls += enum_stats.flow_calls;

        let branch = |d: &CutSet, stats: &mut SolveStats| -> Result<Option<CutSet>> {
            let d_orig = CutSet::new(d.edges().iter().map(|e| original[e.index()]));
            let rest_budgets = budgets.minus(&d.usage(&cut_inst.graph));
            let mut rest_removed = removed.clone();
            for &e in d_orig.edges() {
                rest_removed.insert(e);
            }
            Ok(self
                .solve(rest_removed, rest_budgets, q, depth + 1, stats)?
                .map(|rest| d_orig.union(&rest)))
        };

        let cuts: Vec<CutSet> = family.into_vec();
        if self.opts.parallel {
            let results: Vec<(Result<Option<CutSet>>, SolveStats)> = cuts
                .par_iter()
                .map(|d| {
                    let mut local = SolveStats::default();
                    let r = branch(d, &mut local);
                    (r, local)
                })
                .collect();
            for (r, local) in results {
                stats.merge(&local);
                if let Some(found) = r? {
                    return Ok(Some(found));
                }
            }
            return Ok(None);
        }
        for d in &cuts {
            if let Some(found) = branch(d, stats)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }
}

/// Decides a skew multicut instance whose budgets are all at least one.
pub fn solve_skew(instance: &SkewInstance) -> Result<(Option<CutSet>, SolveStats)> {
    solve_skew_with(instance, SolverOptions::default())
}

pub fn solve_skew_with(instance: &SkewInstance, opts: SolverOptions) -> Result<(Option<CutSet>, SolveStats)> {
    instance.validate_top_level()?;
    solve_skew_relaxed(instance, opts)
}

/// Same as [`solve_skew_with`] without the `k_i ≥ 1` check; a negative
/// budget answers no.
pub fn solve_skew_relaxed(instance: &SkewInstance, opts: SolverOptions) -> Result<(Option<CutSet>, SolveStats)> {
    let start = Instant::now();
    let search = SkewSearch { inst: instance, opts };
    let mut stats = SolveStats::default();
    let removed = EdgeSet::empty(instance.graph.num_edges());
    let cut = search.solve(removed, instance.budgets.clone(), instance.pairs.len(), 1, &mut stats)?;
    stats.elapsed = start.elapsed();
    Ok((cut, stats))
}

/// Edge correspondence of a vertex split: `original[e']` is the source edge
/// of split edge `e'`, or `None` for the synthetic `(t_i, s_i)` arcs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitMap {
    pub original: Vec<Option<EdgeId>>,
    /// Split vertex pairs `(s_i, t_i)` in permutation order.
    pub pairs: Vec<(Vertex, Vertex)>,
}

impl SplitMap {
    /// Split-graph edges back to original edges; synthetic arcs are dropped.
    pub fn to_original(&self, cut: &CutSet) -> CutSet {
        cut.edges().iter().filter_map(|e| self.original[e.index()]).collect()
    }

    /// Original edges to their split-graph copies.
    pub fn to_split(&self, cut: &CutSet) -> CutSet {
        self.original
            .iter()
            .enumerate()
            .filter(|(_, o)| o.is_some_and(|e| cut.contains(e)))
            .map(|(i, _)| EdgeId(i as u32))
            .collect()
    }
}

/// Splits each `w_i` of `order` into `s_i` (keeps `w_i`'s number and its
/// out-edges) and a fresh `t_i = n + i` (takes its in-edges), then appends a
/// colorless arc `(t_i, s_i)`. Original edges keep their ids.
pub fn dfas_to_skew(graph: &ColoredDigraph, order: &[Vertex], budgets: &Budgets) -> Result<(SkewInstance, SplitMap)> {
    let n = graph.num_vertices();
    let mut sink_of = vec![None; n];
    for (i, &w) in order.iter().enumerate() {
        sink_of[w.index()] = Some(Vertex((n + i) as u32));
    }
    let mut edges: Vec<Edge> = graph
        .edges()
        .iter()
        .map(|e| Edge {
            head: sink_of[e.head.index()].unwrap_or(e.head),
            ..*e
        })
        .collect();
    let mut original: Vec<Option<EdgeId>> = graph.edge_ids().map(Some).collect();
    let mut pairs = Vec::with_capacity(order.len());
    for (i, &w) in order.iter().enumerate() {
        let t = Vertex((n + i) as u32);
        edges.push(Edge {
            tail: t,
            head: w,
            colors: ColorSet::EMPTY,
        });
        original.push(None);
        pairs.push((w, t));
    }
    let split = ColoredDigraph::new(n + order.len(), graph.num_colors(), edges)?;
    let inst = SkewInstance::new(split, budgets.clone(), pairs.clone())?;
    Ok((inst, SplitMap { original, pairs }))
}

/// Order in which the vertices of `w` appear in a topological order of `G − cut`.
pub fn induced_permutation(graph: &ColoredDigraph, cut: &CutSet, w: &[Vertex]) -> Option<Vec<Vertex>> {
    let order = topological_order(graph, &cut.to_edge_set(graph.num_edges()))?;
    Some(order.into_iter().filter(|v| w.contains(v)).collect())
}

fn heads(graph: &ColoredDigraph, arcs: &CutSet) -> Vec<Vertex> {
    arcs.edges()
        .iter()
        .map(|&e| graph.edge(e).head)
        .sorted()
        .dedup()
        .collect()
}

/// Tries every permutation of `w` (lexicographic); returns the first mapped witness.
fn branch_on_permutations(
    graph: &ColoredDigraph,
    w: &[Vertex],
    budgets: &Budgets,
    opts: SolverOptions,
    stats: &mut SolveStats,
) -> Result<Option<CutSet>> {
    let attempt = |perm: &Vec<Vertex>| -> Result<(Option<CutSet>, SolveStats)> {
        let (skew, map) = dfas_to_skew(graph, perm, budgets)?;
        let (cut, st) = solve_skew_relaxed(&skew, SolverOptions::default())?;
        Ok((cut.map(|c| map.to_original(&c)), st))
    };
    let perms: Vec<Vec<Vertex>> = w.iter().copied().permutations(w.len()).collect();
    if opts.parallel {
        let results: Vec<Result<(Option<CutSet>, SolveStats)>> = perms.par_iter().map(attempt).collect();
        for r in results {
            let (cut, st) = r?;
            stats.merge(&st);
            if cut.is_some() {
                return Ok(cut);
            }
        }
        return Ok(None);
    }
    for perm in &perms {
        let (cut, st) = attempt(perm)?;
        stats.merge(&st);
        if cut.is_some() {
            return Ok(cut);
        }
    }
    Ok(None)
}

/// Classic directed feedback arc set of size at most `k`, by iterative
/// compression: edges are added one at a time, and whenever the running
/// solution overflows to `k + 1` arcs, the heads of those arcs form a
/// feedback vertex set that seeds a single-color skew multicut search.
pub fn classic_dfas(graph: &ColoredDigraph, k: usize) -> Result<Option<CutSet>> {
    classic_dfas_with(graph, k, SolverOptions::default(), &mut SolveStats::default())
}

fn classic_dfas_with(
    graph: &ColoredDigraph,
    k: usize,
    opts: SolverOptions,
    stats: &mut SolveStats,
) -> Result<Option<CutSet>> {
    let mono_edges: Vec<Edge> = graph
        .edges()
        .iter()
        .map(|e| Edge {
            colors: ColorSet::single(1),
            ..*e
        })
        .collect();
    let mono = ColoredDigraph::new(graph.num_vertices(), 1, mono_edges)?;
    let budgets = Budgets(vec![k as i64]);
    let mut solution = CutSet::empty();
    for i in 0..graph.num_edges() {
        // G_i keeps the first i + 1 edges, so its ids coincide with the originals
        let later = EdgeSet::from_edges(graph.num_edges(), (i + 1..graph.num_edges()).map(|j| EdgeId(j as u32)));
        let (prefix, _) = mono.without_edges(&later);
        if is_acyclic(&prefix, &solution.to_edge_set(prefix.num_edges())) {
            continue;
        }
        let grown = solution.union(&CutSet::new([EdgeId(i as u32)]));
        if grown.len() <= k {
            solution = grown;
            continue;
        }
        let w = heads(&prefix, &grown);
        match branch_on_permutations(&prefix, &w, &budgets, opts, stats)? {
            Some(s) => solution = s,
            None => return Ok(None),
        }
    }
    Ok(Some(solution))
}

/// Decides multi-budgeted feedback arc set (budgets at least one).
pub fn solve_dfas(instance: &DfasInstance) -> Result<(Option<CutSet>, SolveStats)> {
    solve_dfas_with(instance, SolverOptions::default())
}

pub fn solve_dfas_with(instance: &DfasInstance, opts: SolverOptions) -> Result<(Option<CutSet>, SolveStats)> {
    instance.validate_top_level()?;
    let start = Instant::now();
    let g = &instance.graph;
    let mut stats = SolveStats::default();
    let k = instance.budgets.total() as usize;
    let answer = match classic_dfas_with(g, k, opts, &mut stats)? {
        None => None,
        Some(fas) => {
            let w = heads(g, &fas);
            if w.is_empty() {
                Some(CutSet::empty())
            } else {
                branch_on_permutations(g, &w, &instance.budgets, opts, &mut stats)?
            }
        }
    };
    stats.elapsed = start.elapsed();
    Ok((answer, stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_budget_respecting, GraphBuilder};

    fn v(n: usize) -> Vertex {
        Vertex::from_number(n)
    }

    #[test]
    fn single_pair_single_edge() {
        let mut b = GraphBuilder::new(2, 1);
        b.arc(1, 2, &[1]);
        let inst = SkewInstance::new(b.build().unwrap(), Budgets(vec![1]), vec![(v(1), v(2))]).unwrap();
        assert_eq!(solve_skew(&inst).unwrap().0, Some(CutSet::from_numbers([1])));
    }

    #[test]
    fn no_pairs_is_trivially_yes() {
        let mut b = GraphBuilder::new(2, 1);
        b.arc(1, 2, &[]);
        let inst = SkewInstance::new(b.build().unwrap(), Budgets(vec![1]), vec![]).unwrap();
        assert_eq!(solve_skew(&inst).unwrap().0, Some(CutSet::empty()));
    }

    fn skew_pairs(color: &[usize]) -> SkewInstance {
        // s1=1, t1=2, s2=3, t2=4; edges s2→t1 and s1→t2
        let mut b = GraphBuilder::new(4, 1);
        b.arc(3, 2, color);
        b.arc(1, 4, &[1]);
        SkewInstance::new(b.build().unwrap(), Budgets(vec![1]), vec![(v(1), v(2)), (v(3), v(4))]).unwrap()
    }

    #[test]
    fn skew_direction_matters() {
        let inst = skew_pairs(&[1]);
        let (cut, _) = solve_skew(&inst).unwrap();
        assert_eq!(cut, Some(CutSet::from_numbers([1])));
        assert!(is_skew_multicut(&inst, &cut.unwrap()));
        assert_eq!(solve_skew(&skew_pairs(&[])).unwrap().0, None);
    }

    #[test]
    fn pruning_keeps_last_sink_usable() {
        // s1=1,t1=2; s2=3,t2=4; s2 reaches nothing, but s1→t2→t1 must still be cut
        let mut b = GraphBuilder::new(4, 1);
        b.arc(1, 4, &[]);
        b.arc(4, 2, &[1]);
        let inst = SkewInstance::new(b.build().unwrap(), Budgets(vec![1]), vec![(v(1), v(2)), (v(3), v(4))]).unwrap();
        assert_eq!(solve_skew(&inst).unwrap().0, Some(CutSet::from_numbers([2])));
        let mut tight = inst.clone();
        tight.budgets = Budgets(vec![0]);
        assert_eq!(solve_skew_relaxed(&tight, SolverOptions::default()).unwrap().0, None);
    }

    #[test]
    fn split_of_two_cycle() {
        let mut b = GraphBuilder::new(2, 1);
        b.arc(1, 2, &[1]);
        b.arc(2, 1, &[1]);
        let g = b.build().unwrap();
        let (skew, map) = dfas_to_skew(&g, &[v(1)], &Budgets(vec![1])).unwrap();
        let ends: Vec<(usize, usize)> = skew
            .graph
            .edges()
            .iter()
            .map(|e| (e.tail.number(), e.head.number()))
            .collect();
        assert_eq!(ends, vec![(1, 2), (2, 3), (3, 1)]);
        assert_eq!(skew.pairs, vec![(v(1), v(3))]);
        assert_eq!(map.original, vec![Some(EdgeId(0)), Some(EdgeId(1)), None]);
        assert!(skew.graph.edge(EdgeId(2)).colors.is_empty());
    }

    #[test]
    fn split_of_self_loop_keeps_color() {
        let mut b = GraphBuilder::new(1, 2);
        b.arc(1, 1, &[2]);
        let g = b.build().unwrap();
        let (skew, _) = dfas_to_skew(&g, &[v(1)], &Budgets(vec![1, 1])).unwrap();
        let e = skew.graph.edge(EdgeId(0));
        assert_eq!((e.tail.number(), e.head.number()), (1, 2));
        assert_eq!(e.colors, ColorSet::single(2));
    }

    #[test]
    fn classic_on_triangle_and_dag() {
        let mut b = GraphBuilder::new(3, 0);
        b.arc(1, 2, &[]);
        b.arc(2, 3, &[]);
        b.arc(3, 1, &[]);
        let tri = b.build().unwrap();
        let s = classic_dfas(&tri, 1).unwrap().unwrap();
        assert_eq!(s.len(), 1);
        assert!(is_acyclic(&tri, &s.to_edge_set(3)));
        assert_eq!(classic_dfas(&tri, 0).unwrap(), None);

        let mut b = GraphBuilder::new(3, 0);
        b.arc(1, 2, &[]);
        b.arc(2, 3, &[]);
        assert_eq!(classic_dfas(&b.build().unwrap(), 0).unwrap(), Some(CutSet::empty()));
    }

    #[test]
    fn dfas_examples() {
        let mut b = GraphBuilder::new(2, 1);
        b.arc(1, 2, &[1]);
        b.arc(2, 1, &[1]);
        let inst = DfasInstance::new(b.build().unwrap(), Budgets(vec![1])).unwrap();
        assert_eq!(solve_dfas(&inst).unwrap().0.map(|c| c.len()), Some(1));

        let mut b = GraphBuilder::new(4, 2);
        b.arc(1, 2, &[1]);
        b.arc(2, 1, &[1]);
        b.arc(3, 4, &[2]);
        b.arc(4, 3, &[2]);
        let inst = DfasInstance::new(b.build().unwrap(), Budgets(vec![1, 1])).unwrap();
        let s = solve_dfas(&inst).unwrap().0.unwrap();
        assert!(is_budget_respecting(&inst.graph, &s, &inst.budgets));
        assert!(is_acyclic(&inst.graph, &s.to_edge_set(4)));
        let par = solve_dfas_with(&inst, SolverOptions { parallel: true }).unwrap().0;
        assert_eq!(par, Some(s));

        let mut b = GraphBuilder::new(2, 1);
        b.arc(1, 2, &[]);
        b.arc(2, 1, &[]);
        let inst = DfasInstance::new(b.build().unwrap(), Budgets(vec![3])).unwrap();
        assert_eq!(solve_dfas(&inst).unwrap().0, None);

        let mut b = GraphBuilder::new(2, 1);
        b.arc(1, 2, &[1]);
        let inst = DfasInstance::new(b.build().unwrap(), Budgets(vec![1])).unwrap();
        assert_eq!(solve_dfas(&inst).unwrap().0, Some(CutSet::empty()));
    }

    #[test]
    fn colorless_self_loop_is_no() {
        let mut b = GraphBuilder::new(1, 1);
        b.arc(1, 1, &[]);
        let inst = DfasInstance::new(b.build().unwrap(), Budgets(vec![1])).unwrap();
        assert_eq!(solve_dfas(&inst).unwrap().0, None);
    }
}
