//! Brute-force reference implementations. Slow on purpose, definition-literal,
//! and guarded so they refuse oversized inputs instead of running unbounded.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{
    is_acyclic, is_budget_respecting, is_cut, is_minimal_cut, out_boundary, reachable, reachable_after, Budgets,
    ColoredDigraph, CutClass, CutSet, EdgeId, EdgeSet, Vertex, VertexSet,
};
use crate::important::{CutFamily, FamilyOrigin};
use crate::instance::{ChainInstance, CutInstance, DfasInstance, SkewInstance, WeightedCutInstance};
use crate::skew::is_skew_multicut;

/// Limits every oracle checks before enumerating.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeGuard {
    /// Largest edge universe an enumeration may range over.
    pub max_colored_edges: usize,
    /// Largest number of candidate subsets an enumeration may visit.
    pub max_subsets: u64,
}

impl Default for SizeGuard {
    fn default() -> Self {
        SizeGuard {
            max_colored_edges: 20,
            max_subsets: 1 << 20,
        }
    }
}

impl SizeGuard {
    /// Reads `MBCUT_GUARD` (`<edges>` or `<edges>,<subsets>`), falling back to defaults.
    pub fn from_env() -> Result<Self> {
        match std::env::var("MBCUT_GUARD") {
            Ok(spec) => Self::parse(&spec),
            Err(_) => Ok(Self::default()),
        }
    }

    pub fn parse(spec: &str) -> Result<Self> {
        let mut guard = Self::default();
        let mut parts = spec.split(',').map(str::trim);
        let bad = || Error::invalid(format!("bad guard specification `{spec}`"));
        if let Some(p) = parts.next() {
            guard.max_colored_edges = p.parse().map_err(|_| bad())?;
        }
        if let Some(p) = parts.next() {
            guard.max_subsets = p.parse().map_err(|_| bad())?;
        }
        if parts.next().is_some() {
            return Err(bad());
        }
        Ok(guard)
    }

    pub fn unlimited() -> Self {
        SizeGuard {
            max_colored_edges: usize::MAX,
            max_subsets: u64::MAX,
        }
    }

    fn check_universe(&self, size: usize, what: &str) -> Result<()> {
        if size > self.max_colored_edges {
            return Err(Error::Guard(format!(
                "{what} has {size} elements, above the limit of {}",
                self.max_colored_edges
            )));
        }
        Ok(())
    }

    fn check_subsets(&self, count: u64, what: &str) -> Result<()> {
        if count > self.max_subsets {
            return Err(Error::Guard(format!(
                "{what} needs {count} candidate subsets, above the limit of {}",
                self.max_subsets
            )));
        }
        Ok(())
    }
}

fn binomial(n: u64, r: u64) -> u64 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u64 = 1;
    for i in 0..r {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

/// Number of subsets of an `n`-set with at most `max` elements.
pub fn subsets_up_to(n: usize, max: usize) -> u64 {
    (0..=max.min(n)).fold(0u64, |acc, r| acc.saturating_add(binomial(n as u64, r as u64)))
}

/// All edge subsets of `universe` of size `0..=max_size`, by size then lexicographically.
fn subsets(universe: &[EdgeId], max_size: usize) -> impl Iterator<Item = Vec<EdgeId>> + '_ {
    (0..=max_size.min(universe.len())).flat_map(move |r| universe.iter().copied().combinations(r))
}

/// Every minimal XY-cut of size at most `max_size` that uses only edges of `universe`.
pub fn minimal_cuts_within(
    graph: &ColoredDigraph,
    x: &[Vertex],
    y: &[Vertex],
    universe: &EdgeSet,
    max_size: usize,
    guard: &SizeGuard,
) -> Result<Vec<CutSet>> {
    let pool: Vec<EdgeId> = universe.iter().collect();
    guard.check_universe(pool.len(), "edge universe")?;
    guard.check_subsets(subsets_up_to(pool.len(), max_size), "minimal-cut enumeration")?;
    let mut out = Vec::new();
    for subset in subsets(&pool, max_size) {
        let cut = CutSet::new(subset);
        if is_minimal_cut(graph, x, y, &cut) == CutClass::Minimal {
            out.push(cut);
        }
    }
    Ok(out)
}

/// All minimal XY-cuts of size at most `max_size` over every edge of the graph.
pub fn brute_minimal_cuts(
    graph: &ColoredDigraph,
    x: &[Vertex],
    y: &[Vertex],
    max_size: usize,
    guard: &SizeGuard,
) -> Result<CutFamily> {
    let all = EdgeSet::full(graph.num_edges());
    let cuts = minimal_cuts_within(graph, x, y, &all, max_size, guard)?;
    Ok(CutFamily::from_cuts(cuts, FamilyOrigin::Brute))
}

/// Minimum `Z`-respecting XY-cuts of size at most `limit`: `Some((λ, all
/// minimum cuts))`, or `None` when none exists within the limit.
pub fn brute_minimum_z_cuts(
    graph: &ColoredDigraph,
    x: &[Vertex],
    y: &[Vertex],
    z: &EdgeSet,
    limit: usize,
    guard: &SizeGuard,
) -> Result<Option<(usize, Vec<CutSet>)>> {
    let pool: Vec<EdgeId> = z.iter().collect();
    guard.check_universe(pool.len(), "deletable set")?;
    guard.check_subsets(subsets_up_to(pool.len(), limit), "minimum-cut enumeration")?;
    for r in 0..=limit.min(pool.len()) {
        let found: Vec<CutSet> = pool
            .iter()
            .copied()
            .combinations(r)
            .map(CutSet::new)
            .filter(|c| is_cut(graph, x, y, &c.to_edge_set(graph.num_edges())))
            .collect();
        if !found.is_empty() {
            return Ok(Some((r, found)));
        }
    }
    Ok(None)
}

fn budget_sum(budgets: &Budgets) -> usize {
    budgets.0.iter().map(|&k| k.max(0) as usize).sum()
}

/// Exhaustive multi-budgeted cut: a smallest budget-respecting XY-cut, if any.
pub fn brute_solve_mbcut(instance: &CutInstance, guard: &SizeGuard) -> Result<Option<CutSet>> {
    if instance.budgets.any_negative() {
        return Ok(None);
    }
    let g = &instance.graph;
    let pool: Vec<EdgeId> = g.colored_edges().iter().collect();
    let k = budget_sum(&instance.budgets);
    guard.check_universe(pool.len(), "colored edge set")?;
    guard.check_subsets(subsets_up_to(pool.len(), k), "cut search")?;
    for subset in subsets(&pool, k) {
        let cut = CutSet::new(subset);
        if is_budget_respecting(g, &cut, &instance.budgets)
            && is_cut(g, &instance.x, &instance.y, &cut.to_edge_set(g.num_edges()))
        {
            return Ok(Some(cut));
        }
    }
    Ok(None)
}

/// Second, independent route for multi-budgeted cut: scan source-side vertex
/// sets `R ⊇ X` avoiding `Y` and test whether `δ⁺(R)` fits the budgets.
/// Scales with `2^|V|` instead of the number of edges.
pub fn brute_solve_mbcut_by_vertex_sets(instance: &CutInstance, guard: &SizeGuard) -> Result<Option<CutSet>> {
    if instance.budgets.any_negative() {
        return Ok(None);
    }
    let g = &instance.graph;
    let free: Vec<Vertex> = g
        .vertices()
        .filter(|v| !instance.x.contains(v) && !instance.y.contains(v))
        .collect();
    guard.check_universe(free.len(), "free vertex set")?;
    guard.check_subsets(
        1u64.checked_shl(free.len() as u32).unwrap_or(u64::MAX),
        "vertex-set scan",
    )?;
    let mut best: Option<CutSet> = None;
    for mask in 0u64..(1 << free.len()) {
        let r = VertexSet::from_vertices(
            g.num_vertices(),
            instance.x.iter().copied().chain(
                free.iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &v)| v),
            ),
        );
        let cut = out_boundary(g, &r);
        if is_budget_respecting(g, &cut, &instance.budgets)
            && best.as_ref().is_none_or(|b| (cut.len(), &cut) < (b.len(), b))
        {
            best = Some(cut);
        }
    }
    Ok(best)
}

/// Exhaustive chain ℓ-SAT: delete whole paths, at most `k` of them.
pub fn brute_solve_chain(instance: &ChainInstance, guard: &SizeGuard) -> Result<Option<CutSet>> {
    let g = &instance.graph;
    guard.check_universe(g.num_edges(), "chain instance")?;
    guard.check_subsets(subsets_up_to(instance.paths.len(), instance.k), "path-subset search")?;
    for r in 0..=instance.k.min(instance.paths.len()) {
        for chosen in (0..instance.paths.len()).combinations(r) {
            let removed = EdgeSet::from_edges(
                g.num_edges(),
                chosen.iter().flat_map(|&p| instance.paths[p].iter().copied()),
            );
            let reach = reachable(g, &[instance.s], &removed);
            if !reach.contains(instance.t) {
                return Ok(Some(out_boundary(g, &reach)));
            }
        }
    }
    Ok(None)
}

/// Cuts of `family` that no other member beats in closeness to the sink:
/// `C` survives unless some other `D` has `R(C) ⊆ R(D)`.
pub fn closest_subfamily(graph: &ColoredDigraph, s: Vertex, family: &[CutSet]) -> Vec<CutSet> {
    let reach: Vec<VertexSet> = family.iter().map(|c| reachable_after(graph, &[s], c)).collect();
    family
        .iter()
        .enumerate()
        .filter(|&(i, _)| !(0..family.len()).any(|j| j != i && reach[i].is_subset(&reach[j])))
        .map(|(_, c)| c.clone())
        .collect()
}

/// `(F, G)` for a weighted st-cut instance: `F` holds the minimal st-cuts of
/// cardinality at most `k` having the least weight among such cuts (ties
/// kept), `G` the members of `F` that no other member of `F` is closer to `t` than.
pub fn brute_closest_families_weighted(
    instance: &WeightedCutInstance,
    guard: &SizeGuard,
) -> Result<(CutFamily, CutFamily)> {
    let g = &instance.graph;
    let all = EdgeSet::full(g.num_edges());
    let minimal = minimal_cuts_within(g, &[instance.s], &[instance.t], &all, instance.k, guard)?;
    let best = minimal.iter().map(|c| instance.weight_of(c.edges())).min();
    let f: Vec<CutSet> = minimal
        .into_iter()
        .filter(|c| Some(instance.weight_of(c.edges())) == best)
        .collect();
    let closest = closest_subfamily(g, instance.s, &f);
    Ok((
        CutFamily::from_cuts(f, FamilyOrigin::Brute),
        CutFamily::from_cuts(closest, FamilyOrigin::Brute),
    ))
}

/// Number of input paths a cut touches.
pub fn chain_cost(instance: &ChainInstance, cut: &CutSet) -> usize {
    let owner = instance.path_of_edge();
    cut.edges().iter().map(|e| owner[e.index()]).unique().count()
}

/// `(F, G)` for a chain instance that is tight at `k`: `F` holds the
/// inclusion-minimal solutions, `G` those with no other member closer to `t`.
pub fn brute_closest_families_chain(instance: &ChainInstance, guard: &SizeGuard) -> Result<(CutFamily, CutFamily)> {
    if brute_solve_chain(instance, guard)?.is_none() {
        return Err(Error::Precondition(format!(
            "chain instance has no solution at k={}",
            instance.k
        )));
    }
    if instance.k > 0 && brute_solve_chain(&instance.with_k(instance.k - 1), guard)?.is_some() {
        return Err(Error::Precondition(format!(
            "chain instance already has a solution at k-1={}",
            instance.k - 1
        )));
    }
    let g = &instance.graph;
    let path_sets = subsets_up_to(instance.paths.len(), instance.k);
    let per_set = 1u64 << (instance.k * instance.max_path_len).min(63);
    guard.check_subsets(path_sets.saturating_mul(per_set), "chain family enumeration")?;

    let mut found = std::collections::BTreeSet::new();
    for chosen in (0..instance.paths.len()).combinations(instance.k.min(instance.paths.len())) {
        let universe = EdgeSet::from_edges(
            g.num_edges(),
            chosen.iter().flat_map(|&p| instance.paths[p].iter().copied()),
        );
        let size = universe.len();
        for cut in minimal_cuts_within(
            g,
            &[instance.s],
            &[instance.t],
            &universe,
            size,
            &SizeGuard::unlimited(),
        )? {
            if chain_cost(instance, &cut) <= instance.k {
                found.insert(cut);
            }
        }
    }
    let f: Vec<CutSet> = found.into_iter().collect();
    let closest = closest_subfamily(g, instance.s, &f);
    Ok((
        CutFamily::from_cuts(f, FamilyOrigin::Brute),
        CutFamily::from_cuts(closest, FamilyOrigin::Brute),
    ))
}

/// Decides weighted st-cut by scanning source-side vertex sets; any cut
/// contains the boundary of its own reachable set, so boundaries suffice.
pub fn brute_solve_weighted(instance: &WeightedCutInstance, guard: &SizeGuard) -> Result<Option<CutSet>> {
    let g = &instance.graph;
    let free: Vec<Vertex> = g.vertices().filter(|&v| v != instance.s && v != instance.t).collect();
    guard.check_universe(free.len(), "free vertex set")?;
    guard.check_subsets(
        1u64.checked_shl(free.len() as u32).unwrap_or(u64::MAX),
        "vertex-set scan",
    )?;
    let mut best: Option<(u64, CutSet)> = None;
    for mask in 0u64..(1 << free.len()) {
        let r = VertexSet::from_vertices(
            g.num_vertices(),
            std::iter::once(instance.s).chain(
                free.iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &v)| v),
            ),
        );
        let cut = out_boundary(g, &r);
        let weight = instance.weight_of(cut.edges());
        if cut.len() <= instance.k
            && weight <= instance.w
            && best.as_ref().is_none_or(|(bw, bc)| (weight, &cut) < (*bw, bc))
        {
            best = Some((weight, cut));
        }
    }
    Ok(best.map(|(_, c)| c))
}

/// Exhaustive skew multicut over the colored edges.
pub fn brute_solve_skew(instance: &SkewInstance, guard: &SizeGuard) -> Result<Option<CutSet>> {
    if instance.budgets.any_negative() {
        return Ok(None);
    }
    let g = &instance.graph;
    let pool: Vec<EdgeId> = g.colored_edges().iter().collect();
    let k = budget_sum(&instance.budgets);
    guard.check_universe(pool.len(), "colored edge set")?;
    guard.check_subsets(subsets_up_to(pool.len(), k), "skew search")?;
    for subset in subsets(&pool, k) {
        let cut = CutSet::new(subset);
        if is_budget_respecting(g, &cut, &instance.budgets) && is_skew_multicut(instance, &cut) {
            return Ok(Some(cut));
        }
    }
    Ok(None)
}

/// Exhaustive multi-budgeted feedback arc set over the colored edges.
pub fn brute_solve_dfas(instance: &DfasInstance, guard: &SizeGuard) -> Result<Option<CutSet>> {
    if instance.budgets.any_negative() {
        return Ok(None);
    }
    let g = &instance.graph;
    let pool: Vec<EdgeId> = g.colored_edges().iter().collect();
    let k = budget_sum(&instance.budgets);
    guard.check_universe(pool.len(), "colored edge set")?;
    guard.check_subsets(subsets_up_to(pool.len(), k), "feedback arc set search")?;
    for subset in subsets(&pool, k) {
        let cut = CutSet::new(subset);
        if is_budget_respecting(g, &cut, &instance.budgets) && is_acyclic(g, &cut.to_edge_set(g.num_edges())) {
            return Ok(Some(cut));
        }
    }
    Ok(None)
}

/// Exhaustive classic feedback arc set: any arcs, at most `k` of them.
pub fn brute_classic_dfas(graph: &ColoredDigraph, k: usize, guard: &SizeGuard) -> Result<Option<CutSet>> {
    let pool: Vec<EdgeId> = graph.edge_ids().collect();
    guard.check_universe(pool.len(), "edge set")?;
    guard.check_subsets(subsets_up_to(pool.len(), k), "feedback arc set search")?;
    let found = subsets(&pool, k)
        .map(CutSet::new)
        .find(|c| is_acyclic(graph, &c.to_edge_set(graph.num_edges())));
    Ok(found)
}

/// Constrained bipartite vertex cover: `Some((U', L'))` with `|U'| ≤ k_u`,
/// `|L'| ≤ k_l` covering every edge, found by exhaustive search.
pub fn brute_constrained_bipartite_vc(
    u_count: usize,
    l_count: usize,
    edges: &[(usize, usize)],
    k_u: usize,
    k_l: usize,
    guard: &SizeGuard,
) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    guard.check_universe(u_count + l_count, "bipartite vertex set")?;
    guard.check_subsets(
        subsets_up_to(u_count, k_u).saturating_mul(subsets_up_to(l_count, k_l)),
        "cover search",
    )?;
    for ru in 0..=k_u.min(u_count) {
        for us in (0..u_count).combinations(ru) {
            for rl in 0..=k_l.min(l_count) {
                for ls in (0..l_count).combinations(rl) {
                    if edges.iter().all(|(a, b)| us.contains(a) || ls.contains(b)) {
                        return Ok(Some((us.clone(), ls)));
                    }
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphBuilder;

    fn v(n: usize) -> Vertex {
        Vertex::from_number(n)
    }

    fn two_paths() -> ColoredDigraph {
        let mut b = GraphBuilder::new(4, 1);
        b.arc(1, 2, &[1]);
        b.arc(2, 4, &[1]);
        b.arc(1, 3, &[1]);
        b.arc(3, 4, &[1]);
        b.build().unwrap()
    }

    #[test]
    fn minimal_cuts_on_small_graphs() {
        let mut b = GraphBuilder::new(3, 0);
        b.arc(1, 2, &[]);
        b.arc(2, 3, &[]);
        let path = b.build().unwrap();
        let g = SizeGuard::default();
        let fam = brute_minimal_cuts(&path, &[v(1)], &[v(3)], 1, &g).unwrap();
        assert_eq!(fam.len(), 2);
        assert!(brute_minimal_cuts(&path, &[v(1)], &[v(3)], 0, &g).unwrap().is_empty());
        let fam = brute_minimal_cuts(&two_paths(), &[v(1)], &[v(4)], 2, &g).unwrap();
        assert_eq!(fam.len(), 4);
    }

    #[test]
    fn mbcut_oracle_cases() {
        let g = SizeGuard::default();
        let mut b = GraphBuilder::new(2, 2);
        b.arc(1, 2, &[1]);
        b.arc(1, 2, &[2]);
        let inst = CutInstance::new(b.build().unwrap(), vec![v(1)], vec![v(2)], Budgets(vec![1, 1])).unwrap();
        assert_eq!(brute_solve_mbcut(&inst, &g).unwrap().map(|c| c.len()), Some(2));
        assert_eq!(
            brute_solve_mbcut_by_vertex_sets(&inst, &g).unwrap().map(|c| c.len()),
            Some(2)
        );

        let mut b = GraphBuilder::new(2, 1);
        b.arc(1, 2, &[]);
        let inst = CutInstance::new(b.build().unwrap(), vec![v(1)], vec![v(2)], Budgets(vec![1])).unwrap();
        assert_eq!(brute_solve_mbcut(&inst, &g).unwrap(), None);
        assert_eq!(brute_solve_mbcut_by_vertex_sets(&inst, &g).unwrap(), None);
    }

    #[test]
    fn chain_oracle_cases() {
        let g = SizeGuard::default();
        let mut b = GraphBuilder::new(3, 0);
        b.arc(1, 2, &[]);
        b.arc(2, 3, &[]);
        let one = ChainInstance::new(b.build().unwrap(), v(1), v(3), vec![vec![EdgeId(0), EdgeId(1)]], 2, 1).unwrap();
        assert!(brute_solve_chain(&one, &g).unwrap().is_some());
        assert!(brute_solve_chain(&one.with_k(0), &g).unwrap().is_none());

        let mut b = GraphBuilder::new(2, 0);
        b.arc(1, 2, &[]);
        b.arc(1, 2, &[]);
        let par = ChainInstance::new(
            b.build().unwrap(),
            v(1),
            v(2),
            vec![vec![EdgeId(0)], vec![EdgeId(1)]],
            1,
            1,
        )
        .unwrap();
        assert!(brute_solve_chain(&par, &g).unwrap().is_none());
    }

    #[test]
    fn weighted_families() {
        let g = SizeGuard::default();
        let mut b = GraphBuilder::new(3, 0);
        b.arc(1, 2, &[]);
        b.arc(2, 3, &[]);
        let inst = WeightedCutInstance::new(b.build().unwrap(), vec![1, 1], v(1), v(3), 1, 10).unwrap();
        let (f, close) = brute_closest_families_weighted(&inst, &g).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(close.cuts().collect::<Vec<_>>(), vec![&CutSet::from_numbers([2])]);

        let inst = WeightedCutInstance::new(two_paths_plain(), vec![1; 4], v(1), v(4), 2, 10).unwrap();
        let (f, close) = brute_closest_families_weighted(&inst, &g).unwrap();
        assert_eq!(f.len(), 4);
        assert_eq!(close.cuts().collect::<Vec<_>>(), vec![&CutSet::from_numbers([2, 4])]);
    }

    fn two_paths_plain() -> ColoredDigraph {
        let mut b = GraphBuilder::new(4, 0);
        b.arc(1, 2, &[]);
        b.arc(2, 4, &[]);
        b.arc(1, 3, &[]);
        b.arc(3, 4, &[]);
        b.build().unwrap()
    }

    #[test]
    fn chain_families_and_precondition() {
        let g = SizeGuard::default();
        let mut b = GraphBuilder::new(3, 0);
        b.arc(1, 2, &[]);
        b.arc(2, 3, &[]);
        let one = ChainInstance::new(b.build().unwrap(), v(1), v(3), vec![vec![EdgeId(0), EdgeId(1)]], 2, 1).unwrap();
        let (f, close) = brute_closest_families_chain(&one, &g).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(close.cuts().collect::<Vec<_>>(), vec![&CutSet::from_numbers([2])]);
        assert!(matches!(
            brute_closest_families_chain(&one.with_k(2), &g),
            Err(Error::Precondition(_))
        ));

        let two = ChainInstance::new(
            two_paths_plain(),
            v(1),
            v(4),
            vec![vec![EdgeId(0), EdgeId(1)], vec![EdgeId(2), EdgeId(3)]],
            2,
            2,
        )
        .unwrap();
        let (f, close) = brute_closest_families_chain(&two, &g).unwrap();
        assert_eq!(f.len(), 4);
        assert_eq!(close.cuts().collect::<Vec<_>>(), vec![&CutSet::from_numbers([2, 4])]);
    }

    #[test]
    fn guard_refuses() {
        let tight = SizeGuard {
            max_colored_edges: 2,
            max_subsets: 4,
        };
        assert!(matches!(
            brute_minimal_cuts(&two_paths(), &[v(1)], &[v(4)], 2, &tight),
            Err(Error::Guard(_))
        ));
        assert_eq!(SizeGuard::parse("12,4096").unwrap().max_subsets, 4096);
        assert!(SizeGuard::parse("x").is_err());
    }

    #[test]
    fn vertex_cover_oracle() {
        let g = SizeGuard::default();
        assert!(brute_constrained_bipartite_vc(1, 1, &[(0, 0)], 1, 0, &g)
            .unwrap()
            .is_some());
        assert!(brute_constrained_bipartite_vc(1, 1, &[(0, 0)], 0, 0, &g)
            .unwrap()
            .is_none());
        // path u1–v1–u2 covered by {v1}
        let cover = brute_constrained_bipartite_vc(2, 1, &[(0, 0), (1, 0)], 0, 1, &g).unwrap();
        assert_eq!(cover, Some((vec![], vec![0])));
    }
}
