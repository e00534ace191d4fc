//! Important multi-budgeted cuts: domination, the enumeration that yields a
//! superset of all important `Z`-respecting budget-respecting cuts, and
//! exact post-filtering.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::flow::{max_flow_z, FlowCertificate, FlowOutcome};
use crate::graph::{
    budget_usage, is_minimal_cut, reachable_after, ColoredDigraph, CutClass, CutSet, EdgeSet, VertexSet,
};
use crate::instance::CutInstance;
use crate::oracle::{minimal_cuts_within, subsets_up_to, SizeGuard};
use crate::solver::{branch_tuples, shrink_deletable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyOrigin {
    Enumerated,
    Brute,
    /// Domination was tested against every minimal respecting cut.
    Filtered,
    /// Domination was tested only among the family's own members.
    FilteredRelative,
}

/// A deduplicated set of cuts, kept in sorted edge-id order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutFamily {
    cuts: BTreeSet<CutSet>,
    pub origin: FamilyOrigin,
}

impl CutFamily {
    pub fn new(origin: FamilyOrigin) -> Self {
        CutFamily {
            cuts: BTreeSet::new(),
            origin,
        }
    }

    pub fn from_cuts<I: IntoIterator<Item = CutSet>>(cuts: I, origin: FamilyOrigin) -> Self {
        CutFamily {
            cuts: cuts.into_iter().collect(),
            origin,
        }
    }

    pub fn insert(&mut self, cut: CutSet) -> bool {
        self.cuts.insert(cut)
    }

    pub fn contains(&self, cut: &CutSet) -> bool {
        self.cuts.contains(cut)
    }

    pub fn len(&self) -> usize {
        self.cuts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cuts.is_empty()
    }

    pub fn cuts(&self) -> impl Iterator<Item = &CutSet> {
        self.cuts.iter()
    }

    pub fn is_subset(&self, other: &CutFamily) -> bool {
        self.cuts.is_subset(&other.cuts)
    }

    pub fn into_vec(self) -> Vec<CutSet> {
        self.cuts.into_iter().collect()
    }
}

/// Reports why `cut` is not a minimal `Z`-respecting budget-respecting cut.
pub fn check_respecting_minimal(instance: &CutInstance, z: &EdgeSet, cut: &CutSet) -> Result<()> {
    let g = &instance.graph;
    if let Some(e) = cut.edges().iter().find(|&&e| !z.contains(e)) {
        return Err(Error::Precondition(format!("edge {} is not deletable", e.number())));
    }
    if !budget_usage(g, cut, &instance.budgets).1 {
        return Err(Error::Precondition(format!(
            "cut {:?} exceeds the budgets",
            cut.numbers()
        )));
    }
    match is_minimal_cut(g, &instance.x, &instance.y, cut) {
        CutClass::Minimal => Ok(()),
        CutClass::NotACut => Err(Error::Precondition(format!("{:?} is not an XY-cut", cut.numbers()))),
        CutClass::CutNotMinimal => Err(Error::Precondition(format!("cut {:?} is not minimal", cut.numbers()))),
    }
}

fn dominates_raw(r1: &VertexSet, u1: &[usize], r2: &VertexSet, u2: &[usize]) -> bool {
    r2.is_subset(r1) && u1.iter().zip(u2).all(|(a, b)| a <= b)
}

/// `C1` dominates `C2`: everything reachable from `X` after deleting `C2` is
/// reachable after deleting `C1`, and `C1` uses no more edges of any color.
/// Reflexive; callers asking "dominated by another" must exclude `C1 = C2`.
pub fn dominates(instance: &CutInstance, z: &EdgeSet, c1: &CutSet, c2: &CutSet) -> Result<bool> {
    check_respecting_minimal(instance, z, c1)?;
    check_respecting_minimal(instance, z, c2)?;
    let g = &instance.graph;
    let r1 = reachable_after(g, &instance.x, c1);
    let r2 = reachable_after(g, &instance.x, c2);
    Ok(dominates_raw(&r1, &c1.usage(g), &r2, &c2.usage(g)))
}

/// Recursion-tree counters for the enumeration.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EnumStats {
    pub important_calls: u64,
    pub enum_calls: u64,
    pub flow_calls: u64,
    /// Upper bound on `important_calls + enum_calls` for this `k` and `ℓ`.
    pub node_bound: u128,
}

impl EnumStats {
    pub fn nodes(&self) -> u64 {
        self.important_calls + self.enum_calls
    }
}

/// Worst-case number of recursion nodes. A top-level call makes at most
/// `T = (kℓ+1)^k` first-level calls; each of those grows a subtree of at most
/// `E = Σ_{d≤k} (kℓ)^d` nodes (fan-out `Σ|A_i| ≤ kℓ`, depth `≤ k`), each of
/// which may restart the top level with a strictly larger flow value, so at
/// most `k + 1` top-level calls are nested.
pub fn enumeration_node_bound(k: usize, num_colors: usize) -> u128 {
    let k32 = k as u32;
    let kl = (k as u128).saturating_mul(num_colors as u128);
    let t = (kl + 1).saturating_pow(k32);
    let e = (0..=k32).fold(0u128, |acc, d| acc.saturating_add(kl.saturating_pow(d)));
    let mut n: u128 = 1;
    for _ in 0..=k {
        n = t
            .saturating_mul(e)
            .saturating_mul(n.saturating_add(1))
            .saturating_add(1);
    }
    n
}

struct Enumerator<'a> {
    inst: &'a CutInstance,
    k: usize,
    family: CutFamily,
    stats: EnumStats,
}

impl Enumerator<'_> {
    fn graph(&self) -> &ColoredDigraph {
        &self.inst.graph
    }

    fn flow(&mut self, z: &EdgeSet) -> Result<Option<FlowCertificate>> {
        self.stats.flow_calls += 1;
        Ok(match max_flow_z(self.graph(), &self.inst.x, &self.inst.y, z, self.k)? {
            FlowOutcome::Certificate(c) => Some(c),
            FlowOutcome::NoCutWithinK => None,
        })
    }

    fn important_cut(&mut self, z: &EdgeSet) -> Result<()> {
        self.stats.important_calls += 1;
        let Some(cert) = self.flow(z)? else {
            return Ok(());
        };
        for tuple in branch_tuples(cert.lambda, &self.inst.budgets)? {
            self.enumerate(z, &cert.paths, cert.lambda, &cert.bottleneck, tuple)?;
        }
        Ok(())
    }

    fn enumerate(
        &mut self,
        z: &EdgeSet,
        paths: &[Vec<crate::graph::EdgeId>],
        lambda: usize,
        bottleneck: &CutSet,
        tuple: Vec<u64>,
    ) -> Result<()> {
        self.stats.enum_calls += 1;
        let z_hat = shrink_deletable(self.graph(), z, paths, &tuple, Some(bottleneck));
        let Some(cert) = self.flow(&z_hat)? else {
            return Ok(());
        };
        if cert.lambda > lambda {
            return self.important_cut(&z_hat);
        }
        self.family.insert(cert.cut.clone());
        for (i, &mask) in tuple.iter().enumerate() {
            for j in (0..lambda).filter(|j| mask & (1 << j) != 0) {
                let mut shrunk = tuple.clone();
                shrunk[i] &= !(1 << j);
                self.enumerate(&z_hat, paths, lambda, &cert.bottleneck, shrunk)?;
            }
        }
        Ok(())
    }
}

/// Enumerates a family of minimal `Z`-respecting budget-respecting XY-cuts
/// containing every important one. Budgets may be zero; a negative budget
/// yields the empty family.
pub fn enumerate_candidates(instance: &CutInstance, z: &EdgeSet) -> Result<(CutFamily, EnumStats)> {
    let g = &instance.graph;
    if let Some(e) = z.iter().find(|&e| g.edge(e).colors.is_empty()) {
        return Err(Error::Precondition(format!(
            "deletable edge {} has no color",
            e.number()
        )));
    }
    let mut en = Enumerator {
        inst: instance,
        k: instance.budgets.total().max(0) as usize,
        family: CutFamily::new(FamilyOrigin::Enumerated),
        stats: EnumStats {
            node_bound: enumeration_node_bound(instance.budgets.total().max(0) as usize, g.num_colors()),
            ..EnumStats::default()
        },
    };
    if !instance.budgets.any_negative() {
        en.important_cut(z)?;
    }
    if (en.stats.nodes() as u128) > en.stats.node_bound {
        return Err(Error::Internal(format!(
            "enumeration visited {} nodes, above the bound {}",
            en.stats.nodes(),
            en.stats.node_bound
        )));
    }
    Ok((en.family, en.stats))
}

/// Every minimal `Z`-respecting budget-respecting XY-cut, by exhaustive search.
pub fn brute_respecting_minimal_cuts(instance: &CutInstance, z: &EdgeSet, guard: &SizeGuard) -> Result<Vec<CutSet>> {
    if instance.budgets.any_negative() {
        return Ok(Vec::new());
    }
    let g = &instance.graph;
    let k = instance.budgets.total() as usize;
    Ok(minimal_cuts_within(g, &instance.x, &instance.y, z, k, guard)?
        .into_iter()
        .filter(|c| budget_usage(g, c, &instance.budgets).1)
        .collect())
}

struct Scored {
    reach: VertexSet,
    usage: Vec<usize>,
}

fn score(instance: &CutInstance, cuts: &[CutSet]) -> Vec<Scored> {
    cuts.iter()
        .map(|c| Scored {
            reach: reachable_after(&instance.graph, &instance.x, c),
            usage: c.usage(&instance.graph),
        })
        .collect()
}

/// Members of `candidates` dominated by no other member of `universe`.
fn undominated(instance: &CutInstance, candidates: &[CutSet], universe: &[CutSet]) -> Result<Vec<CutSet>> {
    let cs = score(instance, candidates);
    let us = score(instance, universe);
    let mut out = Vec::new();
    for (c, sc) in candidates.iter().zip(&cs) {
        let mut dominated = false;
        for (u, su) in universe.iter().zip(&us) {
            if u == c || !dominates_raw(&su.reach, &su.usage, &sc.reach, &sc.usage) {
                continue;
            }
            if su.reach == sc.reach && su.usage == sc.usage {
                // δ⁺(R) determines a minimal cut, so equal reach means equal cuts
                return Err(Error::Internal(format!(
                    "distinct minimal cuts {:?} and {:?} share a reachable set",
                    u.numbers(),
                    c.numbers()
                )));
            }
            dominated = true;
            break;
        }
        if !dominated {
            out.push(c.clone());
        }
    }
    Ok(out)
}

/// The exact important cuts: minimal respecting cuts dominated by no other.
pub fn brute_important(instance: &CutInstance, z: &EdgeSet, guard: &SizeGuard) -> Result<CutFamily> {
    let all = brute_respecting_minimal_cuts(instance, z, guard)?;
    Ok(CutFamily::from_cuts(
        undominated(instance, &all, &all)?,
        FamilyOrigin::Brute,
    ))
}

/// Keeps the members of `family` that are important. When the brute-force
/// universe fits `guard` the answer is exact; otherwise domination is only
/// tested within `family` and the result is tagged
/// [`FamilyOrigin::FilteredRelative`].
pub fn filter_important(
    instance: &CutInstance,
    z: &EdgeSet,
    family: &CutFamily,
    guard: &SizeGuard,
) -> Result<CutFamily> {
    let k = instance.budgets.total().max(0) as usize;
    let fits = z.len() <= guard.max_colored_edges && subsets_up_to(z.len(), k) <= guard.max_subsets;
    let members: Vec<CutSet> = family.cuts().cloned().collect();
    if fits {
        let universe = brute_respecting_minimal_cuts(instance, z, guard)?;
        Ok(CutFamily::from_cuts(
            undominated(instance, &members, &universe)?,
            FamilyOrigin::Filtered,
        ))
    } else {
        filter_relative(instance, family)
    }
}

/// Domination tested only among the members of `family`.
pub fn filter_relative(instance: &CutInstance, family: &CutFamily) -> Result<CutFamily> {
    let members: Vec<CutSet> = family.cuts().cloned().collect();
    Ok(CutFamily::from_cuts(
        undominated(instance, &members, &members)?,
        FamilyOrigin::FilteredRelative,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Budgets, GraphBuilder, Vertex};

    fn v(n: usize) -> Vertex {
        Vertex::from_number(n)
    }

    fn path2() -> CutInstance {
        let mut b = GraphBuilder::new(3, 1);
        b.arc(1, 2, &[1]);
        b.arc(2, 3, &[1]);
        CutInstance::new(b.build().unwrap(), vec![v(1)], vec![v(3)], Budgets(vec![1])).unwrap()
    }

    fn factorial2() -> CutInstance {
        let mut b = GraphBuilder::new(4, 2);
        b.arc(1, 2, &[1]);
        b.arc(2, 4, &[2]);
        b.arc(1, 3, &[1]);
        b.arc(3, 4, &[2]);
        CutInstance::new(b.build().unwrap(), vec![v(1)], vec![v(4)], Budgets(vec![1, 1])).unwrap()
    }

    #[test]
    fn domination_on_a_path() {
        let inst = path2();
        let z = inst.graph.colored_edges();
        let near = CutSet::from_numbers([1]);
        let far = CutSet::from_numbers([2]);
        assert!(dominates(&inst, &z, &far, &near).unwrap());
        assert!(!dominates(&inst, &z, &near, &far).unwrap());
        assert!(dominates(&inst, &z, &near, &near).unwrap());
        assert!(dominates(&inst, &z, &CutSet::from_numbers([1, 2]), &near).is_err());
    }

    #[test]
    fn path_family_and_filter() {
        let inst = path2();
        let z = inst.graph.colored_edges();
        let (fam, stats) = enumerate_candidates(&inst, &z).unwrap();
        assert!(fam.contains(&CutSet::from_numbers([2])));
        assert!(stats.nodes() as u128 <= stats.node_bound);
        let g = SizeGuard::default();
        let both = CutFamily::from_cuts(
            [CutSet::from_numbers([1]), CutSet::from_numbers([2])],
            FamilyOrigin::Enumerated,
        );
        let kept = filter_important(&inst, &z, &both, &g).unwrap();
        assert_eq!(kept.into_vec(), vec![CutSet::from_numbers([2])]);
        assert_eq!(
            brute_important(&inst, &z, &g).unwrap().into_vec(),
            vec![CutSet::from_numbers([2])]
        );
    }

    #[test]
    fn factorial_two_has_both_permutation_cuts() {
        let inst = factorial2();
        let z = inst.graph.colored_edges();
        let g = SizeGuard::default();
        let a = CutSet::from_numbers([1, 4]);
        let b = CutSet::from_numbers([2, 3]);
        assert!(!dominates(&inst, &z, &a, &b).unwrap());
        assert!(!dominates(&inst, &z, &b, &a).unwrap());
        let (fam, _) = enumerate_candidates(&inst, &z).unwrap();
        assert!(fam.contains(&a) && fam.contains(&b));
        let exact = filter_important(&inst, &z, &fam, &g).unwrap();
        assert_eq!(exact.len(), 2);
        assert_eq!(exact.origin, FamilyOrigin::Filtered);
        assert_eq!(
            brute_important(&inst, &z, &g).unwrap(),
            CutFamily::from_cuts([a, b], FamilyOrigin::Brute)
        );
    }

    #[test]
    fn colorless_edge_gives_empty_family() {
        let mut b = GraphBuilder::new(2, 1);
        b.arc(1, 2, &[]);
        let inst = CutInstance::new(b.build().unwrap(), vec![v(1)], vec![v(2)], Budgets(vec![1])).unwrap();
        let z = inst.graph.colored_edges();
        assert!(enumerate_candidates(&inst, &z).unwrap().0.is_empty());
    }

    #[test]
    fn zero_budgets_give_empty_brute_family() {
        let mut inst = path2();
        inst.budgets = Budgets(vec![0]);
        let z = inst.graph.colored_edges();
        assert!(brute_important(&inst, &z, &SizeGuard::default()).unwrap().is_empty());
        assert!(enumerate_candidates(&inst, &z).unwrap().0.is_empty());
    }

    #[test]
    fn singleton_family_unchanged() {
        let mut b = GraphBuilder::new(2, 1);
        b.arc(1, 2, &[1]);
        let inst = CutInstance::new(b.build().unwrap(), vec![v(1)], vec![v(2)], Budgets(vec![1])).unwrap();
        let z = inst.graph.colored_edges();
        let fam = CutFamily::from_cuts([CutSet::from_numbers([1])], FamilyOrigin::Enumerated);
        let kept = filter_important(&inst, &z, &fam, &SizeGuard::default()).unwrap();
        assert_eq!(kept.len(), 1);
    }

    #[test]
    fn node_bound_small_values() {
        // k=1, ℓ=1: T=2, E=2, N(0)=1, N(1)=1+4·2=9, N(2)=1+4·10=41
        assert_eq!(enumeration_node_bound(1, 1), 41);
        assert!(enumeration_node_bound(6, 6) > 0);
        assert_eq!(enumeration_node_bound(40, 64), u128::MAX);
    }
}
