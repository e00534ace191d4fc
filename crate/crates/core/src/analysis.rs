//! Mazes, bowties and flowers over families of pairwise disjoint minimal
//! st-cuts, found by guarded exhaustive search, and the size bounds that
//! closest-to-sink solution families must satisfy.

use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{is_minimal_cut, reachable_after, ColoredDigraph, CutClass, CutSet, EdgeId, Vertex};
use crate::important::CutFamily;

/// Orientation of a member element relative to another member.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Orient {
    /// ⊥: the edge's tail stays reachable from `s` when the other cut is deleted.
    #[serde(rename = "bot")]
    Bottom,
    /// ⊤: the edge's tail is cut off.
    #[serde(rename = "top")]
    Top,
}

impl fmt::Display for Orient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orient::Bottom => "⊥",
            Orient::Top => "⊤",
        })
    }
}

/// Search limits for the exponential detectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnalysisGuard {
    pub max_members: usize,
    pub max_bowtie: usize,
    pub max_flower: usize,
}

impl Default for AnalysisGuard {
    fn default() -> Self {
        AnalysisGuard {
            max_members: 10,
            max_bowtie: 5,
            max_flower: 6,
        }
    }
}

/// A family of pairwise disjoint equal-size sets with orientations
/// `f_{u,v}` for every ordered pair of distinct members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Maze {
    members: Vec<Vec<EdgeId>>,
    /// `orient[u][v][p]` is `f_{u,v}` at the `p`-th element of `u` (unused when `u = v`).
    orient: Vec<Vec<Vec<Orient>>>,
    source: Option<(ColoredDigraph, Vertex)>,
}

impl Maze {
    /// An abstract maze; `orient[u][v]` must list one value per element of `u`.
    pub fn from_parts(members: Vec<Vec<EdgeId>>, orient: Vec<Vec<Vec<Orient>>>) -> Result<Self> {
        check_disjoint_equal(&members)?;
        if orient.len() != members.len() {
            return Err(Error::invalid("one orientation table per member required"));
        }
        for (u, row) in orient.iter().enumerate() {
            if row.len() != members.len() {
                return Err(Error::invalid(format!(
                    "orientation row {} has the wrong length",
                    u + 1
                )));
            }
            for (v, vals) in row.iter().enumerate() {
                if u != v && vals.len() != members[u].len() {
                    return Err(Error::invalid(format!(
                        "f for members ({}, {}) is not total",
                        u + 1,
                        v + 1
                    )));
                }
            }
        }
        Ok(Maze {
            members,
            orient,
            source: None,
        })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Common member size.
    pub fn k(&self) -> usize {
        self.members.first().map_or(0, Vec::len)
    }

    pub fn members(&self) -> &[Vec<EdgeId>] {
        &self.members
    }

    pub fn f(&self, u: usize, v: usize, pos: usize) -> Orient {
        self.orient[u][v][pos]
    }

    /// Keeps, for each member, the elements at `keep[u]` (all lists of equal
    /// length). The result is an abstract maze with restricted orientations.
    pub fn restrict(&self, keep: &[Vec<usize>]) -> Result<Maze> {
        let members = self
            .members
            .iter()
            .zip(keep)
            .map(|(m, ps)| ps.iter().map(|&p| m[p]).collect())
            .collect();
        let orient = (0..self.len())
            .map(|u| {
                (0..self.len())
                    .map(|v| {
                        if u == v {
                            Vec::new()
                        } else {
                            keep[u].iter().map(|&p| self.orient[u][v][p]).collect()
                        }
                    })
                    .collect()
            })
            .collect();
        Maze::from_parts(members, orient)
    }
}

fn check_disjoint_equal(members: &[Vec<EdgeId>]) -> Result<()> {
    for (i, m) in members.iter().enumerate() {
        if m.len() != members[0].len() {
            return Err(Error::Precondition(format!(
                "member {} has {} elements, member 1 has {}",
                i + 1,
                m.len(),
                members[0].len()
            )));
        }
        if m.iter().duplicates().next().is_some() {
            return Err(Error::Precondition(format!("member {} repeats an element", i + 1)));
        }
    }
    for [i, j] in (0..members.len()).array_combinations() {
        if members[i].iter().any(|e| members[j].contains(e)) {
            return Err(Error::Precondition(format!(
                "members {} and {} are not pairwise disjoint",
                i + 1,
                j + 1
            )));
        }
    }
    Ok(())
}

/// Builds the cut maze: `f_{C,D}(e) = ⊥` iff the tail of `e` is reachable
/// from `s` in `G − D`.
pub fn build_maze(graph: &ColoredDigraph, s: Vertex, t: Vertex, family: &[CutSet]) -> Result<Maze> {
    for (i, c) in family.iter().enumerate() {
        if is_minimal_cut(graph, &[s], &[t], c) != CutClass::Minimal {
            return Err(Error::Precondition(format!(
                "member {} {:?} is not a minimal st-cut",
                i + 1,
                c.numbers()
            )));
        }
    }
    let members: Vec<Vec<EdgeId>> = family.iter().map(|c| c.edges().to_vec()).collect();
    check_disjoint_equal(&members)?;
    let reach: Vec<_> = family.iter().map(|d| reachable_after(graph, &[s], d)).collect();
    let orient = (0..members.len())
        .map(|u| {
            (0..members.len())
                .map(|v| {
                    if u == v {
                        return Vec::new();
                    }
                    members[u]
                        .iter()
                        .map(|&e| {
                            if reach[v].contains(graph.edge(e).tail) {
                                Orient::Bottom
                            } else {
                                Orient::Top
                            }
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    Ok(Maze {
        members,
        orient,
        source: Some((graph.clone(), s)),
    })
}

/// An ordered sequence of members, each split as `a_i ⊎ b_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bowtie {
    /// Member indices (0-based positions in the maze).
    pub sequence: Vec<usize>,
    pub a: Vec<Vec<EdgeId>>,
    pub b: Vec<Vec<EdgeId>>,
}

impl Bowtie {
    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    /// `(u_a, b_a, a_a), …, (u_1, b_1, a_1)`.
    pub fn reversed(&self) -> Bowtie {
        Bowtie {
            sequence: self.sequence.iter().rev().copied().collect(),
            a: self.b.iter().rev().cloned().collect(),
            b: self.a.iter().rev().cloned().collect(),
        }
    }
}

/// Checks the maze bowtie conditions for a candidate.
pub fn is_maze_bowtie(maze: &Maze, bowtie: &Bowtie) -> bool {
    let n = bowtie.len();
    if bowtie.sequence.iter().duplicates().next().is_some() || bowtie.a.len() != n || bowtie.b.len() != n {
        return false;
    }
    for i in 0..n {
        let u = bowtie.sequence[i];
        let member = &maze.members[u];
        let split_ok = bowtie.a[i].len() + bowtie.b[i].len() == member.len()
            && member
                .iter()
                .all(|e| bowtie.a[i].contains(e) != bowtie.b[i].contains(e));
        if !split_ok {
            return false;
        }
        for j in (0..n).filter(|&j| j != i) {
            let v = bowtie.sequence[j];
            for (p, e) in member.iter().enumerate() {
                let in_a = bowtie.a[i].contains(e);
                let want = match (i < j, in_a) {
                    (true, true) | (false, false) => Orient::Bottom,
                    _ => Orient::Top,
                };
                if maze.f(u, v, p) != want {
                    return false;
                }
            }
        }
    }
    true
}

/// The reachability form for cut bowties: for `i < j`, `A_i` is exactly the
/// part of `C_i` whose tails `s` reaches in `G − C_j`, and `B_j` exactly the
/// part of `C_j` whose tails `s` reaches in `G − C_i`.
pub fn is_cut_bowtie(graph: &ColoredDigraph, s: Vertex, cuts: &[CutSet], a: &[Vec<EdgeId>], b: &[Vec<EdgeId>]) -> bool {
    let reach: Vec<_> = cuts.iter().map(|c| reachable_after(graph, &[s], c)).collect();
    let reached = |c: &CutSet, r: &crate::graph::VertexSet| -> Vec<EdgeId> {
        c.edges()
            .iter()
            .copied()
            .filter(|&e| r.contains(graph.edge(e).tail))
            .collect()
    };
    let sorted = |v: &[EdgeId]| -> Vec<EdgeId> { v.iter().copied().sorted().collect() };
    for [i, j] in (0..cuts.len()).array_combinations() {
        if reached(&cuts[i], &reach[j]) != sorted(&a[i]) || reached(&cuts[j], &reach[i]) != sorted(&b[j]) {
            return false;
        }
    }
    for (i, c) in cuts.iter().enumerate() {
        let mut both: Vec<EdgeId> = a[i].iter().chain(&b[i]).copied().collect();
        both.sort();
        if both != c.edges() {
            return false;
        }
    }
    true
}

/// The split of `u` forced by its orientation toward `v`, given that `u`
/// comes before `v` (`before`) or after: positions that go to `a`.
fn forced_a(maze: &Maze, u: usize, v: usize, before: bool) -> Vec<bool> {
    let want_a = if before { Orient::Bottom } else { Orient::Top };
    (0..maze.members[u].len()).map(|p| maze.f(u, v, p) == want_a).collect()
}

struct BowtieSearch<'a, P: Fn(&Bowtie) -> bool> {
    maze: &'a Maze,
    a: usize,
    accept: P,
}

impl<P: Fn(&Bowtie) -> bool> BowtieSearch<'_, P> {
    /// Extends `seq`; `splits[i]` is the `a`-mask forced on `seq[i]` so far
    /// (`None` until the first partner is placed).
    fn extend(&self, seq: &mut Vec<usize>, splits: &mut Vec<Option<Vec<bool>>>) -> Option<Bowtie> {
        if seq.len() == self.a {
            let bowtie = self.materialize(seq, splits);
            return (self.accept)(&bowtie).then_some(bowtie);
        }
        'next: for cand in 0..self.maze.len() {
            if seq.contains(&cand) {
                continue;
            }
            let saved = splits.clone();
            let mut mine: Option<Vec<bool>> = None;
            for (i, &u) in seq.iter().enumerate() {
                let earlier = forced_a(self.maze, u, cand, true);
                match &splits[i] {
                    Some(prev) if *prev != earlier => {
                        *splits = saved;
                        continue 'next;
                    }
                    _ => splits[i] = Some(earlier),
                }
                let later = forced_a(self.maze, cand, u, false);
                match &mine {
                    Some(prev) if *prev != later => {
                        *splits = saved;
                        continue 'next;
                    }
                    _ => mine = Some(later),
                }
            }
            seq.push(cand);
            splits.push(mine);
            if let Some(found) = self.extend(seq, splits) {
                return Some(found);
            }
            seq.pop();
            *splits = saved;
        }
        None
    }

    fn materialize(&self, seq: &[usize], splits: &[Option<Vec<bool>>]) -> Bowtie {
        let mut a = Vec::new();
        let mut b = Vec::new();
        for (i, &u) in seq.iter().enumerate() {
            let mask = splits[i]
                .clone()
                .unwrap_or_else(|| vec![true; self.maze.members[u].len()]);
            let (ai, bi): (Vec<_>, Vec<_>) = self.maze.members[u].iter().zip(mask).partition(|(_, in_a)| *in_a);
            a.push(ai.into_iter().map(|(e, _)| *e).collect());
            b.push(bi.into_iter().map(|(e, _)| *e).collect());
        }
        Bowtie {
            sequence: seq.to_vec(),
            a,
            b,
        }
    }
}

fn search_bowtie<P: Fn(&Bowtie) -> bool>(maze: &Maze, a: usize, accept: P) -> Result<Option<Bowtie>> {
    if a < 2 {
        return Err(Error::invalid("bowtie size must be at least 2"));
    }
    if a > maze.len() {
        return Ok(None);
    }
    let search = BowtieSearch { maze, a, accept };
    let found = search.extend(&mut Vec::new(), &mut Vec::new());
    if let Some(bt) = &found {
        verify_bowtie(maze, bt)?;
    }
    Ok(found)
}

fn verify_bowtie(maze: &Maze, bt: &Bowtie) -> Result<()> {
    if !is_maze_bowtie(maze, bt) {
        return Err(Error::Internal(format!(
            "search produced a non-bowtie {:?}",
            bt.sequence
        )));
    }
    if !is_maze_bowtie(maze, &bt.reversed()) {
        return Err(Error::Internal(format!(
            "reverse of bowtie {:?} is not a bowtie",
            bt.sequence
        )));
    }
    if let Some((graph, s)) = &maze.source {
        let cuts: Vec<CutSet> = bt
            .sequence
            .iter()
            .map(|&u| CutSet::new(maze.members[u].clone()))
            .collect();
        if !is_cut_bowtie(graph, *s, &cuts, &bt.a, &bt.b) {
            return Err(Error::Internal(format!(
                "bowtie {:?} fails the reachability characterization",
                bt.sequence
            )));
        }
    }
    Ok(())
}

/// First `a`-bowtie in lexicographic order of member sequences.
pub fn find_bowtie(maze: &Maze, a: usize, guard: &AnalysisGuard) -> Result<Option<Bowtie>> {
    check_maze_guard(maze, guard)?;
    if a > guard.max_bowtie {
        return Err(Error::Guard(format!(
            "bowtie size {a} above the limit of {}",
            guard.max_bowtie
        )));
    }
    search_bowtie(maze, a, |_| true)
}

/// Largest bowtie size in the maze (1 for a nonempty maze without a 2-bowtie).
pub fn largest_bowtie(maze: &Maze, guard: &AnalysisGuard) -> Result<(usize, Option<Bowtie>)> {
    check_maze_guard(maze, guard)?;
    let mut best = (maze.len().min(1), None);
    for a in 2..=maze.len() {
        match search_bowtie(maze, a, |_| true)? {
            Some(bt) => best = (a, Some(bt)),
            None => break,
        }
    }
    Ok(best)
}

fn check_maze_guard(maze: &Maze, guard: &AnalysisGuard) -> Result<()> {
    if maze.len() > guard.max_members {
        return Err(Error::Guard(format!(
            "maze has {} members, above the limit of {}",
            maze.len(),
            guard.max_members
        )));
    }
    Ok(())
}

/// Members sharing one orientation value `ζ` on a chosen element each.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Flower {
    pub members: Vec<usize>,
    pub zeta: Orient,
    /// Chosen element per member, aligned with `members`.
    pub elements: Vec<EdgeId>,
}

pub fn is_flower(maze: &Maze, flower: &Flower) -> bool {
    flower.members.iter().zip(&flower.elements).all(|(&u, e)| {
        let Some(p) = maze.members[u].iter().position(|x| x == e) else {
            return false;
        };
        flower
            .members
            .iter()
            .filter(|&&v| v != u)
            .all(|&v| maze.f(u, v, p) == flower.zeta)
    })
}

fn flower_on(maze: &Maze, subset: &[usize], zeta: Orient) -> Option<Flower> {
    let mut elements = Vec::with_capacity(subset.len());
    for &u in subset {
        let p = (0..maze.members[u].len())
            .find(|&p| subset.iter().filter(|&&v| v != u).all(|&v| maze.f(u, v, p) == zeta))?;
        elements.push(maze.members[u][p]);
    }
    Some(Flower {
        members: subset.to_vec(),
        zeta,
        elements,
    })
}

fn search_flower(maze: &Maze, b: usize) -> Option<Flower> {
    if b == 0 || b > maze.len() {
        return None;
    }
    for zeta in [Orient::Bottom, Orient::Top] {
        for subset in (0..maze.len()).combinations(b) {
            if let Some(f) = flower_on(maze, &subset, zeta) {
                return Some(f);
            }
        }
    }
    None
}

/// A flower of exactly `b` members (any larger flower contains one); ⊥
/// before ⊤, then lexicographic member subsets.
pub fn find_flower(maze: &Maze, b: usize, guard: &AnalysisGuard) -> Result<Option<Flower>> {
    check_maze_guard(maze, guard)?;
    if b == 0 {
        return Err(Error::invalid("flower size must be at least 1"));
    }
    if b > guard.max_flower {
        return Err(Error::Guard(format!(
            "flower size {b} above the limit of {}",
            guard.max_flower
        )));
    }
    Ok(search_flower(maze, b))
}

pub fn largest_flower(maze: &Maze, guard: &AnalysisGuard) -> Result<Option<Flower>> {
    check_maze_guard(maze, guard)?;
    let mut best = None;
    for b in 1..=maze.len() {
        match search_flower(maze, b) {
            Some(f) => best = Some(f),
            None => break,
        }
    }
    Ok(best)
}

/// Largest flower a maze of `k`-element cuts can hold: `(k+1)·4^(k+1)`.
pub fn flower_bound(k: usize) -> u128 {
    (k as u128 + 1).saturating_mul(4u128.saturating_pow(k as u32 + 1))
}

/// Largest bowtie a closest family of minimum-weight cuts can hold: `C(k+2, 2)`.
pub fn weighted_bowtie_bound(k: usize) -> usize {
    (k + 2) * (k + 1) / 2
}

/// Which closest family is being checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    /// Minimum-weight cuts of cardinality at most `k`.
    Weighted { k: usize },
    /// Chain solutions; `path_of_edge` maps each edge to its input path.
    Chain { path_of_edge: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bowtie: Option<Bowtie>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flower: Option<Flower>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    /// Maximal pairwise-disjoint equal-size subfamilies examined.
    pub subfamilies: usize,
    pub checks: Vec<BoundCheck>,
}

impl BoundReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Maximal sets of pairwise disjoint members of equal size, each sorted.
pub fn maximal_disjoint_subfamilies(family: &[CutSet]) -> Vec<Vec<usize>> {
    let n = family.len();
    let compatible = |i: usize, j: usize| family[i].len() == family[j].len() && family[i].is_disjoint(&family[j]);
    let mut out = Vec::new();
    // Bron–Kerbosch without pivoting; families here are small
    fn bk(
        r: &mut Vec<usize>,
        p: Vec<usize>,
        x: Vec<usize>,
        compatible: &dyn Fn(usize, usize) -> bool,
        out: &mut Vec<Vec<usize>>,
    ) {
        if p.is_empty() && x.is_empty() {
            out.push(r.clone());
            return;
        }
        let mut p = p;
        let mut x = x;
        while let Some(&v) = p.first() {
            r.push(v);
            let np = p.iter().copied().filter(|&w| w != v && compatible(v, w)).collect();
            let nx = x.iter().copied().filter(|&w| compatible(v, w)).collect();
            bk(r, np, nx, compatible, out);
            r.pop();
            p.retain(|&w| w != v);
            x.push(v);
        }
    }
    bk(&mut Vec::new(), (0..n).collect(), Vec::new(), &compatible, &mut out);
    for s in &mut out {
        s.sort_unstable();
    }
    out.sort();
    out
}

/// Checks a closest family against the bowtie and flower bounds, on every
/// maximal pairwise-disjoint equal-size subfamily:
/// weighted families hold no bowtie longer than `C(k+2, 2)`; chain families
/// hold no 4-bowtie whose cuts each meet a disjoint set of input paths; and
/// no flower exceeds `(k'+1)·4^(k'+1)` for member size `k'`.
pub fn check_bounds(
    graph: &ColoredDigraph,
    s: Vertex,
    t: Vertex,
    family: &CutFamily,
    kind: &FamilyKind,
    guard: &AnalysisGuard,
) -> Result<BoundReport> {
    let cuts: Vec<CutSet> = family.cuts().cloned().collect();
    if cuts.len() > 64 {
        return Err(Error::Guard(format!(
            "family of {} cuts is too large to split",
            cuts.len()
        )));
    }
    let mut report = BoundReport::default();
    let mut bowtie_check = BoundCheck {
        name: match kind {
            FamilyKind::Weighted { .. } => "weighted-bowtie",
            FamilyKind::Chain { .. } => "chain-bowtie",
        },
        passed: true,
        detail: String::new(),
        bowtie: None,
        flower: None,
    };
    let mut flower_check = BoundCheck {
        name: "flower-size",
        passed: true,
        detail: String::new(),
        bowtie: None,
        flower: None,
    };
    let mut largest_seen = 0usize;
    let mut largest_flower_seen = 0usize;
    for sub in maximal_disjoint_subfamilies(&cuts) {
        if cuts[sub[0]].is_empty() {
            continue;
        }
        report.subfamilies += 1;
        let members: Vec<CutSet> = sub.iter().map(|&i| cuts[i].clone()).collect();
        let maze = build_maze(graph, s, t, &members)?;
        check_maze_guard(&maze, guard)?;
        match kind {
            FamilyKind::Weighted { k } => {
                let (size, witness) = largest_bowtie(&maze, guard)?;
                largest_seen = largest_seen.max(size);
                if size > weighted_bowtie_bound(*k) && bowtie_check.passed {
                    bowtie_check.passed = false;
                    bowtie_check.bowtie = witness;
                }
            }
            FamilyKind::Chain { path_of_edge } => {
                let path_disjoint = |bt: &Bowtie| {
                    let owners: Vec<Vec<usize>> = bt
                        .sequence
                        .iter()
                        .map(|&u| {
                            maze.members[u]
                                .iter()
                                .map(|e| path_of_edge[e.index()])
                                .unique()
                                .collect()
                        })
                        .collect();
                    owners.iter().flatten().duplicates().next().is_none()
                };
                if let Some(bt) = search_bowtie(&maze, 4, path_disjoint)? {
                    if bowtie_check.passed {
                        bowtie_check.passed = false;
                        bowtie_check.bowtie = Some(bt);
                    }
                }
            }
        }
        if let Some(fl) = largest_flower(&maze, guard)? {
            largest_flower_seen = largest_flower_seen.max(fl.members.len());
            if fl.members.len() as u128 > flower_bound(maze.k()) && flower_check.passed {
                flower_check.passed = false;
                flower_check.flower = Some(fl);
            }
        }
    }
    bowtie_check.detail = match kind {
        FamilyKind::Weighted { k } => format!("largest bowtie {largest_seen}, bound {}", weighted_bowtie_bound(*k)),
        FamilyKind::Chain { .. } => {
            if bowtie_check.passed {
                "no path-disjoint 4-bowtie".to_string()
            } else {
                "path-disjoint 4-bowtie found".to_string()
            }
        }
    };
    flower_check.detail = format!("largest flower {largest_flower_seen}");
    report.checks.push(bowtie_check);
    report.checks.push(flower_check);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphBuilder;

    fn v(n: usize) -> Vertex {
        Vertex::from_number(n)
    }

    /// s=1, t=2; path x: 1→3→4→2 (edges 1,2,3), path y: 1→5→6→2 (edges 4,5,6)
    fn two_three_paths() -> ColoredDigraph {
        let mut b = GraphBuilder::new(6, 0);
        b.arc(1, 3, &[]);
        b.arc(3, 4, &[]);
        b.arc(4, 2, &[]);
        b.arc(1, 5, &[]);
        b.arc(5, 6, &[]);
        b.arc(6, 2, &[]);
        b.build().unwrap()
    }

    #[test]
    fn nested_singletons_orientation() {
        let mut b = GraphBuilder::new(4, 0);
        b.arc(1, 2, &[]);
        b.arc(2, 3, &[]);
        b.arc(3, 4, &[]);
        let g = b.build().unwrap();
        let maze = build_maze(&g, v(1), v(4), &[CutSet::from_numbers([2]), CutSet::from_numbers([3])]).unwrap();
        assert_eq!(maze.f(0, 1, 0), Orient::Bottom);
        assert_eq!(maze.f(1, 0, 0), Orient::Top);
    }

    #[test]
    fn single_member_and_overlap() {
        let g = two_three_paths();
        let one = build_maze(&g, v(1), v(2), &[CutSet::from_numbers([1, 4])]).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(find_bowtie(&one, 2, &AnalysisGuard::default()).unwrap(), None);
        let err = build_maze(
            &g,
            v(1),
            v(2),
            &[CutSet::from_numbers([1, 4]), CutSet::from_numbers([1, 5])],
        );
        assert!(err.unwrap_err().to_string().contains("not pairwise disjoint"));
    }

    #[test]
    fn hand_built_two_bowtie() {
        let g = two_three_paths();
        let c1 = CutSet::from_numbers([2, 5]);
        let c2 = CutSet::from_numbers([1, 6]);
        let maze = build_maze(&g, v(1), v(2), &[c1, c2]).unwrap();
        let bt = find_bowtie(&maze, 2, &AnalysisGuard::default()).unwrap().unwrap();
        assert_eq!(bt.sequence, vec![0, 1]);
        let e = |n| EdgeId::from_number(n);
        assert_eq!(bt.a, vec![vec![e(5)], vec![e(6)]]);
        assert_eq!(bt.b, vec![vec![e(2)], vec![e(1)]]);
    }

    #[test]
    fn nested_chain_three_bowtie() {
        let mut b = GraphBuilder::new(5, 0);
        for i in 1..=4 {
            b.arc(i, i + 1, &[]);
        }
        let g = b.build().unwrap();
        let fam: Vec<CutSet> = (1..=3).map(|i| CutSet::from_numbers([i])).collect();
        let maze = build_maze(&g, v(1), v(5), &fam).unwrap();
        let bt = find_bowtie(&maze, 3, &AnalysisGuard::default()).unwrap().unwrap();
        assert_eq!(bt.len(), 3);
        assert!(is_maze_bowtie(&maze, &bt.reversed()));
    }

    /// three parallel 3-edge paths; x/y/z = first/second/third edges
    fn three_paths() -> (ColoredDigraph, [[usize; 3]; 3]) {
        let mut b = GraphBuilder::new(8, 0);
        let mut ids = [[0; 3]; 3];
        for (p, row) in ids.iter_mut().enumerate() {
            let a = 3 + 2 * p;
            row[0] = b.arc(1, a, &[]).number();
            row[1] = b.arc(a, a + 1, &[]).number();
            row[2] = b.arc(a + 1, 2, &[]).number();
        }
        (b.build().unwrap(), ids)
    }

    #[test]
    fn hand_built_flower() {
        let (g, id) = three_paths();
        let (x, y, z) = (0, 1, 2);
        let fam = [
            CutSet::from_numbers([id[0][z], id[1][x], id[2][x]]),
            CutSet::from_numbers([id[0][y], id[1][z], id[2][y]]),
            CutSet::from_numbers([id[0][x], id[1][y], id[2][z]]),
        ];
        let maze = build_maze(&g, v(1), v(2), &fam).unwrap();
        let fl = find_flower(&maze, 3, &AnalysisGuard::default()).unwrap().unwrap();
        assert_eq!(fl.zeta, Orient::Top);
        let zs: Vec<EdgeId> = (0..3).map(|p| EdgeId::from_number(id[p][z])).collect();
        assert_eq!(fl.elements, zs);
        assert!(is_flower(&maze, &fl));
        assert!(3 <= flower_bound(3));
        assert!(find_flower(&maze, 1, &AnalysisGuard::default()).unwrap().is_some());
    }

    #[test]
    fn parallel_two_paths_have_no_two_flower() {
        let mut b = GraphBuilder::new(4, 0);
        b.arc(1, 3, &[]);
        b.arc(3, 2, &[]);
        b.arc(1, 4, &[]);
        b.arc(4, 2, &[]);
        let g = b.build().unwrap();
        let fam = [CutSet::from_numbers([1, 3]), CutSet::from_numbers([2, 4])];
        let maze = build_maze(&g, v(1), v(2), &fam).unwrap();
        assert_eq!(find_flower(&maze, 2, &AnalysisGuard::default()).unwrap(), None);
    }

    #[test]
    fn disjoint_subfamilies() {
        let fam = vec![
            CutSet::from_numbers([1]),
            CutSet::from_numbers([2]),
            CutSet::from_numbers([1, 3]),
            CutSet::from_numbers([2, 4]),
        ];
        assert_eq!(maximal_disjoint_subfamilies(&fam), vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn bounds_formulas() {
        assert_eq!(weighted_bowtie_bound(1), 3);
        assert_eq!(weighted_bowtie_bound(2), 6);
        assert_eq!(flower_bound(1), 32);
    }
}
