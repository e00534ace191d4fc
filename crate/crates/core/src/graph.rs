//! Colored directed multigraphs and the cut predicates every solver shares.
//!
//! Vertices and edges are dense 0-based indices internally. The text format
//! and all user-facing output use 1-based numbers (see [`Vertex::number`] and
//! [`EdgeId::number`]).

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Upper bound on the number of colors, so a color set fits in a `u64`.
pub const MAX_COLORS: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(pub u32);

impl Vertex {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// 1-based vertex number as it appears in instance files.
    pub fn number(self) -> usize {
        self.0 as usize + 1
    }

    pub fn from_number(n: usize) -> Self {
        assert!(n >= 1, "vertex numbers are 1-based");
        Vertex((n - 1) as u32)
    }
}

/// Serialized as the 1-based number.
impl Serialize for Vertex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u64(self.number() as u64)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub u32);

impl EdgeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// 1-based edge number (file order).
    pub fn number(self) -> usize {
        self.0 as usize + 1
    }

    pub fn from_number(n: usize) -> Self {
        assert!(n >= 1, "edge numbers are 1-based");
        EdgeId((n - 1) as u32)
    }
}

/// Serialized as the 1-based number.
impl Serialize for EdgeId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u64(self.number() as u64)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.number())
    }
}

/// Set of colors carried by one edge, bit `i` standing for color `i + 1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct ColorSet(pub u64);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    /// Builds a set from 1-based color indices.
    pub fn from_colors<I: IntoIterator<Item = usize>>(colors: I) -> Self {
        let mut bits = 0u64;
        for c in colors {
            assert!((1..=MAX_COLORS).contains(&c), "color {c} out of range");
            bits |= 1 << (c - 1);
        }
        ColorSet(bits)
    }

    pub fn single(color: usize) -> Self {
        Self::from_colors([color])
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, color: usize) -> bool {
        (1..=MAX_COLORS).contains(&color) && self.0 & (1 << (color - 1)) != 0
    }

    /// 1-based colors in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..MAX_COLORS).filter(move |i| bits & (1 << i) != 0).map(|i| i + 1)
    }

    pub fn max_color(self) -> usize {
        if self.0 == 0 {
            0
        } else {
            MAX_COLORS - self.0.leading_zeros() as usize
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub tail: Vertex,
    pub head: Vertex,
    pub colors: ColorSet,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }
}

/// A directed multigraph whose edges carry color sets over `1..=num_colors`.
///
/// Immutable once built; adjacency lists are stored in edge-id order so every
/// traversal is deterministic.
#[derive(Clone, Debug)]
pub struct ColoredDigraph {
    n: usize,
    num_colors: usize,
    edges: Vec<Edge>,
    out_start: Vec<usize>,
    out_list: Vec<EdgeId>,
    in_start: Vec<usize>,
    in_list: Vec<EdgeId>,
}

impl PartialEq for ColoredDigraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.num_colors == other.num_colors && self.edges == other.edges
    }
}

impl Eq for ColoredDigraph {}

impl ColoredDigraph {
    pub fn new(n: usize, num_colors: usize, edges: Vec<Edge>) -> Result<Self> {
        if num_colors > MAX_COLORS {
            return Err(Error::invalid(format!(
                "{num_colors} colors exceeds the supported maximum of {MAX_COLORS}"
            )));
        }
        if edges.len() > u32::MAX as usize || n > u32::MAX as usize {
            return Err(Error::invalid("graph too large"));
        }
        for (i, e) in edges.iter().enumerate() {
            for v in [e.tail, e.head] {
                if v.index() >= n {
                    return Err(Error::invalid(format!(
                        "edge {} references vertex {} but n={n}",
                        i + 1,
                        v.number()
                    )));
                }
            }
            let top = e.colors.max_color();
            if top > num_colors {
                return Err(Error::invalid(format!("color {top} exceeds ℓ={num_colors}")));
            }
        }
        Ok(Self::build(n, num_colors, edges))
    }

    fn build(n: usize, num_colors: usize, edges: Vec<Edge>) -> Self {
        let mut out_deg = vec![0usize; n + 1];
        let mut in_deg = vec![0usize; n + 1];
        for e in &edges {
            out_deg[e.tail.index() + 1] += 1;
            in_deg[e.head.index() + 1] += 1;
        }
        for v in 0..n {
            out_deg[v + 1] += out_deg[v];
            in_deg[v + 1] += in_deg[v];
        }
        let mut out_list = vec![EdgeId(0); edges.len()];
        let mut in_list = vec![EdgeId(0); edges.len()];
        let mut out_fill = out_deg.clone();
        let mut in_fill = in_deg.clone();
        for (i, e) in edges.iter().enumerate() {
            out_list[out_fill[e.tail.index()]] = EdgeId(i as u32);
            out_fill[e.tail.index()] += 1;
            in_list[in_fill[e.head.index()]] = EdgeId(i as u32);
            in_fill[e.head.index()] += 1;
        }
        ColoredDigraph {
            n,
            num_colors,
            edges,
            out_start: out_deg,
            out_list,
            in_start: in_deg,
            in_list,
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e.index()]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edges.len() as u32).map(EdgeId)
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        (0..self.n as u32).map(Vertex)
    }

    /// Outgoing edges of `v` in ascending edge-id order.
    pub fn out_edges(&self, v: Vertex) -> &[EdgeId] {
        &self.out_list[self.out_start[v.index()]..self.out_start[v.index() + 1]]
    }

    /// Incoming edges of `v` in ascending edge-id order.
    pub fn in_edges(&self, v: Vertex) -> &[EdgeId] {
        &self.in_list[self.in_start[v.index()]..self.in_start[v.index() + 1]]
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        v.index() < self.n
    }

    /// Edges carrying at least one color, i.e. the union of all color classes.
    pub fn colored_edges(&self) -> EdgeSet {
        let mut set = EdgeSet::empty(self.num_edges());
        for e in self.edge_ids() {
            if !self.edge(e).colors.is_empty() {
                set.insert(e);
            }
        }
        set
    }

    /// The graph minus `removed`, on the same vertices, together with the
    /// original id of every surviving edge (indexed by its new id).
    pub fn without_edges(&self, removed: &EdgeSet) -> (ColoredDigraph, Vec<EdgeId>) {
        let kept: Vec<EdgeId> = self.edge_ids().filter(|&e| !removed.contains(e)).collect();
        let edges = kept.iter().map(|&e| *self.edge(e)).collect();
        let g = ColoredDigraph::new(self.n, self.num_colors, edges).expect("subgraph of a valid graph is valid");
        (g, kept)
    }
}

/// A subset of the edges of one graph, backed by a bitset.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeSet(FixedBitSet);

impl EdgeSet {
    pub fn empty(num_edges: usize) -> Self {
        EdgeSet(FixedBitSet::with_capacity(num_edges))
    }

    pub fn full(num_edges: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(num_edges);
        bits.insert_range(..);
        EdgeSet(bits)
    }

    pub fn from_edges<I: IntoIterator<Item = EdgeId>>(num_edges: usize, edges: I) -> Self {
        let mut set = Self::empty(num_edges);
        for e in edges {
            set.insert(e);
        }
        set
    }

    pub fn capacity(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.0.contains(e.index())
    }

    pub fn insert(&mut self, e: EdgeId) {
        self.0.insert(e.index());
    }

    pub fn remove(&mut self, e: EdgeId) {
        self.0.set(e.index(), false);
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.0.ones().map(|i| EdgeId(i as u32))
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.0.is_subset(&other.0)
    }
}

/// A set of vertices of one graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexSet(FixedBitSet);

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet(FixedBitSet::with_capacity(n))
    }

    pub fn from_vertices<I: IntoIterator<Item = Vertex>>(n: usize, vs: I) -> Self {
        let mut set = Self::empty(n);
        for v in vs {
            set.insert(v);
        }
        set
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(v.index())
    }

    pub fn insert(&mut self, v: Vertex) {
        self.0.insert(v.index());
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.ones().map(|i| Vertex(i as u32))
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }
}

/// Budgets `k_1..k_ℓ`. Signed because skew recursion may drive them below 1
/// (and, before rejection, below 0).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Budgets(pub Vec<i64>);

impl Budgets {
    pub fn new(values: Vec<i64>) -> Self {
        Budgets(values)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Budget of a 1-based color.
    pub fn get(&self, color: usize) -> i64 {
        self.0[color - 1]
    }

    /// `k = Σ k_i`.
    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn all_positive(&self) -> bool {
        self.0.iter().all(|&k| k >= 1)
    }

    pub fn any_negative(&self) -> bool {
        self.0.iter().any(|&k| k < 0)
    }

    /// Budgets left after paying `usage` per color.
    pub fn minus(&self, usage: &[usize]) -> Budgets {
        Budgets(self.0.iter().zip(usage).map(|(&k, &u)| k - u as i64).collect())
    }

    /// Top-level instance check: one budget per color, each at least one.
    pub fn validate_top_level(&self, num_colors: usize) -> Result<()> {
        if self.len() != num_colors {
            return Err(Error::invalid(format!(
                "{} budgets given for ℓ={num_colors}",
                self.len()
            )));
        }
        if let Some(pos) = self.0.iter().position(|&k| k < 1) {
            return Err(Error::invalid(format!(
                "budget k_{} = {} must be at least 1",
                pos + 1,
                self.0[pos]
            )));
        }
        Ok(())
    }
}

/// A solution edge set, kept sorted and duplicate-free.
///
/// Per-color usage is never stored; it is recomputed from the graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct CutSet {
    edges: Vec<EdgeId>,
}

impl CutSet {
    pub fn new<I: IntoIterator<Item = EdgeId>>(edges: I) -> Self {
        let mut edges: Vec<EdgeId> = edges.into_iter().collect();
        edges.sort_unstable();
        edges.dedup();
        CutSet { edges }
    }

    pub fn empty() -> Self {
        CutSet::default()
    }

    /// Convenience constructor from 1-based edge numbers.
    pub fn from_numbers<I: IntoIterator<Item = usize>>(numbers: I) -> Self {
        Self::new(numbers.into_iter().map(EdgeId::from_number))
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn numbers(&self) -> Vec<usize> {
        self.edges.iter().map(|e| e.number()).collect()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn to_edge_set(&self, num_edges: usize) -> EdgeSet {
        EdgeSet::from_edges(num_edges, self.edges.iter().copied())
    }

    pub fn is_disjoint(&self, other: &CutSet) -> bool {
        self.edges.iter().all(|e| !other.contains(*e))
    }

    /// `|C ∩ E_i|` for every color `i`.
    pub fn usage(&self, graph: &ColoredDigraph) -> Vec<usize> {
        let mut usage = vec![0; graph.num_colors()];
        for &e in &self.edges {
            for c in graph.edge(e).colors.iter() {
                usage[c - 1] += 1;
            }
        }
        usage
    }

    pub fn union(&self, other: &CutSet) -> CutSet {
        CutSet::new(self.edges.iter().chain(other.edges.iter()).copied())
    }
}

impl FromIterator<EdgeId> for CutSet {
    fn from_iter<T: IntoIterator<Item = EdgeId>>(iter: T) -> Self {
        CutSet::new(iter)
    }
}

/// Vertices reachable from `sources` along edges not in `removed`.
pub fn reachable(graph: &ColoredDigraph, sources: &[Vertex], removed: &EdgeSet) -> VertexSet {
    let mut seen = VertexSet::empty(graph.num_vertices());
    let mut queue = VecDeque::new();
    for &s in sources {
        if !seen.contains(s) {
            seen.insert(s);
            queue.push_back(s);
        }
    }
    while let Some(v) = queue.pop_front() {
        for &e in graph.out_edges(v) {
            if removed.contains(e) {
                continue;
            }
            let h = graph.edge(e).head;
            if !seen.contains(h) {
                seen.insert(h);
                queue.push_back(h);
            }
        }
    }
    seen
}

/// Reachable set after deleting the edges of a cut.
pub fn reachable_after(graph: &ColoredDigraph, sources: &[Vertex], cut: &CutSet) -> VertexSet {
    reachable(graph, sources, &cut.to_edge_set(graph.num_edges()))
}

pub fn is_cut(graph: &ColoredDigraph, x: &[Vertex], y: &[Vertex], removed: &EdgeSet) -> bool {
    let r = reachable(graph, x, removed);
    y.iter().all(|&v| !r.contains(v))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CutClass {
    NotACut,
    CutNotMinimal,
    Minimal,
}

/// Classifies `cut` as not an XY-cut, a non-minimal cut, or a minimal cut.
pub fn is_minimal_cut(graph: &ColoredDigraph, x: &[Vertex], y: &[Vertex], cut: &CutSet) -> CutClass {
    let mut removed = cut.to_edge_set(graph.num_edges());
    if !is_cut(graph, x, y, &removed) {
        return CutClass::NotACut;
    }
    for &e in cut.edges() {
        removed.remove(e);
        let still_cut = is_cut(graph, x, y, &removed);
        removed.insert(e);
        if still_cut {
            return CutClass::CutNotMinimal;
        }
    }
    CutClass::Minimal
}

/// `δ⁺(R)`: edges leaving the vertex set `r`.
pub fn out_boundary(graph: &ColoredDigraph, r: &VertexSet) -> CutSet {
    graph
        .edge_ids()
        .filter(|&e| {
            let edge = graph.edge(e);
            r.contains(edge.tail) && !r.contains(edge.head)
        })
        .collect()
}

/// Per-color usage of `cut` and whether it respects `budgets`.
///
/// A cut containing a colorless edge never respects the budgets.
pub fn budget_usage(graph: &ColoredDigraph, cut: &CutSet, budgets: &Budgets) -> (Vec<usize>, bool) {
    let usage = cut.usage(graph);
    let colored = cut.edges().iter().all(|&e| !graph.edge(e).colors.is_empty());
    let within = usage
        .iter()
        .enumerate()
        .all(|(i, &u)| (u as i64) <= budgets.0.get(i).copied().unwrap_or(0));
    (usage, colored && within)
}

pub fn is_budget_respecting(graph: &ColoredDigraph, cut: &CutSet, budgets: &Budgets) -> bool {
    budget_usage(graph, cut, budgets).1
}

/// True when `G − removed` has no directed cycle (self-loops count).
pub fn is_acyclic(graph: &ColoredDigraph, removed: &EdgeSet) -> bool {
    topological_order(graph, removed).is_some()
}

/// A topological order of `G − removed`, smallest available vertex first.
pub fn topological_order(graph: &ColoredDigraph, removed: &EdgeSet) -> Option<Vec<Vertex>> {
    let mut indeg = vec![0usize; graph.num_vertices()];
    for e in graph.edge_ids().filter(|e| !removed.contains(*e)) {
        indeg[graph.edge(e).head.index()] += 1;
    }
    let mut ready: std::collections::BinaryHeap<std::cmp::Reverse<Vertex>> = graph
        .vertices()
        .filter(|v| indeg[v.index()] == 0)
        .map(std::cmp::Reverse)
        .collect();
    let mut order = Vec::with_capacity(graph.num_vertices());
    while let Some(std::cmp::Reverse(v)) = ready.pop() {
        order.push(v);
        for &e in graph.out_edges(v) {
            if removed.contains(e) {
                continue;
            }
            let h = graph.edge(e).head;
            indeg[h.index()] -= 1;
            if indeg[h.index()] == 0 {
                ready.push(std::cmp::Reverse(h));
            }
        }
    }
    (order.len() == graph.num_vertices()).then_some(order)
}

/// Small builder used by generators, reductions and tests.
#[derive(Clone, Debug, Default)]
pub struct GraphBuilder {
    n: usize,
    num_colors: usize,
    edges: Vec<Edge>,
}

impl GraphBuilder {
    pub fn new(n: usize, num_colors: usize) -> Self {
        GraphBuilder {
            n,
            num_colors,
            edges: Vec::new(),
        }
    }

    pub fn add_vertex(&mut self) -> Vertex {
        self.n += 1;
        Vertex((self.n - 1) as u32)
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Adds an edge between 0-based vertices.
    pub fn edge(&mut self, tail: Vertex, head: Vertex, colors: ColorSet) -> EdgeId {
        self.edges.push(Edge { tail, head, colors });
        EdgeId((self.edges.len() - 1) as u32)
    }

    /// Adds an edge between 1-based vertex numbers with 1-based colors.
    pub fn arc(&mut self, tail: usize, head: usize, colors: &[usize]) -> EdgeId {
        self.edge(
            Vertex::from_number(tail),
            Vertex::from_number(head),
            ColorSet::from_colors(colors.iter().copied()),
        )
    }

    pub fn build(self) -> Result<ColoredDigraph> {
        ColoredDigraph::new(self.n, self.num_colors, self.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(n: usize) -> Vertex {
        Vertex::from_number(n)
    }

    // s=1, a=2, t=3
    fn path() -> ColoredDigraph {
        let mut b = GraphBuilder::new(3, 1);
        b.arc(1, 2, &[1]);
        b.arc(2, 3, &[1]);
        b.build().unwrap()
    }

    #[test]
    fn reachable_stops_at_removed_edge() {
        let g = path();
        let r = reachable(&g, &[v(1)], &EdgeSet::from_edges(2, [EdgeId(1)]));
        assert_eq!(r.iter().collect::<Vec<_>>(), vec![v(1), v(2)]);
        let all = reachable(&g, &[v(1)], &EdgeSet::empty(2));
        assert_eq!(all.len(), 3);
    }

    #[test]
    fn reachable_on_two_paths() {
        // s=1, a=2, b=3, t=4: s→a, a→t, s→b, b→t
        let mut b = GraphBuilder::new(4, 0);
        b.arc(1, 2, &[]);
        b.arc(2, 4, &[]);
        b.arc(1, 3, &[]);
        b.arc(3, 4, &[]);
        let g = b.build().unwrap();
        let removed = EdgeSet::from_edges(4, [EdgeId(0), EdgeId(3)]);
        let r = reachable(&g, &[v(1)], &removed);
        assert_eq!(r.iter().collect::<Vec<_>>(), vec![v(1), v(3)]);
    }

    #[test]
    fn minimal_cut_classification() {
        let g = path();
        let (s, t) = ([v(1)], [v(3)]);
        assert_eq!(
            is_minimal_cut(&g, &s, &t, &CutSet::from_numbers([1])),
            CutClass::Minimal
        );
        assert_eq!(
            is_minimal_cut(&g, &s, &t, &CutSet::from_numbers([1, 2])),
            CutClass::CutNotMinimal
        );
        assert_eq!(is_minimal_cut(&g, &s, &t, &CutSet::empty()), CutClass::NotACut);
    }

    #[test]
    fn usage_counts_every_color_of_an_edge() {
        let mut b = GraphBuilder::new(2, 2);
        b.arc(1, 2, &[1, 2]);
        b.arc(1, 2, &[]);
        let g = b.build().unwrap();
        let (usage, ok) = budget_usage(&g, &CutSet::empty(), &Budgets(vec![1, 0]));
        assert_eq!(usage, vec![0, 0]);
        assert!(ok);
        let (usage, ok) = budget_usage(&g, &CutSet::from_numbers([1]), &Budgets(vec![1, 0]));
        assert_eq!(usage, vec![1, 1]);
        assert!(!ok);
        let (_, ok) = budget_usage(&g, &CutSet::from_numbers([2]), &Budgets(vec![5, 5]));
        assert!(!ok, "colorless edges are never budget-respecting");
    }

    #[test]
    fn rejects_out_of_range_color() {
        let edges = vec![Edge {
            tail: v(1),
            head: v(2),
            colors: ColorSet::single(3),
        }];
        let err = ColoredDigraph::new(2, 2, edges).unwrap_err();
        assert!(err.to_string().contains("color 3 exceeds ℓ=2"), "{err}");
    }

    #[test]
    fn boundary_of_minimal_cut_is_the_cut() {
        let g = path();
        let cut = CutSet::from_numbers([2]);
        let r = reachable_after(&g, &[v(1)], &cut);
        assert_eq!(out_boundary(&g, &r), cut);
    }

    #[test]
    fn adjacency_is_in_edge_order() {
        let mut b = GraphBuilder::new(2, 0);
        b.arc(1, 2, &[]);
        b.arc(2, 1, &[]);
        b.arc(1, 2, &[]);
        let g = b.build().unwrap();
        assert_eq!(g.out_edges(v(1)), &[EdgeId(0), EdgeId(2)]);
        assert_eq!(g.in_edges(v(1)), &[EdgeId(1)]);
    }
}
