//! Instance transformations between multi-budgeted cut, weighted st-cut and
//! constrained bipartite vertex cover, plus color padding.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Budgets, ColorSet, ColoredDigraph, CutSet, Edge, EdgeId, GraphBuilder, Vertex};
use crate::instance::{CutInstance, WeightedCutInstance};

/// What a produced edge stands for in the source instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SourceObject {
    /// A vertex of the source (vertex-cover gadget arcs).
    Vertex(Vertex),
    /// A source edge, `copy` numbering parallel copies from 0.
    Edge { edge: EdgeId, copy: usize },
    /// An arc from the super source to a vertex of `X`.
    SourceArc(Vertex),
    /// An arc from a vertex of `Y` to the super sink.
    SinkArc(Vertex),
    /// The forced edge added for a padding color.
    PadColor(usize),
}

impl fmt::Display for SourceObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SourceObject::Vertex(v) => write!(f, "vertex {v}"),
            SourceObject::Edge { edge, copy } => write!(f, "edge {} copy {}", edge.number(), copy + 1),
            SourceObject::SourceArc(v) => write!(f, "super source to {v}"),
            SourceObject::SinkArc(v) => write!(f, "{v} to super sink"),
            SourceObject::PadColor(c) => write!(f, "padding color {c}"),
        }
    }
}

/// Provenance of every edge a reduction produces, indexed by produced edge id.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReductionMap {
    pub produced_from: Vec<SourceObject>,
}

impl ReductionMap {
    fn push(&mut self, src: SourceObject) {
        self.produced_from.push(src);
    }

    /// Produced edge ids grouped by source object.
    pub fn forward(&self) -> BTreeMap<SourceObject, Vec<EdgeId>> {
        let mut out: BTreeMap<SourceObject, Vec<EdgeId>> = BTreeMap::new();
        for (i, src) in self.produced_from.iter().enumerate() {
            out.entry(*src).or_default().push(EdgeId(i as u32));
        }
        out
    }

    /// One line per produced edge.
    pub fn notes(&self) -> Vec<String> {
        self.produced_from
            .iter()
            .enumerate()
            .map(|(i, src)| format!("e{}: {src}", i + 1))
            .collect()
    }
}

/// Bipartite graph with sides `U = 0..u` and `L = 0..l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartite {
    pub u: usize,
    pub l: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Bipartite {
    pub fn new(u: usize, l: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(a, b)) = edges.iter().find(|&&(a, b)| a >= u || b >= l) {
            return Err(Error::invalid(format!("edge ({a},{b}) leaves the {u}×{l} bipartition")));
        }
        Ok(Bipartite { u, l, edges })
    }

    /// Two-colors an undirected graph on `0..n`; the side containing the
    /// smallest vertex of each component becomes `U`. Returns the bipartite
    /// graph and, per input vertex, its side and index within that side.
    pub fn from_undirected(n: usize, edges: &[(usize, usize)]) -> Result<(Self, Vec<(bool, usize)>)> {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::invalid(format!("edge ({a},{b}) names a vertex ≥ {n}")));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut side: Vec<Option<bool>> = vec![None; n];
        for root in 0..n {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(true);
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    match side[w] {
                        None => {
                            side[w] = Some(!side[v].unwrap());
                            queue.push_back(w);
                        }
                        Some(sw) if sw == side[v].unwrap() => {
                            return Err(Error::invalid(format!(
                                "graph is not bipartite: odd cycle through {v} and {w}"
                            )));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        let mut place = Vec::with_capacity(n);
        let (mut nu, mut nl) = (0, 0);
        for s in &side {
            if s.unwrap() {
                place.push((true, nu));
                nu += 1;
            } else {
                place.push((false, nl));
                nl += 1;
            }
        }
        let bip_edges = edges
            .iter()
            .map(|&(a, b)| {
                let (pa, pb) = (place[a], place[b]);
                if pa.0 {
                    (pa.1, pb.1)
                } else {
                    (pb.1, pa.1)
                }
            })
            .collect();
        Ok((Bipartite::new(nu, nl, bip_edges)?, place))
    }
}

/// Vertex-cover gadget: `s`, then `U`, then `L`, then `t`. Arcs `(s, u)` of
/// color 1, `(v, t)` of color 2 and a colorless `(u, v)` per edge; budgets
/// `(k_U, k_L)`. Yes exactly when a cover with at most `k_U` vertices of `U`
/// and `k_L` of `L` exists.
pub fn vc_to_mbcut(graph: &Bipartite, k_u: i64, k_l: i64) -> Result<(CutInstance, ReductionMap)> {
    if k_u < 1 || k_l < 1 {
        return Err(Error::invalid("vertex-cover budgets must be at least 1"));
    }
    let n = graph.u + graph.l + 2;
    let s = 1;
    let t = n;
    let u_num = |i: usize| 2 + i;
    let l_num = |j: usize| 2 + graph.u + j;
    let mut b = GraphBuilder::new(n, 2);
    let mut map = ReductionMap::default();
    for i in 0..graph.u {
        b.arc(s, u_num(i), &[1]);
        map.push(SourceObject::Vertex(Vertex::from_number(u_num(i))));
    }
    for j in 0..graph.l {
        b.arc(l_num(j), t, &[2]);
        map.push(SourceObject::Vertex(Vertex::from_number(l_num(j))));
    }
    for (idx, &(i, j)) in graph.edges.iter().enumerate() {
        b.arc(u_num(i), l_num(j), &[]);
        map.push(SourceObject::Edge {
            edge: EdgeId(idx as u32),
            copy: 0,
        });
    }
    let inst = CutInstance::new(
        b.build()?,
        vec![Vertex::from_number(s)],
        vec![Vertex::from_number(t)],
        Budgets(vec![k_u, k_l]),
    )?;
    Ok((inst, map))
}

/// Reads a cover off a gadget cut: `(U-indices, L-indices)`.
pub fn cover_from_cut(graph: &Bipartite, cut: &CutSet) -> (Vec<usize>, Vec<usize>) {
    let mut us = Vec::new();
    let mut ls = Vec::new();
    for e in cut.edges() {
        let i = e.index();
        if i < graph.u {
            us.push(i);
        } else if i < graph.u + graph.l {
            ls.push(i - graph.u);
        }
    }
    (us, ls)
}

/// Raises the color count to `target` by adding, per new color, an edge
/// from the first vertex of `X` to the first vertex of `Y` carrying only that
/// color, with budget 1. The new edges must be cut and exactly use their budgets.
pub fn pad_colors(instance: &CutInstance, target: usize) -> Result<(CutInstance, ReductionMap)> {
    let g = &instance.graph;
    if target < g.num_colors() {
        return Err(Error::invalid(format!(
            "cannot pad ℓ={} down to {target}",
            g.num_colors()
        )));
    }
    let mut edges = g.edges().to_vec();
    let mut map = ReductionMap {
        produced_from: g.edge_ids().map(|edge| SourceObject::Edge { edge, copy: 0 }).collect(),
    };
    let mut budgets = instance.budgets.0.clone();
    for c in g.num_colors() + 1..=target {
        edges.push(Edge {
            tail: instance.x[0],
            head: instance.y[0],
            colors: ColorSet::single(c),
        });
        map.push(SourceObject::PadColor(c));
        budgets.push(1);
    }
    let padded = ColoredDigraph::new(g.num_vertices(), target, edges)?;
    let inst = CutInstance::new(padded, instance.x.clone(), instance.y.clone(), Budgets(budgets))?;
    Ok((inst, map))
}

/// Parameters of the 2-budget → weighted reduction for budgets `(k1, k2)`:
/// `(weight of a color-1 edge, cardinality bound k, weight bound w)`.
pub fn weighted_parameters(k1: u64, k2: u64) -> (u64, u64, u64) {
    let heavy = (k1 + 1) * k2 + 1;
    let k = (k1 + 1) * k2 + k1;
    let w = k1 * heavy + (k1 + 1) * k2;
    (heavy, k, w)
}

/// Two-budget cut to weighted st-cut. Edges in both color classes are split
/// into a color-1 original and an appended color-2 copy. A super source `s`
/// and sink `t` are attached with prohibitive weight `w + 1`, which colorless
/// edges also get. Color-1 edges weigh `(k1+1)k2+1`; each color-2 edge
/// becomes `k1 + 1` unit-weight copies.
pub fn mbcut2_to_weighted(instance: &CutInstance) -> Result<(WeightedCutInstance, ReductionMap)> {
    let g = &instance.graph;
    if g.num_colors() != 2 {
        return Err(Error::invalid(format!("expected ℓ=2, got ℓ={}", g.num_colors())));
    }
    if instance.budgets.any_negative() {
        return Err(Error::invalid("budgets must be non-negative"));
    }
    let (k1, k2) = (instance.budgets.get(1) as u64, instance.budgets.get(2) as u64);
    let (heavy, k, w) = weighted_parameters(k1, k2);
    let prohibitive = w + 1;

    // disjoint color classes: (source edge, copy index, color set)
    let mut classes: Vec<(EdgeId, usize, ColorSet)> = Vec::new();
    let mut extra = Vec::new();
    for e in g.edge_ids() {
        let colors = g.edge(e).colors;
        if colors.contains(1) && colors.contains(2) {
            classes.push((e, 0, ColorSet::single(1)));
            extra.push((e, 1, ColorSet::single(2)));
        } else {
            classes.push((e, 0, colors));
        }
    }
    classes.extend(extra);

    let n = g.num_vertices();
    let s = Vertex(n as u32);
    let t = Vertex(n as u32 + 1);
    let mut edges = Vec::new();
    let mut weights = Vec::new();
    let mut map = ReductionMap::default();
    for (e, dup, colors) in classes {
        let base = g.edge(e);
        let plain = Edge {
            colors: ColorSet::EMPTY,
            ..*base
        };
        if colors.contains(2) {
            for c in 0..=k1 as usize {
                edges.push(plain);
                weights.push(1);
                map.push(SourceObject::Edge {
                    edge: e,
                    copy: dup * (k1 as usize + 1) + c,
                });
            }
        } else {
            edges.push(plain);
            weights.push(if colors.contains(1) { heavy } else { prohibitive });
            map.push(SourceObject::Edge { edge: e, copy: dup });
        }
    }
    for &x in &instance.x {
        edges.push(Edge {
            tail: s,
            head: x,
            colors: ColorSet::EMPTY,
        });
        weights.push(prohibitive);
        map.push(SourceObject::SourceArc(x));
    }
    for &y in &instance.y {
        edges.push(Edge {
            tail: y,
            head: t,
            colors: ColorSet::EMPTY,
        });
        weights.push(prohibitive);
        map.push(SourceObject::SinkArc(y));
    }
    let graph = ColoredDigraph::new(n + 2, 0, edges)?;
    let inst = WeightedCutInstance::new(graph, weights, s, t, k as usize, w)?;
    Ok((inst, map))
}

/// Weighted st-cut to two-budget cut: each edge of weight `ω` becomes one
/// color-1 copy and `ω` color-2 copies; budgets are `(k, w)`. Refuses when
/// the output would exceed `max_edges` edges.
pub fn weighted_to_mbcut2(instance: &WeightedCutInstance, max_edges: usize) -> Result<(CutInstance, ReductionMap)> {
    if instance.k == 0 || instance.w == 0 {
        return Err(Error::invalid("k and w must be at least 1 to form budgets"));
    }
    let total: u64 = instance.weights.iter().map(|&w| w + 1).sum();
    if total > max_edges as u64 {
        return Err(Error::Guard(format!(
            "reduction would create {total} edges, above {max_edges}"
        )));
    }
    let g = &instance.graph;
    let mut edges = Vec::with_capacity(total as usize);
    let mut map = ReductionMap::default();
    for e in g.edge_ids() {
        let base = *g.edge(e);
        edges.push(Edge {
            colors: ColorSet::single(1),
            ..base
        });
        map.push(SourceObject::Edge { edge: e, copy: 0 });
        for c in 0..instance.weights[e.index()] as usize {
            edges.push(Edge {
                colors: ColorSet::single(2),
                ..base
            });
            map.push(SourceObject::Edge { edge: e, copy: c + 1 });
        }
    }
    let graph = ColoredDigraph::new(g.num_vertices(), 2, edges)?;
    let budgets = Budgets(vec![instance.k as i64, instance.w as i64]);
    let inst = CutInstance::new(graph, vec![instance.s], vec![instance.t], budgets)?;
    Ok((inst, map))
}

/// Source edges all of whose produced copies are in `cut`.
pub fn fully_cut_sources(map: &ReductionMap, cut: &CutSet) -> CutSet {
    map.forward()
        .into_iter()
        .fold(BTreeMap::<EdgeId, bool>::new(), |mut acc, (src, produced)| {
            if let SourceObject::Edge { edge, .. } = src {
                let all = produced.iter().all(|&e| cut.contains(e));
                let entry = acc.entry(edge).or_insert(true);
                *entry &= all;
            }
            acc
        })
        .into_iter()
        .filter(|&(_, all)| all)
        .map(|(e, _)| e)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{brute_constrained_bipartite_vc, brute_solve_mbcut, brute_solve_weighted, SizeGuard};

    fn v(n: usize) -> Vertex {
        Vertex::from_number(n)
    }

    #[test]
    fn weighted_parameter_arithmetic() {
        assert_eq!(weighted_parameters(1, 1), (3, 3, 5));
        assert_eq!(weighted_parameters(2, 3), (10, 11, 29));
    }

    #[test]
    fn single_vc_edge_gadget() {
        let bip = Bipartite::new(1, 1, vec![(0, 0)]).unwrap();
        let (inst, map) = vc_to_mbcut(&bip, 1, 1).unwrap();
        assert_eq!(inst.graph.num_edges(), 3);
        assert_eq!(map.produced_from.len(), 3);
        let cut = brute_solve_mbcut(&inst, &SizeGuard::default()).unwrap().unwrap();
        assert_eq!(cut.len(), 1);
        assert!(vc_to_mbcut(&bip, 0, 1).is_err());
    }

    #[test]
    fn vc_path_uses_middle_vertex() {
        // u1 – v1 – u2 with v1 ∈ L
        let bip = Bipartite::new(2, 1, vec![(0, 0), (1, 0)]).unwrap();
        let (inst, _) = vc_to_mbcut(&bip, 2, 1).unwrap();
        let g = SizeGuard::default();
        let cut = brute_solve_mbcut(&inst, &g).unwrap().unwrap();
        assert_eq!(cover_from_cut(&bip, &cut), (vec![], vec![0]));
        assert!(brute_constrained_bipartite_vc(2, 1, &bip.edges, 2, 1, &g)
            .unwrap()
            .is_some());
    }

    #[test]
    fn vc_without_edges_needs_nothing() {
        let bip = Bipartite::new(2, 2, vec![]).unwrap();
        let (inst, _) = vc_to_mbcut(&bip, 1, 1).unwrap();
        assert_eq!(
            brute_solve_mbcut(&inst, &SizeGuard::default()).unwrap(),
            Some(CutSet::empty())
        );
    }

    #[test]
    fn odd_cycle_rejected() {
        assert!(Bipartite::from_undirected(3, &[(0, 1), (1, 2), (2, 0)]).is_err());
        let (bip, place) = Bipartite::from_undirected(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!((bip.u, bip.l), (2, 1));
        assert_eq!(place[1], (false, 0));
    }

    fn parallel_pair() -> CutInstance {
        let mut b = GraphBuilder::new(2, 2);
        b.arc(1, 2, &[1]);
        b.arc(1, 2, &[2]);
        CutInstance::new(b.build().unwrap(), vec![v(1)], vec![v(2)], Budgets(vec![1, 1])).unwrap()
    }

    #[test]
    fn pad_colors_adds_forced_edges() {
        let inst = parallel_pair();
        let (same, _) = pad_colors(&inst, 2).unwrap();
        assert_eq!(same, inst);
        let (three, map) = pad_colors(&inst, 3).unwrap();
        assert_eq!(three.graph.num_edges(), 3);
        assert_eq!(three.budgets, Budgets(vec![1, 1, 1]));
        assert_eq!(map.produced_from[2], SourceObject::PadColor(3));
        let g = SizeGuard::default();
        let (five, _) = pad_colors(&inst, 5).unwrap();
        assert_eq!(five.graph.num_edges(), 5);
        assert_eq!(
            brute_solve_mbcut(&five, &g).unwrap().is_some(),
            brute_solve_mbcut(&inst, &g).unwrap().is_some()
        );
    }

    #[test]
    fn mbcut2_to_weighted_on_parallel_pair() {
        let inst = parallel_pair();
        let (w, map) = mbcut2_to_weighted(&inst).unwrap();
        assert_eq!((w.k, w.w), (3, 5));
        // color-1 edge weight 3, two unit copies of the color-2 edge, two prohibitive terminal arcs
        assert_eq!(w.weights, vec![3, 1, 1, 6, 6]);
        assert_eq!(map.forward().len(), 5);
        let g = SizeGuard::default();
        assert!(brute_solve_weighted(&w, &g).unwrap().is_some());
        assert!(brute_solve_mbcut(&inst, &g).unwrap().is_some());
    }

    #[test]
    fn shared_color_edges_are_split() {
        let mut b = GraphBuilder::new(2, 2);
        b.arc(1, 2, &[1, 2]);
        let inst = CutInstance::new(b.build().unwrap(), vec![v(1)], vec![v(2)], Budgets(vec![1, 1])).unwrap();
        let (w, map) = mbcut2_to_weighted(&inst).unwrap();
        // original as color 1 (weight 3), copy as two unit edges, then terminal arcs
        assert_eq!(w.weights, vec![3, 1, 1, 6, 6]);
        assert_eq!(
            map.produced_from[1],
            SourceObject::Edge {
                edge: EdgeId(0),
                copy: 2
            }
        );
        assert!(mbcut2_to_weighted(&pad_colors(&inst, 3).unwrap().0).is_err());
    }

    fn weighted_single(weight: u64, k: usize, w: u64) -> WeightedCutInstance {
        let mut b = GraphBuilder::new(2, 0);
        b.arc(1, 2, &[]);
        WeightedCutInstance::new(b.build().unwrap(), vec![weight], v(1), v(2), k, w).unwrap()
    }

    #[test]
    fn weighted_to_mbcut2_examples() {
        let g = SizeGuard::default();
        let (inst, _) = weighted_to_mbcut2(&weighted_single(1, 1, 1), 100).unwrap();
        assert_eq!(inst.graph.num_edges(), 2);
        assert_eq!(inst.budgets, Budgets(vec![1, 1]));
        assert!(brute_solve_mbcut(&inst, &g).unwrap().is_some());

        let (inst, _) = weighted_to_mbcut2(&weighted_single(3, 1, 2), 100).unwrap();
        assert_eq!(inst.budgets, Budgets(vec![1, 2]));
        assert!(brute_solve_mbcut(&inst, &g).unwrap().is_none());

        let mut b = GraphBuilder::new(3, 0);
        b.arc(1, 2, &[]);
        b.arc(2, 3, &[]);
        let path = WeightedCutInstance::new(b.build().unwrap(), vec![1, 5], v(1), v(3), 1, 1).unwrap();
        let (inst, map) = weighted_to_mbcut2(&path, 100).unwrap();
        let cut = brute_solve_mbcut(&inst, &g).unwrap().unwrap();
        assert_eq!(fully_cut_sources(&map, &cut), CutSet::from_numbers([1]));

        assert!(matches!(weighted_to_mbcut2(&path, 5), Err(Error::Guard(_))));
        assert!(weighted_to_mbcut2(&weighted_single(1, 0, 1), 100).is_err());
    }
}
