//! Bounded unit-capacity augmentation where only a chosen edge set `Z` is
//! deletable.
//!
//! Edges of `Z` have capacity one; every other edge is uncuttable. Instead of
//! a numeric infinity, non-`Z` edges simply never saturate: their forward
//! residual arc always exists. At most `k + 1` augmenting paths are pushed,
//! so a call costs `O(k (|V| + |E|))`.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{ColoredDigraph, CutSet, EdgeId, EdgeSet, Vertex};

/// Everything learned from one maximum-flow computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlowCertificate {
    /// Size of a minimum `Z`-respecting XY-cut.
    pub lambda: usize,
    /// `lambda` X→Y paths; no edge of `Z` lies on two of them.
    pub paths: Vec<Vec<EdgeId>>,
    /// Edges lying in at least one minimum `Z`-respecting cut.
    pub bottleneck: CutSet,
    /// The minimum `Z`-respecting cut closest to `Y`.
    pub cut: CutSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FlowOutcome {
    Certificate(FlowCertificate),
    /// Every `Z`-respecting cut has more than `k` edges (or none exists).
    NoCutWithinK,
}

impl FlowOutcome {
    pub fn certificate(self) -> Option<FlowCertificate> {
        match self {
            FlowOutcome::Certificate(c) => Some(c),
            FlowOutcome::NoCutWithinK => None,
        }
    }
}

struct Network<'g> {
    graph: &'g ColoredDigraph,
    z: &'g EdgeSet,
    is_x: Vec<bool>,
    is_y: Vec<bool>,
    flow: Vec<u32>,
    src_flow: Vec<u32>,
    sink_flow: Vec<u32>,
}

#[derive(Clone, Copy)]
enum Parent {
    None,
    Source,
    Forward(EdgeId),
    Backward(EdgeId),
}

impl<'g> Network<'g> {
    fn forward_open(&self, e: EdgeId) -> bool {
        !self.z.contains(e) || self.flow[e.index()] == 0
    }

    /// One BFS augmentation in edge-id order. Returns false when no
    /// augmenting path exists.
    fn augment(&mut self, parent: &mut [Parent], queue: &mut VecDeque<Vertex>) -> bool {
        let g = self.graph;
        parent.fill(Parent::None);
        queue.clear();
        for v in g.vertices() {
            if self.is_x[v.index()] {
                parent[v.index()] = Parent::Source;
                queue.push_back(v);
            }
        }
        let mut target = None;
        'bfs: while let Some(v) = queue.pop_front() {
            for &e in g.out_edges(v) {
                let edge = g.edge(e);
                if edge.is_loop() || !self.forward_open(e) {
                    continue;
                }
                let h = edge.head;
                if matches!(parent[h.index()], Parent::None) {
                    parent[h.index()] = Parent::Forward(e);
                    if self.is_y[h.index()] {
                        target = Some(h);
                        break 'bfs;
                    }
                    queue.push_back(h);
                }
            }
            for &e in g.in_edges(v) {
                let edge = g.edge(e);
                if edge.is_loop() || self.flow[e.index()] == 0 {
                    continue;
                }
                let t = edge.tail;
                if matches!(parent[t.index()], Parent::None) {
                    parent[t.index()] = Parent::Backward(e);
                    if self.is_y[t.index()] {
                        target = Some(t);
                        break 'bfs;
                    }
                    queue.push_back(t);
                }
            }
        }
        let Some(y) = target else {
            return false;
        };
        self.sink_flow[y.index()] += 1;
        let mut v = y;
        loop {
            match parent[v.index()] {
                Parent::Source => {
                    self.src_flow[v.index()] += 1;
                    break;
                }
                Parent::Forward(e) => {
                    self.flow[e.index()] += 1;
                    v = g.edge(e).tail;
                }
                Parent::Backward(e) => {
                    self.flow[e.index()] -= 1;
                    v = g.edge(e).head;
                }
                Parent::None => unreachable!("augmenting path broken"),
            }
        }
        true
    }

    /// Residual adjacency over `n + 2` nodes (`n` = super source, `n + 1` =
    /// super sink), as a compressed list.
    fn residual(&self) -> (Vec<usize>, Vec<u32>) {
        let g = self.graph;
        let n = g.num_vertices();
        let (src, sink) = (n, n + 1);
        let mut arcs: Vec<(usize, usize)> = Vec::with_capacity(2 * g.num_edges() + 2 * n);
        for v in 0..n {
            if self.is_x[v] {
                arcs.push((src, v));
                if self.src_flow[v] > 0 {
                    arcs.push((v, src));
                }
            }
            if self.is_y[v] {
                arcs.push((v, sink));
                if self.sink_flow[v] > 0 {
                    arcs.push((sink, v));
                }
            }
        }
        for e in g.edge_ids() {
            let edge = g.edge(e);
            if edge.is_loop() {
                continue;
            }
            if self.forward_open(e) {
                arcs.push((edge.tail.index(), edge.head.index()));
            }
            if self.flow[e.index()] > 0 {
                arcs.push((edge.head.index(), edge.tail.index()));
            }
        }
        let mut start = vec![0usize; n + 3];
        for &(a, _) in &arcs {
            start[a + 1] += 1;
        }
        for i in 0..n + 2 {
            start[i + 1] += start[i];
        }
        let mut fill = start.clone();
        let mut adj = vec![0u32; arcs.len()];
        for &(a, b) in &arcs {
            adj[fill[a]] = b as u32;
            fill[a] += 1;
        }
        (start, adj)
    }

    /// Splits the flow into unit paths, dropping any flow cycles met on the way.
    fn decompose(&self, lambda: usize) -> Vec<Vec<EdgeId>> {
        let g = self.graph;
        let mut rem = self.flow.clone();
        let mut src_rem = self.src_flow.clone();
        let mut sink_rem = self.sink_flow.clone();
        let mut cursor = vec![0usize; g.num_vertices()];
        let mut on_path: Vec<Option<usize>> = vec![None; g.num_vertices()];
        let mut paths = Vec::with_capacity(lambda);
        for _ in 0..lambda {
            let start = (0..g.num_vertices())
                .find(|&v| src_rem[v] > 0)
                .expect("flow value and source flow disagree");
            src_rem[start] -= 1;
            let mut verts = vec![Vertex(start as u32)];
            let mut path: Vec<EdgeId> = Vec::new();
            on_path[start] = Some(0);
            loop {
                let v = *verts.last().unwrap();
                if self.is_y[v.index()] && sink_rem[v.index()] > 0 {
                    sink_rem[v.index()] -= 1;
                    break;
                }
                let outs = g.out_edges(v);
                let c = &mut cursor[v.index()];
                while *c < outs.len() && (rem[outs[*c].index()] == 0 || g.edge(outs[*c]).is_loop()) {
                    *c += 1;
                }
                let e = *outs.get(*c).expect("flow conservation violated");
                rem[e.index()] -= 1;
                let h = g.edge(e).head;
                if let Some(pos) = on_path[h.index()] {
                    // cycle: drop it
                    for u in verts.drain(pos + 1..) {
                        on_path[u.index()] = None;
                    }
                    path.truncate(pos);
                } else {
                    on_path[h.index()] = Some(verts.len());
                    verts.push(h);
                    path.push(e);
                }
            }
            for u in &verts {
                on_path[u.index()] = None;
            }
            paths.push(path);
        }
        paths
    }
}

/// Strongly connected component labels (iterative Tarjan).
fn scc_labels(start: &[usize], adj: &[u32]) -> Vec<u32> {
    let n = start.len() - 1;
    const UNSEEN: u32 = u32::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0u32; n];
    let mut comp = vec![UNSEEN; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<u32> = Vec::new();
    let mut call: Vec<(u32, usize)> = Vec::new();
    let mut next_index = 0u32;
    let mut next_comp = 0u32;
    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root as u32, start[root]));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root as u32);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            let v = v as usize;
            if *pos < start[v + 1] {
                let w = adj[*pos] as usize;
                *pos += 1;
                if index[w] == UNSEEN {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w as u32);
                    on_stack[w] = true;
                    call.push((w as u32, start[w]));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(p, _)) = call.last() {
                    let p = p as usize;
                    low[p] = low[p].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().unwrap() as usize;
                        on_stack[w] = false;
                        comp[w] = next_comp;
                        if w == v {
                            break;
                        }
                    }
                    next_comp += 1;
                }
            }
        }
    }
    comp
}

/// Computes λ, a path family, the bottleneck set `B` and the closest-to-`Y`
/// minimum `Z`-respecting XY-cut, or reports that no `Z`-respecting cut of
/// size at most `k` exists.
pub fn max_flow_z(graph: &ColoredDigraph, x: &[Vertex], y: &[Vertex], z: &EdgeSet, k: usize) -> Result<FlowOutcome> {
    let n = graph.num_vertices();
    let mut is_x = vec![false; n];
    let mut is_y = vec![false; n];
    for &v in x {
        is_x[v.index()] = true;
    }
    for &v in y {
        if is_x[v.index()] {
            return Err(Error::invalid(format!("vertex {} is in both X and Y", v.number())));
        }
        is_y[v.index()] = true;
    }
    let mut net = Network {
        graph,
        z,
        is_x,
        is_y,
        flow: vec![0; graph.num_edges()],
        src_flow: vec![0; n],
        sink_flow: vec![0; n],
    };
    let mut parent = vec![Parent::None; n];
    let mut queue = VecDeque::new();
    let mut lambda = 0usize;
    while lambda <= k {
        if !net.augment(&mut parent, &mut queue) {
            break;
        }
        lambda += 1;
    }
    if lambda > k {
        return Ok(FlowOutcome::NoCutWithinK);
    }

    let (start, adj) = net.residual();
    let comp = scc_labels(&start, &adj);
    let bottleneck: CutSet = graph
        .edge_ids()
        .filter(|&e| {
            let edge = graph.edge(e);
            z.contains(e)
                && !edge.is_loop()
                && net.flow[e.index()] == 1
                && comp[edge.tail.index()] != comp[edge.head.index()]
        })
        .collect();

    let paths = net.decompose(lambda);
    let cut: CutSet = paths
        .iter()
        .map(|p| {
            *p.iter()
                .rev()
                .find(|e| bottleneck.contains(**e))
                .expect("every flow path crosses the bottleneck set")
        })
        .collect();

    Ok(FlowOutcome::Certificate(FlowCertificate {
        lambda,
        paths,
        bottleneck,
        cut,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphBuilder;

    fn v(n: usize) -> Vertex {
        Vertex::from_number(n)
    }

    fn cert(outcome: FlowOutcome) -> FlowCertificate {
        outcome.certificate().expect("expected a certificate")
    }

    #[test]
    fn single_path_with_one_deletable_edge() {
        let mut b = GraphBuilder::new(3, 0);
        b.arc(1, 2, &[]);
        b.arc(2, 3, &[]);
        let g = b.build().unwrap();
        let z = EdgeSet::from_edges(2, [EdgeId(1)]);
        let c = cert(max_flow_z(&g, &[v(1)], &[v(3)], &z, 3).unwrap());
        assert_eq!(c.lambda, 1);
        assert_eq!(c.paths, vec![vec![EdgeId(0), EdgeId(1)]]);
        assert_eq!(c.bottleneck, CutSet::from_numbers([2]));
        assert_eq!(c.cut, CutSet::from_numbers([2]));
    }

    #[test]
    fn prefers_single_edge_before_parallel_pair() {
        // s→a, then two parallel a→t edges
        let mut b = GraphBuilder::new(3, 0);
        b.arc(1, 2, &[]);
        b.arc(2, 3, &[]);
        b.arc(2, 3, &[]);
        let g = b.build().unwrap();
        let z = EdgeSet::full(3);
        let c = cert(max_flow_z(&g, &[v(1)], &[v(3)], &z, 3).unwrap());
        assert_eq!(c.lambda, 1);
        assert_eq!(c.bottleneck, CutSet::from_numbers([1]));
        assert_eq!(c.cut, CutSet::from_numbers([1]));
    }

    #[test]
    fn uncuttable_path_refuses() {
        let mut b = GraphBuilder::new(3, 0);
        b.arc(1, 2, &[]);
        b.arc(2, 3, &[]);
        let g = b.build().unwrap();
        let out = max_flow_z(&g, &[v(1)], &[v(3)], &EdgeSet::empty(2), 5).unwrap();
        assert_eq!(out, FlowOutcome::NoCutWithinK);
    }

    #[test]
    fn refuses_when_minimum_exceeds_k() {
        let mut b = GraphBuilder::new(4, 0);
        b.arc(1, 2, &[]);
        b.arc(2, 4, &[]);
        b.arc(1, 3, &[]);
        b.arc(3, 4, &[]);
        let g = b.build().unwrap();
        let out = max_flow_z(&g, &[v(1)], &[v(4)], &EdgeSet::full(4), 1).unwrap();
        assert_eq!(out, FlowOutcome::NoCutWithinK);
        let c = cert(max_flow_z(&g, &[v(1)], &[v(4)], &EdgeSet::full(4), 2).unwrap());
        assert_eq!(c.lambda, 2);
        assert_eq!(c.bottleneck.len(), 4);
        assert_eq!(c.cut, CutSet::from_numbers([2, 4]));
    }

    #[test]
    fn disconnected_gives_empty_certificate() {
        let mut b = GraphBuilder::new(3, 0);
        b.arc(2, 3, &[]);
        let g = b.build().unwrap();
        let c = cert(max_flow_z(&g, &[v(1)], &[v(3)], &EdgeSet::full(1), 0).unwrap());
        assert_eq!(c.lambda, 0);
        assert!(c.paths.is_empty() && c.bottleneck.is_empty() && c.cut.is_empty());
    }

    #[test]
    fn overlapping_terminals_rejected() {
        let g = GraphBuilder::new(2, 0).build().unwrap();
        assert!(max_flow_z(&g, &[v(1)], &[v(1)], &EdgeSet::empty(0), 1).is_err());
    }

    #[test]
    fn backward_arcs_are_used() {
        // classic crossing: s→a, s→b, a→b, a→t, b→t; BFS order forces a reroute
        let mut b = GraphBuilder::new(4, 0);
        b.arc(1, 2, &[]); // s→a
        b.arc(2, 3, &[]); // a→b
        b.arc(3, 4, &[]); // b→t
        b.arc(1, 3, &[]); // s→b
        b.arc(2, 4, &[]); // a→t
        let g = b.build().unwrap();
        let c = cert(max_flow_z(&g, &[v(1)], &[v(4)], &EdgeSet::full(5), 5).unwrap());
        assert_eq!(c.lambda, 2);
        assert_eq!(c.paths.len(), 2);
        assert_eq!(c.cut, CutSet::from_numbers([3, 5]));
    }
}
