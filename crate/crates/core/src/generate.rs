//! Seeded instance generators. All randomness comes from
//! `Xoshiro256PlusPlus::seed_from_u64`, so a seed fixes the instance exactly.

use rand::{RngExt, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::error::{Error, Result};
use crate::graph::{Budgets, ColorSet, ColoredDigraph, Edge, GraphBuilder, Vertex};
use crate::instance::{CutInstance, DfasInstance, SkewInstance};

pub type Rng = Xoshiro256PlusPlus;

pub fn rng(seed: u64) -> Rng {
    Xoshiro256PlusPlus::seed_from_u64(seed)
}

/// `k` internally disjoint s→t paths of `k` edges each, the `j`-th edge of
/// every path colored `j`, all budgets 1. Every way of assigning the colors
/// to the paths bijectively gives a distinct important cut.
pub fn gen_factorial_family(k: usize) -> Result<CutInstance> {
    if !(1..=6).contains(&k) {
        return Err(Error::invalid(format!("factorial family needs 1 ≤ k ≤ 6, got {k}")));
    }
    let n = 2 + k * (k - 1);
    let (s, t) = (1, 2);
    let mut b = GraphBuilder::new(n, k);
    for p in 0..k {
        let inner = |j: usize| 3 + p * (k - 1) + j;
        for j in 0..k {
            let tail = if j == 0 { s } else { inner(j - 1) };
            let head = if j == k - 1 { t } else { inner(j) };
            b.arc(tail, head, &[j + 1]);
        }
    }
    CutInstance::new(
        b.build()?,
        vec![Vertex::from_number(s)],
        vec![Vertex::from_number(t)],
        Budgets(vec![1; k]),
    )
}

/// Shape of a random graph.
#[derive(Clone, Debug, PartialEq)]
pub struct RandomParams {
    pub n: usize,
    pub m: usize,
    pub num_colors: usize,
    pub budgets: Vec<i64>,
    /// Probability that an edge carries any given color.
    pub color_density: f64,
    /// Forbid self-loops and parallel edges.
    pub simple: bool,
}

impl RandomParams {
    fn check(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::invalid("n must be positive"));
        }
        if self.budgets.len() != self.num_colors {
            return Err(Error::invalid("one budget per color required"));
        }
        if !(0.0..=1.0).contains(&self.color_density) {
            return Err(Error::invalid("color density must lie in [0, 1]"));
        }
        if self.simple && self.m > self.n * (self.n - 1) {
            return Err(Error::invalid(format!(
                "a simple digraph on {} vertices has at most {} edges",
                self.n,
                self.n * (self.n - 1)
            )));
        }
        Ok(())
    }
}

fn random_colors(rng: &mut Rng, num_colors: usize, density: f64) -> ColorSet {
    ColorSet::from_colors((1..=num_colors).filter(|_| rng.random_bool(density)))
}

/// Random digraph; in simple mode pairs are drawn without repetition.
pub fn random_graph(rng: &mut Rng, p: &RandomParams) -> Result<ColoredDigraph> {
    p.check()?;
    let mut edges = Vec::with_capacity(p.m);
    let mut used = std::collections::HashSet::new();
    while edges.len() < p.m {
        let tail = rng.random_range(0..p.n);
        let head = rng.random_range(0..p.n);
        if p.simple && (tail == head || !used.insert((tail, head))) {
            continue;
        }
        edges.push(Edge {
            tail: Vertex(tail as u32),
            head: Vertex(head as u32),
            colors: random_colors(rng, p.num_colors, p.color_density),
        });
    }
    ColoredDigraph::new(p.n, p.num_colors, edges)
}

fn random_subset(rng: &mut Rng, pool: &mut Vec<Vertex>, size: usize) -> Vec<Vertex> {
    (0..size.min(pool.len()))
        .map(|_| pool.swap_remove(rng.random_range(0..pool.len())))
        .collect()
}

/// Random multi-budgeted cut instance with one or two vertices in each of `X`, `Y`.
pub fn gen_random_cut(seed: u64, p: &RandomParams) -> Result<CutInstance> {
    if p.n < 2 {
        return Err(Error::invalid("a cut instance needs at least 2 vertices"));
    }
    let mut rng = rng(seed);
    let graph = random_graph(&mut rng, p)?;
    let mut pool: Vec<Vertex> = graph.vertices().collect();
    let xs = rng.random_range(1..=2usize.min(p.n - 1));
    let x = random_subset(&mut rng, &mut pool, xs);
    let ys = rng.random_range(1..=2usize.min(pool.len()));
    let y = random_subset(&mut rng, &mut pool, ys);
    CutInstance::new(graph, x, y, Budgets(p.budgets.clone()))
}

/// Random skew instance with `q` pairs, `s_i ≠ t_i`.
pub fn gen_random_skew(seed: u64, p: &RandomParams, q: usize) -> Result<SkewInstance> {
    if p.n < 2 && q > 0 {
        return Err(Error::invalid("terminal pairs need at least 2 vertices"));
    }
    let mut rng = rng(seed);
    let graph = random_graph(&mut rng, p)?;
    let pairs = (0..q)
        .map(|_| {
            let s = rng.random_range(0..p.n);
            let mut t = rng.random_range(0..p.n - 1);
            if t >= s {
                t += 1;
            }
            (Vertex(s as u32), Vertex(t as u32))
        })
        .collect();
    SkewInstance::new(graph, Budgets(p.budgets.clone()), pairs)
}

pub fn gen_random_dfas(seed: u64, p: &RandomParams) -> Result<DfasInstance> {
    let mut rng = rng(seed);
    let graph = random_graph(&mut rng, p)?;
    DfasInstance::new(graph, Budgets(p.budgets.clone()))
}

/// Random chain instance: `paths` vertex-disjoint-inside s→t paths whose
/// lengths are drawn from `1..=max_len`, plus `extra` random cross paths of
/// one edge between existing vertices. Returns `(graph, s, t, paths)` pieces
/// ready for [`crate::instance::ChainInstance::new`].
pub fn gen_random_chain(
    seed: u64,
    paths: usize,
    max_len: usize,
    extra: usize,
    k: usize,
) -> Result<crate::instance::ChainInstance> {
    if paths == 0 || max_len == 0 {
        return Err(Error::invalid("need at least one path of length at least one"));
    }
    let mut rng = rng(seed);
    let mut b = GraphBuilder::new(2, 0);
    let (s, t) = (Vertex(0), Vertex(1));
    let mut edge_paths = Vec::new();
    let mut inner = Vec::new();
    for _ in 0..paths {
        let len = rng.random_range(1..=max_len);
        let mut prev = s;
        let mut path = Vec::new();
        for j in 0..len {
            let next = if j == len - 1 { t } else { b.add_vertex() };
            if j < len - 1 {
                inner.push(next);
            }
            path.push(b.edge(prev, next, ColorSet::EMPTY));
            prev = next;
        }
        edge_paths.push(path);
    }
    let all: Vec<Vertex> = [s, t].into_iter().chain(inner.iter().copied()).collect();
    for _ in 0..extra {
        let a = all[rng.random_range(0..all.len())];
        let c = all[rng.random_range(0..all.len())];
        if a == c || a == t || c == s {
            continue;
        }
        edge_paths.push(vec![b.edge(a, c, ColorSet::EMPTY)]);
    }
    crate::instance::ChainInstance::new(b.build()?, s, t, edge_paths, max_len, k)
}

/// Random weighted st-cut instance on a random simple digraph with `s = 1`, `t = n`.
pub fn gen_random_weighted(
    seed: u64,
    n: usize,
    m: usize,
    max_weight: u64,
    k: usize,
    w: u64,
) -> Result<crate::instance::WeightedCutInstance> {
    let p = RandomParams {
        n,
        m,
        num_colors: 0,
        budgets: vec![],
        color_density: 0.0,
        simple: true,
    };
    let mut rng = rng(seed);
    let graph = random_graph(&mut rng, &p)?;
    let weights = (0..m).map(|_| rng.random_range(1..=max_weight)).collect();
    crate::instance::WeightedCutInstance::new(graph, weights, Vertex(0), Vertex((n - 1) as u32), k, w)
}

/// Large layered instance: `channels` independent colorless layered DAGs
/// (each `layers × width`, `out_degree` random arcs per vertex into the next
/// layer) between a source `s` and sink `t`. Channel `c` is entered by a
/// color-1 arc `s → a_c` and left by a color-2 arc `b_c → t`. With budgets
/// `(⌈c/2⌉, ⌊c/2⌋)` the answer is yes and requires branching.
pub fn gen_layered(seed: u64, channels: usize, layers: usize, width: usize, out_degree: usize) -> Result<CutInstance> {
    if channels < 2 || layers == 0 || width == 0 || out_degree == 0 {
        return Err(Error::invalid(
            "layered instance needs ≥2 channels and positive dimensions",
        ));
    }
    let mut rng = rng(seed);
    let mut b = GraphBuilder::new(2, 2);
    let (s, t) = (Vertex(0), Vertex(1));
    for _ in 0..channels {
        let a = b.add_vertex();
        let z = b.add_vertex();
        b.edge(s, a, ColorSet::single(1));
        let first = b.num_vertices();
        for _ in 0..layers * width {
            b.add_vertex();
        }
        let at = |layer: usize, i: usize| Vertex((first + layer * width + i) as u32);
        for i in 0..width {
            b.edge(a, at(0, i), ColorSet::EMPTY);
        }
        for layer in 0..layers - 1 {
            for i in 0..width {
                for _ in 0..out_degree {
                    let j = rng.random_range(0..width);
                    b.edge(at(layer, i), at(layer + 1, j), ColorSet::EMPTY);
                }
            }
        }
        for i in 0..width {
            b.edge(at(layers - 1, i), z, ColorSet::EMPTY);
        }
        b.edge(z, t, ColorSet::single(2));
    }
    let k1 = channels.div_ceil(2) as i64;
    let k2 = (channels / 2) as i64;
    CutInstance::new(b.build()?, vec![s], vec![t], Budgets(vec![k1, k2]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::{parse_str, write_instance};
    use crate::instance::Instance;

    fn small() -> RandomParams {
        RandomParams {
            n: 4,
            m: 6,
            num_colors: 2,
            budgets: vec![1, 1],
            color_density: 0.6,
            simple: false,
        }
    }

    #[test]
    fn factorial_shapes() {
        let one = gen_factorial_family(1).unwrap();
        assert_eq!((one.graph.num_vertices(), one.graph.num_edges()), (2, 1));
        let three = gen_factorial_family(3).unwrap();
        assert_eq!(three.graph.num_edges(), 9);
        assert_eq!(three.budgets, Budgets(vec![1, 1, 1]));
        assert!(gen_factorial_family(7).is_err());
        assert!(gen_factorial_family(0).is_err());
    }

    #[test]
    fn same_seed_same_bytes() {
        let a = write_instance(&Instance::Cut(gen_random_cut(1, &small()).unwrap()));
        let b = write_instance(&Instance::Cut(gen_random_cut(1, &small()).unwrap()));
        assert_eq!(a, b);
        assert!(parse_str(&a).is_ok());
        let c = write_instance(&Instance::Cut(gen_random_cut(2, &small()).unwrap()));
        assert_ne!(a, c);
    }

    #[test]
    fn simple_mode_limits() {
        let mut p = small();
        p.simple = true;
        p.m = 13;
        assert!(gen_random_cut(0, &p).is_err());
        p.m = 12;
        let inst = gen_random_cut(0, &p).unwrap();
        assert!(inst.graph.edges().iter().all(|e| !e.is_loop()));
    }

    #[test]
    fn layered_size() {
        let inst = gen_layered(7, 4, 10, 5, 3).unwrap();
        assert_eq!(inst.graph.num_vertices(), 2 + 4 * (2 + 50));
        assert_eq!(inst.graph.num_edges(), 4 * (2 + 5 + 9 * 5 * 3 + 5));
        assert_eq!(inst.budgets, Budgets(vec![2, 2]));
    }

    #[test]
    fn chain_and_weighted_generators_validate() {
        for seed in 0..20 {
            gen_random_chain(seed, 3, 3, 2, 2).unwrap();
            gen_random_weighted(seed, 5, 8, 3, 2, 4).unwrap();
            gen_random_skew(seed, &small(), 2).unwrap();
            gen_random_dfas(seed, &small()).unwrap();
        }
    }
}
