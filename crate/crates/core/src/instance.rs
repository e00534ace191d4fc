//! Typed problem instances. Constructors check the structural invariants;
//! [`CutInstance::validate_top_level`] and friends additionally demand
//! `k_i ≥ 1`, which recursive calls are allowed to violate.

use crate::error::{Error, Result};
use crate::graph::{Budgets, ColoredDigraph, EdgeId, Vertex};

fn check_vertex(graph: &ColoredDigraph, v: Vertex, what: &str) -> Result<()> {
    if graph.contains_vertex(v) {
        Ok(())
    } else {
        Err(Error::invalid(format!(
            "{what} vertex {} not in 1..={}",
            v.number(),
            graph.num_vertices()
        )))
    }
}

fn check_budget_len(graph: &ColoredDigraph, budgets: &Budgets) -> Result<()> {
    if budgets.len() != graph.num_colors() {
        return Err(Error::invalid(format!(
            "{} budgets given for ℓ={}",
            budgets.len(),
            graph.num_colors()
        )));
    }
    Ok(())
}

/// Multi-budgeted cut: separate `X` from `Y` within per-color budgets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutInstance {
    pub graph: ColoredDigraph,
    pub x: Vec<Vertex>,
    pub y: Vec<Vertex>,
    pub budgets: Budgets,
}

impl CutInstance {
    pub fn new(graph: ColoredDigraph, x: Vec<Vertex>, y: Vec<Vertex>, budgets: Budgets) -> Result<Self> {
        if x.is_empty() || y.is_empty() {
            return Err(Error::invalid("X and Y must be nonempty"));
        }
        for &v in &x {
            check_vertex(&graph, v, "X")?;
        }
        for &v in &y {
            check_vertex(&graph, v, "Y")?;
            if x.contains(&v) {
                return Err(Error::invalid(format!("vertex {} is in both X and Y", v.number())));
            }
        }
        check_budget_len(&graph, &budgets)?;
        let mut x = x;
        let mut y = y;
        x.sort_unstable();
        x.dedup();
        y.sort_unstable();
        y.dedup();
        Ok(CutInstance { graph, x, y, budgets })
    }

    pub fn validate_top_level(&self) -> Result<()> {
        self.budgets.validate_top_level(self.graph.num_colors())
    }

    pub fn k(&self) -> i64 {
        self.budgets.total()
    }
}

/// Multi-budgeted skew edge multicut over an ordered list of terminal pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewInstance {
    pub graph: ColoredDigraph,
    pub budgets: Budgets,
    pub pairs: Vec<(Vertex, Vertex)>,
}

impl SkewInstance {
    pub fn new(graph: ColoredDigraph, budgets: Budgets, pairs: Vec<(Vertex, Vertex)>) -> Result<Self> {
        for &(s, t) in &pairs {
            check_vertex(&graph, s, "terminal")?;
            check_vertex(&graph, t, "terminal")?;
        }
        check_budget_len(&graph, &budgets)?;
        Ok(SkewInstance { graph, budgets, pairs })
    }

    pub fn validate_top_level(&self) -> Result<()> {
        self.budgets.validate_top_level(self.graph.num_colors())
    }
}

/// Multi-budgeted directed feedback arc set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DfasInstance {
    pub graph: ColoredDigraph,
    pub budgets: Budgets,
}

impl DfasInstance {
    pub fn new(graph: ColoredDigraph, budgets: Budgets) -> Result<Self> {
        check_budget_len(&graph, &budgets)?;
        Ok(DfasInstance { graph, budgets })
    }

    pub fn validate_top_level(&self) -> Result<()> {
        self.budgets.validate_top_level(self.graph.num_colors())
    }
}

/// Chain ℓ-SAT in graph form: an st-cut touching at most `k` of the given
/// paths, which partition the edge set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainInstance {
    pub graph: ColoredDigraph,
    pub s: Vertex,
    pub t: Vertex,
    pub paths: Vec<Vec<EdgeId>>,
    pub max_path_len: usize,
    pub k: usize,
}

impl ChainInstance {
    pub fn new(
        graph: ColoredDigraph,
        s: Vertex,
        t: Vertex,
        paths: Vec<Vec<EdgeId>>,
        max_path_len: usize,
        k: usize,
    ) -> Result<Self> {
        check_vertex(&graph, s, "source")?;
        check_vertex(&graph, t, "sink")?;
        if s == t {
            return Err(Error::invalid("s and t must differ"));
        }
        let mut owner = vec![None; graph.num_edges()];
        for (p, path) in paths.iter().enumerate() {
            if path.is_empty() {
                return Err(Error::invalid(format!("path {} is empty", p + 1)));
            }
            if path.len() > max_path_len {
                return Err(Error::invalid(format!(
                    "path {} has {} edges, more than ℓ={max_path_len}",
                    p + 1,
                    path.len()
                )));
            }
            let mut visited = vec![graph.edge(path[0]).tail];
            for (i, &e) in path.iter().enumerate() {
                if e.index() >= graph.num_edges() {
                    return Err(Error::invalid(format!(
                        "path {} names unknown edge {}",
                        p + 1,
                        e.number()
                    )));
                }
                if let Some(prev) = owner[e.index()] {
                    return Err(Error::invalid(format!(
                        "edge {} appears in paths {} and {}",
                        e.number(),
                        prev + 1,
                        p + 1
                    )));
                }
                owner[e.index()] = Some(p);
                let edge = graph.edge(e);
                if i > 0 && graph.edge(path[i - 1]).head != edge.tail {
                    return Err(Error::invalid(format!(
                        "path {}: edge {} does not continue edge {}",
                        p + 1,
                        e.number(),
                        path[i - 1].number()
                    )));
                }
                if visited.contains(&edge.head) {
                    return Err(Error::invalid(format!("path {} is not simple", p + 1)));
                }
                visited.push(edge.head);
            }
        }
        if let Some(e) = owner.iter().position(Option::is_none) {
            return Err(Error::invalid(format!("edge {} belongs to no path", e + 1)));
        }
        Ok(ChainInstance {
            graph,
            s,
            t,
            paths,
            max_path_len,
            k,
        })
    }

    /// Index of the path owning each edge.
    pub fn path_of_edge(&self) -> Vec<usize> {
        let mut owner = vec![0; self.graph.num_edges()];
        for (p, path) in self.paths.iter().enumerate() {
            for &e in path {
                owner[e.index()] = p;
            }
        }
        owner
    }

    pub fn with_k(&self, k: usize) -> ChainInstance {
        ChainInstance { k, ..self.clone() }
    }
}

/// Weighted st-cut: cardinality at most `k` and weight at most `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedCutInstance {
    pub graph: ColoredDigraph,
    pub weights: Vec<u64>,
    pub s: Vertex,
    pub t: Vertex,
    pub k: usize,
    pub w: u64,
}

impl WeightedCutInstance {
    pub fn new(graph: ColoredDigraph, weights: Vec<u64>, s: Vertex, t: Vertex, k: usize, w: u64) -> Result<Self> {
        check_vertex(&graph, s, "source")?;
        check_vertex(&graph, t, "sink")?;
        if s == t {
            return Err(Error::invalid("s and t must differ"));
        }
        if weights.len() != graph.num_edges() {
            return Err(Error::invalid("one weight per edge required"));
        }
        if let Some(e) = weights.iter().position(|&w| w == 0) {
            return Err(Error::invalid(format!(
                "edge {} has weight 0; weights must be positive",
                e + 1
            )));
        }
        Ok(WeightedCutInstance {
            graph,
            weights,
            s,
            t,
            k,
            w,
        })
    }

    pub fn weight_of(&self, edges: &[EdgeId]) -> u64 {
        edges.iter().map(|e| self.weights[e.index()]).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Cut(CutInstance),
    Skew(SkewInstance),
    Dfas(DfasInstance),
    Chain(ChainInstance),
    Weighted(WeightedCutInstance),
}

impl Instance {
    pub fn kind(&self) -> &'static str {
        match self {
            Instance::Cut(_) => "mbcut",
            Instance::Skew(_) => "skew",
            Instance::Dfas(_) => "dfas",
            Instance::Chain(_) => "chain",
            Instance::Weighted(_) => "wcut",
        }
    }

    pub fn graph(&self) -> &ColoredDigraph {
        match self {
            Instance::Cut(i) => &i.graph,
            Instance::Skew(i) => &i.graph,
            Instance::Dfas(i) => &i.graph,
            Instance::Chain(i) => &i.graph,
            Instance::Weighted(i) => &i.graph,
        }
    }
}
