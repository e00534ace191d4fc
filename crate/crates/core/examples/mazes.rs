//! Orientation tables, bowties and flowers of disjoint cut families.

use mbcut::analysis::{build_maze, find_bowtie, find_flower, flower_bound, AnalysisGuard};
use mbcut::{CutSet, GraphBuilder, Vertex};

/// `count` internally disjoint 1→2 paths of three edges each.
fn paths(count: usize) -> mbcut::Result<mbcut::ColoredDigraph> {
    let mut b = GraphBuilder::new(2 + 2 * count, 0);
    for p in 0..count {
        let a = 3 + 2 * p;
        b.arc(1, a, &[]);
        b.arc(a, a + 1, &[]);
        b.arc(a + 1, 2, &[]);
    }
    b.build()
}

pub fn run() -> mbcut::Result<String> {
    let guard = AnalysisGuard::default();
    let mut out = String::new();
    let (s, t) = (Vertex::from_number(1), Vertex::from_number(2));

    let crossing = [CutSet::from_numbers([2, 5]), CutSet::from_numbers([1, 6])];
    let maze = build_maze(&paths(2)?, s, t, &crossing)?;
    if let Some(bt) = find_bowtie(&maze, 2, &guard)? {
        let nums = |parts: &[Vec<mbcut::EdgeId>]| -> Vec<Vec<usize>> {
            parts.iter().map(|p| p.iter().map(|e| e.number()).collect()).collect()
        };
        out += &format!("2-bowtie: a {:?}, b {:?}\n", nums(&bt.a), nums(&bt.b));
    }

    let family = [
        CutSet::from_numbers([3, 4, 7]),
        CutSet::from_numbers([2, 6, 8]),
        CutSet::from_numbers([1, 5, 9]),
    ];
    let maze = build_maze(&paths(3)?, s, t, &family)?;
    if let Some(f) = find_flower(&maze, 3, &guard)? {
        let elems: Vec<usize> = f.elements.iter().map(|e| e.number()).collect();
        out += &format!(
            "flower of {} with zeta {} on edges {elems:?}\n",
            f.members.len(),
            f.zeta
        );
    }
    out += &format!("flower bound for k=3: {}\n", flower_bound(3));
    Ok(out)
}

fn main() -> mbcut::Result<()> {
    print!("{}", run()?);
    Ok(())
}
