//! Solve a layered instance with about 10^5 vertices and 3·10^5 edges.

use std::time::Instant;

use mbcut::generate::gen_layered;
use mbcut::solve_mbcut;

pub fn run(layers: usize) -> mbcut::Result<String> {
    let inst = gen_layered(1, 4, layers, 50, 3)?;
    let start = Instant::now();
    let (cut, stats) = solve_mbcut(&inst)?;
    Ok(format!(
        "|V|={} |E|={} answer={} nodes={} depth_max={} in {:.2?}\n",
        inst.graph.num_vertices(),
        inst.graph.num_edges(),
        if cut.is_some() { "yes" } else { "no" },
        stats.nodes,
        stats.depth_max,
        start.elapsed()
    ))
}

fn main() -> mbcut::Result<()> {
    print!("{}", run(500)?);
    Ok(())
}
