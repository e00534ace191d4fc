//! λ, the bottleneck set B and the closest-to-Y minimum cut C.

use mbcut::{max_flow_z, EdgeSet, FlowOutcome, GraphBuilder, Vertex};

pub fn run() -> mbcut::Result<String> {
    // s=1 → a=2 with two parallel a→t=3 edges; cutting s→a is cheapest
    let mut b = GraphBuilder::new(3, 0);
    b.arc(1, 2, &[]);
    b.arc(2, 3, &[]);
    b.arc(2, 3, &[]);
    let g = b.build()?;
    let z = EdgeSet::full(g.num_edges());
    let (s, t) = (Vertex::from_number(1), Vertex::from_number(3));

    let mut out = String::new();
    match max_flow_z(&g, &[s], &[t], &z, 3)? {
        FlowOutcome::Certificate(c) => {
            out += &format!("lambda {}\n", c.lambda);
            out += &format!("B {:?}\n", c.bottleneck.numbers());
            out += &format!("C {:?}\n", c.cut.numbers());
        }
        FlowOutcome::NoCutWithinK => out += "no cut within k\n",
    }
    // nothing deletable: no Z-respecting cut exists at all
    let none = EdgeSet::empty(g.num_edges());
    if let FlowOutcome::NoCutWithinK = max_flow_z(&g, &[s], &[t], &none, 5)? {
        out += "Z empty: no cut within k\n";
    }
    Ok(out)
}

fn main() -> mbcut::Result<()> {
    print!("{}", run()?);
    Ok(())
}
