//! Decide a small two-color cut instance and compare with brute force.

use mbcut::oracle::{brute_solve_mbcut, SizeGuard};
use mbcut::{solve_mbcut, Budgets, CutInstance, GraphBuilder, Vertex};

pub fn run() -> mbcut::Result<String> {
    // s=1, t=6; three routes, the middle one shares a color-1 bottleneck
    let mut b = GraphBuilder::new(6, 2);
    b.arc(1, 2, &[1]);
    b.arc(2, 6, &[2]);
    b.arc(1, 3, &[1]);
    b.arc(3, 4, &[]);
    b.arc(4, 6, &[2]);
    b.arc(1, 5, &[2]);
    b.arc(5, 6, &[1, 2]);
    let inst = CutInstance::new(
        b.build()?,
        vec![Vertex::from_number(1)],
        vec![Vertex::from_number(6)],
        Budgets::new(vec![2, 1]),
    )?;

    let (cut, stats) = solve_mbcut(&inst)?;
    let brute = brute_solve_mbcut(&inst, &SizeGuard::default())?;
    let mut out = String::new();
    match &cut {
        Some(c) => out += &format!("cut {:?}, usage {:?}\n", c.numbers(), c.usage(&inst.graph)),
        None => out += "no budget-respecting cut\n",
    }
    out += &format!(
        "nodes {} flow calls {} depth {}\n",
        stats.nodes, stats.flow_calls, stats.depth_max
    );
    out += &format!("brute force agrees: {}\n", cut.is_some() == brute.is_some());
    Ok(out)
}

fn main() -> mbcut::Result<()> {
    print!("{}", run()?);
    Ok(())
}
