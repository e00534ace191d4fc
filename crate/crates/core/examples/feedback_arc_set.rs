//! Multi-budgeted directed feedback arc set through skew multicut.

use mbcut::graph::is_acyclic;
use mbcut::oracle::{brute_solve_dfas, SizeGuard};
use mbcut::skew::{classic_dfas, solve_dfas};
use mbcut::{Budgets, DfasInstance, GraphBuilder};

pub fn run() -> mbcut::Result<String> {
    // two directed triangles sharing vertex 1; the arcs into 1 are color 2,
    // and the arc 1→2 carries both colors
    let mut b = GraphBuilder::new(5, 2);
    b.arc(1, 2, &[1, 2]);
    b.arc(2, 3, &[1]);
    b.arc(3, 1, &[2]);
    b.arc(1, 4, &[1]);
    b.arc(4, 5, &[1]);
    b.arc(5, 1, &[2]);
    let g = b.build()?;
    let mut out = String::new();
    let classic = classic_dfas(&g, 2)?;
    out += &format!("unbudgeted FAS of size ≤ 2: {:?}\n", classic.map(|c| c.numbers()));

    for budgets in [vec![1, 1], vec![2, 1], vec![1, 2]] {
        let inst = DfasInstance::new(g.clone(), Budgets::new(budgets.clone()))?;
        let (sol, _) = solve_dfas(&inst)?;
        let brute = brute_solve_dfas(&inst, &SizeGuard::default())?;
        let shown = match &sol {
            Some(c) => format!(
                "{:?} acyclic after removal: {}",
                c.numbers(),
                is_acyclic(&g, &c.to_edge_set(g.num_edges()))
            ),
            None => "none".to_string(),
        };
        out += &format!(
            "budgets {budgets:?}: {shown}; brute force agrees: {}\n",
            sol.is_some() == brute.is_some()
        );
    }
    Ok(out)
}

fn main() -> mbcut::Result<()> {
    print!("{}", run()?);
    Ok(())
}
