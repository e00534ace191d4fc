//! Skew edge multicut: cut every s_i → t_j path with i ≥ j.

use mbcut::oracle::{brute_solve_skew, SizeGuard};
use mbcut::skew::{is_skew_multicut, solve_skew};
use mbcut::{Budgets, GraphBuilder, SkewInstance, Vertex};

pub fn run() -> mbcut::Result<String> {
    let v = Vertex::from_number;
    // pairs (1,3), (2,4); paths 1→3, 2→3, 2→4 must go, 1→4 may stay
    let mut b = GraphBuilder::new(5, 1);
    b.arc(1, 5, &[1]);
    b.arc(2, 5, &[1]);
    b.arc(5, 3, &[1]);
    b.arc(2, 4, &[1]);
    b.arc(1, 4, &[]);
    let inst = SkewInstance::new(b.build()?, Budgets::new(vec![2]), vec![(v(1), v(3)), (v(2), v(4))])?;

    let (cut, _) = solve_skew(&inst)?;
    let brute = brute_solve_skew(&inst, &SizeGuard::default())?;
    let mut out = String::new();
    if let Some(c) = &cut {
        out += &format!(
            "skew multicut {:?}, valid {}\n",
            c.numbers(),
            is_skew_multicut(&inst, c)
        );
    } else {
        out += "no skew multicut within budget\n";
    }
    out += &format!("brute force agrees: {}\n", cut.is_some() == brute.is_some());
    Ok(out)
}

fn main() -> mbcut::Result<()> {
    print!("{}", run()?);
    Ok(())
}
