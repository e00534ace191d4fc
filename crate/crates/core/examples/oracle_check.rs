//! Cross-check the branching solver against exhaustive search on seeded
//! random instances.

use mbcut::generate::{gen_random_cut, RandomParams};
use mbcut::graph::is_budget_respecting;
use mbcut::oracle::{brute_solve_mbcut, SizeGuard};
use mbcut::{is_minimal_cut, solve_mbcut, CutClass};

pub fn run(count: u64) -> mbcut::Result<String> {
    let params = RandomParams {
        n: 7,
        m: 12,
        num_colors: 2,
        budgets: vec![1, 2],
        color_density: 0.5,
        simple: true,
    };
    let (mut yes, mut agree) = (0, 0);
    for seed in 0..count {
        let inst = gen_random_cut(seed, &params)?;
        let (cut, _) = solve_mbcut(&inst)?;
        let brute = brute_solve_mbcut(&inst, &SizeGuard::default())?;
        let valid = cut.as_ref().is_none_or(|c| {
            is_budget_respecting(&inst.graph, c, &inst.budgets)
                && is_minimal_cut(&inst.graph, &inst.x, &inst.y, c) != CutClass::NotACut
        });
        if cut.is_some() == brute.is_some() && valid {
            agree += 1;
        }
        yes += usize::from(cut.is_some());
    }
    Ok(format!(
        "{count} instances, {yes} yes, {agree} agree with brute force\n"
    ))
}

fn main() -> mbcut::Result<()> {
    print!("{}", run(200)?);
    Ok(())
}
