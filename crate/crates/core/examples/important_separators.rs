//! The k-path family has exactly k! important budget-respecting cuts.

use mbcut::filter_important;
use mbcut::generate::gen_factorial_family;
use mbcut::important::enumerate_candidates;
use mbcut::oracle::SizeGuard;

pub fn run() -> mbcut::Result<String> {
    let mut out = String::new();
    for k in 1..=4 {
        let inst = gen_factorial_family(k)?;
        let z = inst.graph.colored_edges();
        let (candidates, stats) = enumerate_candidates(&inst, &z)?;
        let family = filter_important(&inst, &z, &candidates, &SizeGuard::default())?;
        out += &format!(
            "k={k}: {} candidates, {} important, {} recursion nodes\n",
            candidates.len(),
            family.len(),
            stats.nodes()
        );
    }
    let inst = gen_factorial_family(3)?;
    let z = inst.graph.colored_edges();
    let (family, _) = enumerate_candidates(&inst, &z)?;
    for c in family.cuts() {
        out += &format!("  {:?}\n", c.numbers());
    }
    Ok(out)
}

fn main() -> mbcut::Result<()> {
    print!("{}", run()?);
    Ok(())
}
