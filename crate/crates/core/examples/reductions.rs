//! Reduction gadgets: bipartite vertex cover to a two-color cut, and
//! two-color cut to weighted st-cut and back.

use mbcut::oracle::{brute_constrained_bipartite_vc, brute_solve_weighted, SizeGuard};
use mbcut::reductions::{
    cover_from_cut, mbcut2_to_weighted, vc_to_mbcut, weighted_parameters, weighted_to_mbcut2, Bipartite,
};
use mbcut::solve_mbcut;

pub fn run() -> mbcut::Result<String> {
    let guard = SizeGuard::default();
    let mut out = String::new();

    // path u1 – l1 – u2 – l2: a cover needs one vertex on each side
    let bip = Bipartite::new(2, 2, vec![(0, 0), (1, 0), (1, 1)])?;
    for (ku, kl) in [(1, 1), (2, 1), (1, 2)] {
        let (inst, _) = vc_to_mbcut(&bip, ku, kl)?;
        let (cut, _) = solve_mbcut(&inst)?;
        let brute = brute_constrained_bipartite_vc(bip.u, bip.l, &bip.edges, ku as usize, kl as usize, &guard)?;
        let cover = cut.as_ref().map(|c| cover_from_cut(&bip, c));
        out += &format!(
            "vc k_U={ku} k_L={kl}: cover {cover:?}, brute force agrees: {}\n",
            cover.is_some() == brute.is_some()
        );
    }

    let (heavy, k, w) = weighted_parameters(1, 1);
    out += &format!("weighted parameters for (1,1): heavy {heavy}, k {k}, w {w}\n");
    let (inst, _) = vc_to_mbcut(&bip, 1, 1)?;
    let (weighted, map) = mbcut2_to_weighted(&inst)?;
    let wsol = brute_solve_weighted(&weighted, &guard)?;
    out += &format!(
        "to weighted: {} edges, {} map entries, solvable {}\n",
        weighted.graph.num_edges(),
        map.forward().len(),
        wsol.is_some()
    );
    let (back, _) = weighted_to_mbcut2(&weighted, 10_000)?;
    let (cut, _) = solve_mbcut(&back)?;
    out += &format!(
        "back to two colors: {} edges, solvable {}\n",
        back.graph.num_edges(),
        cut.is_some()
    );
    Ok(out)
}

fn main() -> mbcut::Result<()> {
    print!("{}", run()?);
    Ok(())
}
