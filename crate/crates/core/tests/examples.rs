//! Every runnable example, executed and checked.

#[allow(dead_code)]
#[path = "../examples/feedback_arc_set.rs"]
mod feedback_arc_set;
#[allow(dead_code)]
#[path = "../examples/flow_certificate.rs"]
mod flow_certificate;
#[allow(dead_code)]
#[path = "../examples/important_separators.rs"]
mod important_separators;
#[allow(dead_code)]
#[path = "../examples/instance_format.rs"]
mod instance_format;
#[allow(dead_code)]
#[path = "../examples/large_layered.rs"]
mod large_layered;
#[allow(dead_code)]
#[path = "../examples/mazes.rs"]
mod mazes;
#[allow(dead_code)]
#[path = "../examples/oracle_check.rs"]
mod oracle_check;
#[allow(dead_code)]
#[path = "../examples/reductions.rs"]
mod reductions;
#[allow(dead_code)]
#[path = "../examples/skew_multicut.rs"]
mod skew_multicut;
#[allow(dead_code)]
#[path = "../examples/solve_cut.rs"]
mod solve_cut;

#[test]
fn solve_cut_agrees_with_brute_force() {
    let out = solve_cut::run().unwrap();
    assert!(out.starts_with("cut [1, 3, 6], usage [2, 1]"), "{out}");
    assert!(out.contains("brute force agrees: true"));
}

#[test]
fn important_separators_count_factorials() {
    let out = important_separators::run().unwrap();
    for (k, f) in [(1, 1), (2, 2), (3, 6), (4, 24)] {
        assert!(out.contains(&format!("k={k}: {f} candidates, {f} important")), "{out}");
    }
}

#[test]
fn flow_certificate_prefers_the_single_edge() {
    let out = flow_certificate::run().unwrap();
    assert_eq!(out, "lambda 1\nB [1]\nC [1]\nZ empty: no cut within k\n");
}

#[test]
fn skew_multicut_is_valid() {
    let out = skew_multicut::run().unwrap();
    assert!(out.contains("valid true") && out.contains("agrees: true"), "{out}");
}

#[test]
fn feedback_arc_set_budgets() {
    let out = feedback_arc_set::run().unwrap();
    assert_eq!(out.matches("acyclic after removal: true").count(), 3, "{out}");
    assert_eq!(out.matches("brute force agrees: true").count(), 3);
}

#[test]
fn reduction_gadgets() {
    let out = reductions::run().unwrap();
    assert_eq!(out.matches("brute force agrees: true").count(), 3, "{out}");
    assert!(out.contains("heavy 3, k 3, w 5"));
    assert!(out.contains("solvable true\nback to two colors"));
}

#[test]
fn oracle_check_all_agree() {
    assert!(oracle_check::run(60).unwrap().ends_with("60 agree with brute force\n"));
}

#[test]
fn maze_fixtures() {
    let out = mazes::run().unwrap();
    assert!(out.contains("2-bowtie: a [[5], [6]], b [[2], [1]]"), "{out}");
    assert!(out.contains("flower of 3 with zeta ⊤ on edges [3, 6, 9]"));
    assert!(out.contains("flower bound for k=3: 1024"));
}

#[test]
fn instance_format_round_trip() {
    let out = instance_format::run().unwrap();
    assert!(out.contains("round trip equal: true"));
    assert!(out.contains("rejected: line 4"), "{out}");
}

#[test]
fn layered_small() {
    let out = large_layered::run(20).unwrap();
    assert!(out.contains("answer=yes"), "{out}");
}
