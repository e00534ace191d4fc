#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

use mbcut::generate::{gen_random_cut, rng, RandomParams};
use mbcut::CutInstance;
use rand::RngExt;
use serde_json::Value;

pub fn manifest_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

/// Runs the `mbcut` binary from the crate directory.
pub fn run_cli(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_mbcut"))
        .args(args)
        .current_dir(manifest_dir())
        .output()
        .expect("mbcut binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

/// JSON report with timing fields removed, pretty-printed.
pub fn normalize(report: &str) -> String {
    let mut v: Value = serde_json::from_str(report).expect("report is JSON");
    if let Some(stats) = v.get_mut("stats").and_then(Value::as_object_mut) {
        stats.remove("ms");
    }
    serde_json::to_string_pretty(&v).unwrap() + "\n"
}

/// Commands whose normalized JSON reports are pinned in `fixtures/golden`.
pub const GOLDEN_CASES: &[(&str, &[&str])] = &[
    ("solve_parallel2", &["solve", "fixtures/parallel2.mbc", "--json"]),
    ("solve_colorless", &["solve", "fixtures/colorless.mbc", "--json"]),
    (
        "important_factorial_k3",
        &["important", "fixtures/factorial_k3.mbc", "--filter", "exact", "--json"],
    ),
    (
        "flow_parallel2",
        &["flow", "fixtures/parallel2.mbc", "--z", "all", "--k", "3", "--json"],
    ),
    (
        "bowtie2",
        &[
            "analyze",
            "bowtie",
            "fixtures/two_paths.wcut",
            "--family",
            "fixtures/bowtie2.family",
            "--size",
            "2",
            "--json",
        ],
    ),
    (
        "flower3",
        &[
            "analyze",
            "flower",
            "fixtures/three_paths.wcut",
            "--family",
            "fixtures/flower3.family",
            "--size",
            "3",
            "--json",
        ],
    ),
    (
        "oracle_families_two_paths",
        &["oracle", "families", "fixtures/two_paths.wcut", "--json"],
    ),
];

pub fn golden_path(name: &str) -> PathBuf {
    manifest_dir().join("fixtures/golden").join(format!("{name}.json"))
}

/// Small random cut instance: |V| ≤ 8, ≤ 12 edges, ℓ ≤ 3, Σk ≤ 4, every k_i ≥ 1.
pub fn small_cut(seed: u64) -> CutInstance {
    let mut r = rng(seed ^ 0x9e37_79b9_7f4a_7c15);
    let n = r.random_range(4..=8usize);
    let m = r.random_range(6..=12usize);
    let colors = r.random_range(1..=3usize);
    let mut budgets = vec![1i64; colors];
    for _ in 0..r.random_range(0..=4 - colors) {
        let i = r.random_range(0..colors);
        budgets[i] += 1;
    }
    let params = RandomParams {
        n,
        m,
        num_colors: colors,
        budgets,
        color_density: r.random_range(0.5..0.9),
        simple: r.random_bool(0.7),
    };
    gen_random_cut(seed, &params).expect("valid parameters")
}
