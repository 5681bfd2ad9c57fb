#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use broadcast_domination::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn bdom() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bdom"))
}

pub fn run(args: &[&str]) -> Output {
    bdom().args(args).output().expect("bdom runs")
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// Writes the graph document for a family into `dir` and returns its path.
pub fn gen_file(dir: &Path, name: &str, family_args: &[&str]) -> PathBuf {
    let path = dir.join(name);
    let mut args = vec!["gen"];
    args.extend_from_slice(family_args);
    args.extend_from_slice(&["--out", path.to_str().unwrap()]);
    let out = run(&args);
    assert!(
        out.status.success(),
        "gen failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    path
}

/// Connected graph on `n` vertices: a random recursive tree plus each
/// remaining pair independently with probability `extra`.
pub fn random_connected(seed: u64, n: usize, extra: f64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(extra) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// 20 seeded connected graphs with 2 to 10 vertices.
pub fn seeded_graphs() -> Vec<Graph> {
    (0..20u64)
        .map(|seed| {
            let n = 2 + (seed as usize * 7) % 9;
            let extra = [0.0, 0.1, 0.25, 0.4][seed as usize % 4];
            random_connected(0xB0AD_CA57 + seed, n, extra)
        })
        .collect()
}
