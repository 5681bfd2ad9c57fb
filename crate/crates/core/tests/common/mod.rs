//! Test-only oracles. Nothing here calls into the solver or the BFS code
//! it is used to check.

#![allow(dead_code)]

use broadcast_domination::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const UNREACHABLE: u32 = u32::MAX / 4;

/// (cost, support size, pairs): ordered the way the canonical witness is.
type Ranked = (u32, usize, Vec<(usize, u32)>);

/// All-pairs hop distances by Floyd–Warshall.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.vertex_count();
    let mut d = vec![vec![UNREACHABLE; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for (u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

/// Canonical minimum-cost dominating broadcast by plain enumeration of
/// every strength vector with total at most `max_cost`.
///
/// Returns the cost and the `(vertex, strength)` pairs of the minimizer
/// under (cost, support size, lexicographic pairs).
pub fn brute_force(g: &Graph, max_cost: u32, efficient: bool) -> Option<(u32, Vec<(usize, u32)>)> {
    let n = g.vertex_count();
    let d = floyd_warshall(g);
    let mut strengths = vec![0u32; n];
    let mut best: Option<Ranked> = None;
    enumerate(&d, &mut strengths, 0, max_cost, efficient, &mut best);
    best.map(|(c, _, pairs)| (c, pairs))
}

fn enumerate(
    d: &[Vec<u32>],
    strengths: &mut Vec<u32>,
    pos: usize,
    budget: u32,
    efficient: bool,
    best: &mut Option<Ranked>,
) {
    let n = strengths.len();
    if pos == n {
        let counts: Vec<usize> = (0..n)
            .map(|u| {
                (0..n)
                    .filter(|&v| strengths[v] > 0 && d[u][v] <= strengths[v])
                    .count()
            })
            .collect();
        let ok = if efficient {
            counts.iter().all(|&c| c == 1)
        } else {
            counts.iter().all(|&c| c >= 1)
        };
        if ok {
            let pairs: Vec<(usize, u32)> = (0..n)
                .filter(|&v| strengths[v] > 0)
                .map(|v| (v, strengths[v]))
                .collect();
            let cost: u32 = strengths.iter().sum();
            let key = (cost, pairs.len(), pairs);
            if best.as_ref().is_none_or(|b| key < *b) {
                *best = Some(key);
            }
        }
        return;
    }
    for s in 0..=budget {
        strengths[pos] = s;
        enumerate(d, strengths, pos + 1, budget - s, efficient, best);
    }
    strengths[pos] = 0;
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

/// The seeded set used by the invariant tests: 20 graphs, 2 to 10 vertices.
pub fn seeded_graphs() -> Vec<Graph> {
    (0..20u64)
        .map(|seed| {
            let n = 2 + (seed as usize * 7) % 9;
            let extra = [0.0, 0.1, 0.25, 0.4][seed as usize % 4];
            random_connected(0xB0AD_CA57 + seed, n, extra)
        })
        .collect()
}
