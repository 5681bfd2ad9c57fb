//! Exact broadcast domination number by iterative deepening on cost.
//!
//! For `c = 1, 2, …` every assignment of total cost exactly `c` is
//! enumerated, grouped by support size `k = 1..=c`, and inside a group in
//! lexicographic order of the sorted `(vertex, strength)` sequence. The
//! first dominating assignment met is therefore the canonical minimizer:
//! least cost, then least support, then lexicographically least.
//!
//! A strength above the broadcast vertex's eccentricity covers nothing
//! extra, so strengths are capped at `min(c, e(v))`. The radius is an
//! upper bound on the answer (one central vertex at strength `rad(G)`
//! covers everything), which is the default search budget.
//!
//! Domination is checked on bitsets of precomputed balls, independently of
//! [`crate::broadcast::coverage`], which the tests use to re-validate
//! witnesses.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::broadcast::BroadcastAssignment;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::distance_matrix;

/// Upper limit on the total cost explored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CostBound {
    /// The graph radius.
    #[default]
    Auto,
    Explicit(u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOptions {
    pub max_cost: CostBound,
    /// Only accept broadcasts covering every vertex exactly once.
    pub require_efficient: bool,
    /// Worker threads used within a cost level. The result does not
    /// depend on it.
    pub parallelism: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            max_cost: CostBound::Auto,
            require_efficient: false,
            parallelism: 1,
        }
    }
}

impl SolveOptions {
    pub fn efficient() -> Self {
        SolveOptions {
            require_efficient: true,
            ..Self::default()
        }
    }

    pub fn with_parallelism(mut self, threads: usize) -> Self {
        self.parallelism = threads;
        self
    }

    pub fn with_max_cost(mut self, bound: CostBound) -> Self {
        self.max_cost = bound;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub gamma_b: u32,
    pub witness: BroadcastAssignment,
    /// Complete assignments tested for domination. Deterministic: work
    /// done speculatively by parallel workers past the winning candidate
    /// is not counted.
    pub candidates_checked: u64,
    pub elapsed: Duration,
}

/// Computes `γ_b(g)` and the canonical minimum-cost witness.
///
/// ```
/// use broadcast_domination::families::{generate, FamilySpec};
/// use broadcast_domination::solver::{solve_exact, SolveOptions};
///
/// let c6 = generate(&FamilySpec::Cycle { n: 6 }).unwrap();
/// let result = solve_exact(&c6, &SolveOptions::default()).unwrap();
/// assert_eq!(result.gamma_b, 2);
/// // A lone vertex at strength 2 misses its antipode, so the canonical
/// // witness is the least dominating pair.
/// assert_eq!(result.witness.to_string(), "{1:1, 4:1}");
/// ```
pub fn solve_exact(g: &Graph, opts: &SolveOptions) -> Result<SolveResult> {
    let start = Instant::now();
    g.require_connected()?;
    let space = SearchSpace::new(g, opts.require_efficient)?;
    let bound = match opts.max_cost {
        CostBound::Auto => space.radius,
        CostBound::Explicit(0) => {
            return Err(Error::InvalidRange(
                "max_cost must be at least 1".to_string(),
            ))
        }
        CostBound::Explicit(b) => b,
    };

    let pool = if opts.parallelism > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(opts.parallelism)
                .build()
                .map_err(|e| Error::InvalidRange(format!("cannot start worker threads: {e}")))?,
        )
    } else {
        None
    };

    let mut checked = 0u64;
    for cost in 1..=bound {
        for support in 1..=cost.min(space.n as u32) as usize {
            let (hit, count) = space.search_level(cost, support, pool.as_ref());
            checked += count;
            if let Some(pairs) = hit {
                let witness = BroadcastAssignment::from_pairs(pairs)
                    .expect("solver emits distinct vertices with positive strength");
                return Ok(SolveResult {
                    gamma_b: cost,
                    witness,
                    candidates_checked: checked,
                    elapsed: start.elapsed(),
                });
            }
        }
    }
    Err(Error::BudgetExhausted { bound })
}

/// [`solve_exact`] restricted to efficient broadcasts.
pub fn solve_exact_efficient(g: &Graph) -> Result<SolveResult> {
    solve_exact(g, &SolveOptions::efficient())
}

struct SearchSpace {
    n: usize,
    radius: u32,
    ecc: Vec<u32>,
    /// `balls[v][r]`: vertices within `r` hops of `v`, `r <= ecc[v]`.
    balls: Vec<Vec<FixedBitSet>>,
    efficient: bool,
}

type Pairs = Vec<(usize, u32)>;

/// Outcome of one subtree: the first dominating leaf (if any) and the
/// number of leaves tested up to and including it.
struct TaskOutcome {
    hit: Option<Pairs>,
    count: u64,
}

struct Dfs<'a> {
    space: &'a SearchSpace,
    chosen: Pairs,
    count: u64,
    task: usize,
    best: &'a AtomicUsize,
}

impl SearchSpace {
    fn new(g: &Graph, efficient: bool) -> Result<Self> {
        let dist = distance_matrix(g)?;
        let n = g.vertex_count();
        let ecc: Vec<u32> = dist
            .iter()
            .map(|row| row.iter().copied().max().unwrap_or(0))
            .collect();
        let radius = ecc.iter().copied().min().unwrap_or(0);
        let balls = (0..n)
            .map(|v| {
                (0..=ecc[v])
                    .map(|r| {
                        let mut ball = FixedBitSet::with_capacity(n);
                        ball.extend((0..n).filter(|&u| dist[v][u] <= r));
                        ball
                    })
                    .collect()
            })
            .collect();
        Ok(SearchSpace {
            n,
            // P_1 has radius 0 but still needs strength 1.
            radius: radius.max(1),
            ecc,
            balls,
            efficient,
        })
    }

    fn ball(&self, v: usize, strength: u32) -> &FixedBitSet {
        let r = strength.min(self.ecc[v]) as usize;
        &self.balls[v][r]
    }

    fn max_strength(&self, v: usize, budget: u32) -> u32 {
        // Strength 0 would be "not a broadcast vertex"; a vertex of
        // eccentricity 0 (P_1) still takes strength 1.
        budget.min(self.ecc[v].max(1))
    }

    /// First-level branches `(vertex, strength)` for cost `cost` and
    /// support size `support`, in lexicographic order.
    fn first_moves(&self, cost: u32, support: usize) -> Vec<(usize, u32)> {
        let slack = support as u32 - 1;
        (0..self.n.saturating_sub(support - 1))
            .flat_map(|v| {
                let hi = if support == 1 {
                    if cost <= self.ecc[v].max(1) {
                        cost
                    } else {
                        0
                    }
                } else {
                    self.max_strength(v, cost - slack)
                };
                let lo = if support == 1 { cost } else { 1 };
                (lo..=hi).map(move |s| (v, s))
            })
            .collect()
    }

    fn search_level(
        &self,
        cost: u32,
        support: usize,
        pool: Option<&rayon::ThreadPool>,
    ) -> (Option<Pairs>, u64) {
        let moves = self.first_moves(cost, support);
        let best = AtomicUsize::new(usize::MAX);
        let run = |(i, &(v, s)): (usize, &(usize, u32))| -> TaskOutcome {
            if i > best.load(Ordering::Relaxed) {
                return TaskOutcome {
                    hit: None,
                    count: 0,
                };
            }
            let mut dfs = Dfs {
                space: self,
                chosen: vec![(v, s)],
                count: 0,
                task: i,
                best: &best,
            };
            let covered = self.ball(v, s).clone();
            let found = dfs.descend(covered, v, support - 1, cost - s);
            if found {
                best.fetch_min(i, Ordering::Relaxed);
            }
            TaskOutcome {
                hit: found.then_some(dfs.chosen),
                count: dfs.count,
            }
        };

        let mut total = 0u64;
        match pool {
            None => {
                for item in moves.iter().enumerate() {
                    let outcome = run(item);
                    total += outcome.count;
                    if outcome.hit.is_some() {
                        return (outcome.hit, total);
                    }
                }
                (None, total)
            }
            Some(pool) => {
                let outcomes: Vec<TaskOutcome> =
                    pool.install(|| moves.par_iter().enumerate().map(run).collect());
                for outcome in outcomes {
                    total += outcome.count;
                    if outcome.hit.is_some() {
                        return (outcome.hit, total);
                    }
                }
                (None, total)
            }
        }
    }
}

impl Dfs<'_> {
    /// Extends `self.chosen` with `slots` more broadcast vertices above
    /// `last` spending exactly `budget`. Leaves `chosen` holding the hit
    /// when it returns true.
    fn descend(&mut self, covered: FixedBitSet, last: usize, slots: usize, budget: u32) -> bool {
        let space = self.space;
        if slots == 0 {
            self.count += 1;
            return covered.count_ones(..) == space.n;
        }
        // A task ahead of us in lexicographic order already succeeded.
        if self.best.load(Ordering::Relaxed) < self.task {
            return false;
        }
        if space.n - last - 1 < slots {
            return false;
        }

        // Every uncovered vertex must be reachable by some later vertex at
        // the largest strength it could still receive.
        let top = budget - (slots as u32 - 1);
        let mut uncovered = covered.clone();
        uncovered.toggle_range(..);
        if uncovered.count_ones(..) > 0 {
            let mut reach = FixedBitSet::with_capacity(space.n);
            for w in last + 1..space.n {
                reach.union_with(space.ball(w, top));
            }
            if !uncovered.is_subset(&reach) {
                return false;
            }
        }

        for w in last + 1..space.n {
            let (lo, hi) = if slots == 1 {
                if budget > space.ecc[w].max(1) {
                    continue;
                }
                (budget, budget)
            } else {
                (1, space.max_strength(w, top))
            };
            for s in lo..=hi {
                let ball = space.ball(w, s);
                if space.efficient && !covered.is_disjoint(ball) {
                    // Larger balls overlap too.
                    break;
                }
                let mut next = covered.clone();
                next.union_with(ball);
                self.chosen.push((w, s));
                if self.descend(next, w, slots - 1, budget - s) {
                    return true;
                }
                self.chosen.pop();
            }
        }
        false
    }
}
