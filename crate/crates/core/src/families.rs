//! Generators for paths, cycles, sunlets and their branched variants.
//!
//! Canonical labeling: path and cycle vertices follow path/cycle order. In
//! every sunlet-type graph the base (cycle) vertices come first, in cycle
//! order, followed by each base vertex's branch listed from the base
//! outwards. Position `i` of a branch is therefore at distance `i + 1` from
//! its base vertex.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Role};

/// A member of one of the supported graph families.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum FamilySpec {
    /// `P_n`, `n >= 1`.
    Path { n: usize },
    /// `C_n`, `n >= 3`.
    Cycle { n: usize },
    /// `S_n`: `C_n` with one pendant vertex per cycle vertex.
    Sunlet { n: usize },
    /// `S_m^n`: `C_m` with a length-`n` branch on every cycle vertex.
    SunletDeg { m: usize, n: usize },
    /// `C_m` with branch `j` of length `lengths[j]`; zero means no branch.
    #[serde(rename = "gen-sunlet")]
    GeneralizedSunlet { m: usize, lengths: Vec<usize> },
}

/// The family of a [`FamilySpec`] without its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Path,
    Cycle,
    Sunlet,
    SunletDeg,
    GeneralizedSunlet,
}

impl FamilyKind {
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Sunlet => "sunlet",
            FamilyKind::SunletDeg => "sunlet-deg",
            FamilyKind::GeneralizedSunlet => "gen-sunlet",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "path" => Ok(FamilyKind::Path),
            "cycle" => Ok(FamilyKind::Cycle),
            "sunlet" => Ok(FamilyKind::Sunlet),
            "sunlet-deg" => Ok(FamilyKind::SunletDeg),
            "gen-sunlet" => Ok(FamilyKind::GeneralizedSunlet),
            other => Err(format!(
                "unknown family {other:?}; expected path, cycle, sunlet, sunlet-deg or gen-sunlet"
            )),
        }
    }
}

impl FamilySpec {
    pub fn kind(&self) -> FamilyKind {
        match self {
            FamilySpec::Path { .. } => FamilyKind::Path,
            FamilySpec::Cycle { .. } => FamilyKind::Cycle,
            FamilySpec::Sunlet { .. } => FamilyKind::Sunlet,
            FamilySpec::SunletDeg { .. } => FamilyKind::SunletDeg,
            FamilySpec::GeneralizedSunlet { .. } => FamilyKind::GeneralizedSunlet,
        }
    }

    /// Checks the parameter lower bounds.
    pub fn validate(&self) -> Result<()> {
        fn at_least(parameter: &'static str, value: usize, min: usize) -> Result<()> {
            if value < min {
                Err(Error::parameter(
                    parameter,
                    value as i64,
                    format!(">= {min}"),
                ))
            } else {
                Ok(())
            }
        }
        match self {
            FamilySpec::Path { n } => at_least("n", *n, 1),
            FamilySpec::Cycle { n } | FamilySpec::Sunlet { n } => at_least("n", *n, 3),
            FamilySpec::SunletDeg { m, n } => {
                at_least("m", *m, 3)?;
                at_least("n", *n, 1)
            }
            FamilySpec::GeneralizedSunlet { m, lengths } => {
                at_least("m", *m, 3)?;
                if lengths.len() != *m {
                    return Err(Error::parameter(
                        "lengths",
                        lengths.len() as i64,
                        format!("a list of exactly m = {m} branch lengths"),
                    ));
                }
                Ok(())
            }
        }
    }

    /// Number of vertices of the generated graph.
    pub fn vertex_count(&self) -> usize {
        match self {
            FamilySpec::Path { n } | FamilySpec::Cycle { n } => *n,
            FamilySpec::Sunlet { n } => 2 * n,
            FamilySpec::SunletDeg { m, n } => m * (n + 1),
            FamilySpec::GeneralizedSunlet { m, lengths } => m + lengths.iter().sum::<usize>(),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path { n } => write!(f, "P_{n}"),
            FamilySpec::Cycle { n } => write!(f, "C_{n}"),
            FamilySpec::Sunlet { n } => write!(f, "S_{n}"),
            FamilySpec::SunletDeg { m, n } => write!(f, "S_{m}^{n}"),
            FamilySpec::GeneralizedSunlet { m, lengths } => {
                let parts: Vec<String> = lengths.iter().map(usize::to_string).collect();
                write!(f, "S_{m}[{}]", parts.join(","))
            }
        }
    }
}

/// Builds the graph described by `spec` under the canonical labeling.
///
/// ```
/// use broadcast_domination::families::{generate, FamilySpec};
/// use broadcast_domination::Role;
///
/// let s8 = generate(&FamilySpec::Sunlet { n: 8 }).unwrap();
/// assert_eq!(s8.vertex_count(), 16);
/// assert_eq!(s8.role(0), Role::Base);
/// assert_eq!(s8.role(8), Role::Leaf);
/// ```
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let graph = match spec {
        FamilySpec::Path { n } => Graph::from_edges(*n, (1..*n).map(|v| (v - 1, v)))?,
        FamilySpec::Cycle { n } => Graph::from_edges(*n, cycle_edges(*n))?,
        FamilySpec::Sunlet { n } => branched_cycle(*n, &vec![1; *n])?,
        FamilySpec::SunletDeg { m, n } => branched_cycle(*m, &vec![*n; *m])?,
        FamilySpec::GeneralizedSunlet { m, lengths } => branched_cycle(*m, lengths)?,
    };
    Ok(graph.with_family(spec.clone()))
}

fn cycle_edges(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).map(move |v| (v, (v + 1) % n))
}

fn branched_cycle(m: usize, lengths: &[usize]) -> Result<Graph> {
    let total = m + lengths.iter().sum::<usize>();
    let mut edges: Vec<(usize, usize)> = cycle_edges(m).collect();
    let mut roles = vec![Role::Base; m];
    let mut next = m;
    for (base, &len) in lengths.iter().enumerate() {
        let mut prev = base;
        for i in 0..len {
            edges.push((prev, next));
            roles.push(if i + 1 == len {
                Role::Leaf
            } else {
                Role::Pendant
            });
            prev = next;
            next += 1;
        }
    }
    debug_assert_eq!(next, total);
    Graph::from_edges(total, edges)?.with_roles(roles)
}

/// 0-based index of the base vertex of `v` in a sunlet-type graph, along
/// with the distance from `v` to that base.
pub fn base_of(spec: &FamilySpec, v: usize) -> Option<(usize, usize)> {
    let (m, lengths) = match spec {
        FamilySpec::Sunlet { n } => (*n, vec![1; *n]),
        FamilySpec::SunletDeg { m, n } => (*m, vec![*n; *m]),
        FamilySpec::GeneralizedSunlet { m, lengths } => (*m, lengths.clone()),
        FamilySpec::Path { .. } | FamilySpec::Cycle { .. } => return None,
    };
    if v < m {
        return Some((v, 0));
    }
    let mut offset = m;
    for (base, len) in lengths.into_iter().enumerate() {
        if v < offset + len {
            return Some((base, v - offset + 1));
        }
        offset += len;
    }
    None
}
