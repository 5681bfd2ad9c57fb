//! Broadcast assignments and their coverage.
//!
//! A broadcast vertex `v` of strength `s` covers every vertex within `s`
//! hops of `v`, itself included. Vertices not in the assignment have
//! strength 0 and cover nothing, not even themselves.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::bfs_layers;

/// Map from 0-based vertex to a positive strength.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BroadcastAssignment {
    strengths: BTreeMap<usize, u32>,
}

impl BroadcastAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds an assignment from 0-based `(vertex, strength)` pairs.
    ///
    /// Zero strengths are rejected, as are repeated vertices.
    pub fn from_pairs<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, u32)>,
    {
        let mut f = Self::new();
        for (v, s) in pairs {
            if f.strengths.contains_key(&v) {
                return Err(Error::DuplicateVertex { label: v + 1 });
            }
            f.insert(v, s)?;
        }
        Ok(f)
    }

    /// Same as [`from_pairs`](Self::from_pairs) but with 1-based labels.
    ///
    /// ```
    /// use broadcast_domination::BroadcastAssignment;
    ///
    /// let f = BroadcastAssignment::from_labels([(3, 1), (6, 1)]).unwrap();
    /// assert_eq!(f.strength(2), 1);
    /// assert_eq!(f.cost(), 2);
    /// assert_eq!(f.to_string(), "{3:1, 6:1}");
    /// ```
    pub fn from_labels<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, u32)>,
    {
        let mut zero_based = Vec::new();
        for (label, s) in pairs {
            if label == 0 {
                return Err(Error::InvalidLabel { label });
            }
            zero_based.push((label - 1, s));
        }
        Self::from_pairs(zero_based)
    }

    /// Sets the strength of `v`, replacing any previous value.
    pub fn insert(&mut self, v: usize, strength: u32) -> Result<()> {
        if strength == 0 {
            return Err(Error::InvalidStrength {
                label: v + 1,
                strength: 0,
            });
        }
        self.strengths.insert(v, strength);
        Ok(())
    }

    /// Strength of `v`; 0 when `v` is not a broadcast vertex.
    pub fn strength(&self, v: usize) -> u32 {
        self.strengths.get(&v).copied().unwrap_or(0)
    }

    /// `(vertex, strength)` pairs in ascending vertex order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.strengths.iter().map(|(&v, &s)| (v, s))
    }

    pub fn support_len(&self) -> usize {
        self.strengths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strengths.is_empty()
    }

    /// Sum of strengths.
    pub fn cost(&self) -> u64 {
        self.strengths.values().map(|&s| u64::from(s)).sum()
    }

    pub fn check_against(&self, g: &Graph) -> Result<()> {
        match self.strengths.keys().next_back() {
            Some(&v) => g.check_vertex(v),
            None => Ok(()),
        }
    }
}

impl fmt::Display for BroadcastAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (v, s)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}:{}", v + 1, s)?;
        }
        f.write_str("}")
    }
}

/// Total strength of an assignment.
pub fn cost(f: &BroadcastAssignment) -> u64 {
    f.cost()
}

/// How many broadcast vertices reach each vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverageReport {
    pub coverage_count: Vec<u32>,
    pub is_dominating: bool,
    pub is_efficient: bool,
    /// 0-based vertices with no covering broadcast vertex.
    pub uncovered: Vec<usize>,
}

impl CoverageReport {
    fn from_counts(coverage_count: Vec<u32>) -> Self {
        let uncovered: Vec<usize> = (0..coverage_count.len())
            .filter(|&u| coverage_count[u] == 0)
            .collect();
        CoverageReport {
            is_dominating: uncovered.is_empty(),
            is_efficient: coverage_count.iter().all(|&c| c == 1),
            coverage_count,
            uncovered,
        }
    }
}

/// Counts, per vertex, the broadcast vertices within range.
///
/// Each broadcast vertex runs a breadth-first search cut off at its own
/// strength, so the work is proportional to the covered region.
///
/// ```
/// use broadcast_domination::{broadcast::coverage, families::{generate, FamilySpec}, BroadcastAssignment};
///
/// let c6 = generate(&FamilySpec::Cycle { n: 6 }).unwrap();
/// let report = coverage(&c6, &BroadcastAssignment::from_labels([(1, 2)]).unwrap()).unwrap();
/// assert!(!report.is_dominating);
/// assert_eq!(report.uncovered, vec![3]); // label 4
/// ```
pub fn coverage(g: &Graph, f: &BroadcastAssignment) -> Result<CoverageReport> {
    f.check_against(g)?;
    let mut counts = vec![0u32; g.vertex_count()];
    for (v, s) in f.iter() {
        for (u, d) in bfs_layers(g, v, s).into_iter().enumerate() {
            if d.is_some() {
                counts[u] += 1;
            }
        }
    }
    Ok(CoverageReport::from_counts(counts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};

    fn c6() -> Graph {
        generate(&FamilySpec::Cycle { n: 6 }).unwrap()
    }

    #[test]
    fn efficient_pair_on_c6() {
        let f = BroadcastAssignment::from_labels([(3, 1), (6, 1)]).unwrap();
        let r = coverage(&c6(), &f).unwrap();
        assert_eq!(r.coverage_count, vec![1; 6]);
        assert!(r.is_dominating && r.is_efficient);
        assert_eq!(cost(&f), 2);
    }

    #[test]
    fn single_strength_two_misses_antipode() {
        let f = BroadcastAssignment::from_labels([(1, 2)]).unwrap();
        let r = coverage(&c6(), &f).unwrap();
        assert_eq!(r.coverage_count, vec![1, 1, 1, 0, 1, 1]);
        assert!(!r.is_dominating && !r.is_efficient);
    }

    #[test]
    fn empty_assignment_covers_nothing() {
        let r = coverage(&c6(), &BroadcastAssignment::new()).unwrap();
        assert_eq!(r.coverage_count, vec![0; 6]);
        assert_eq!(r.uncovered, (0..6).collect::<Vec<_>>());
        assert_eq!(cost(&BroadcastAssignment::new()), 0);
    }

    #[test]
    fn isolated_vertex_needs_strength_one() {
        let p1 = generate(&FamilySpec::Path { n: 1 }).unwrap();
        assert!(
            !coverage(&p1, &BroadcastAssignment::new())
                .unwrap()
                .is_dominating
        );
        let f = BroadcastAssignment::from_labels([(1, 1)]).unwrap();
        assert!(coverage(&p1, &f).unwrap().is_efficient);
    }

    #[test]
    fn overlap_is_counted() {
        let f = BroadcastAssignment::from_labels([(1, 1), (2, 1)]).unwrap();
        let r = coverage(&c6(), &f).unwrap();
        assert_eq!(r.coverage_count, vec![2, 2, 1, 0, 0, 1]);
    }

    #[test]
    fn cost_arithmetic() {
        let f = BroadcastAssignment::from_labels([(2, 2), (7, 1)]).unwrap();
        assert_eq!(f.cost(), 3);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            BroadcastAssignment::from_labels([(1, 0)]),
            Err(Error::InvalidStrength { label: 1, .. })
        ));
        assert!(BroadcastAssignment::from_labels([(0, 1)]).is_err());
        assert!(BroadcastAssignment::from_labels([(2, 1), (2, 3)]).is_err());
        let f = BroadcastAssignment::from_labels([(7, 1)]).unwrap();
        assert!(matches!(
            coverage(&c6(), &f),
            Err(Error::InvalidVertex {
                label: 7,
                vertex_count: 6
            })
        ));
    }
}
