//! Hop distances, eccentricity, radius, diameter and center.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Eccentricities of every vertex and the derived extremes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EccentricityProfile {
    pub per_vertex_eccentricity: Vec<u32>,
    pub radius: u32,
    pub diameter: u32,
    /// 0-based vertices whose eccentricity equals the radius, ascending.
    pub center_vertices: Vec<usize>,
}

/// Breadth-first hop distances from `source` to every vertex.
///
/// Fails with `UnreachableVertex` naming the lowest unreached vertex when
/// the graph is disconnected.
pub fn distances(g: &Graph, source: usize) -> Result<Vec<u32>> {
    g.check_vertex(source)?;
    let layers = bfs_layers(g, source, u32::MAX);
    match layers.iter().position(Option::is_none) {
        Some(v) => Err(Error::UnreachableVertex {
            label: v + 1,
            from: source + 1,
        }),
        None => Ok(layers.into_iter().map(|d| d.unwrap_or(u32::MAX)).collect()),
    }
}

/// Rows of hop distances, one per source vertex.
pub fn distance_matrix(g: &Graph) -> Result<Vec<Vec<u32>>> {
    (0..g.vertex_count()).map(|s| distances(g, s)).collect()
}

/// Computes the eccentricity profile of a connected graph.
///
/// ```
/// use broadcast_domination::{families::{generate, FamilySpec}, metrics};
///
/// let p9 = generate(&FamilySpec::Path { n: 9 }).unwrap();
/// let profile = metrics::metrics(&p9).unwrap();
/// assert_eq!((profile.radius, profile.diameter), (4, 8));
/// assert_eq!(profile.center_vertices, vec![4]); // label 5
/// ```
pub fn metrics(g: &Graph) -> Result<EccentricityProfile> {
    let ecc = distance_matrix(g)?
        .iter()
        .map(|row| row.iter().copied().max().unwrap_or(0))
        .collect::<Vec<_>>();
    Ok(profile_from_eccentricities(ecc))
}

pub(crate) fn profile_from_eccentricities(ecc: Vec<u32>) -> EccentricityProfile {
    let radius = ecc.iter().copied().min().unwrap_or(0);
    let diameter = ecc.iter().copied().max().unwrap_or(0);
    let center_vertices = (0..ecc.len()).filter(|&v| ecc[v] == radius).collect();
    EccentricityProfile {
        per_vertex_eccentricity: ecc,
        radius,
        diameter,
        center_vertices,
    }
}

/// BFS from `source` stopping after `depth` layers. `None` marks vertices
/// farther than `depth` (or unreachable).
pub(crate) fn bfs_layers(g: &Graph, source: usize, depth: u32) -> Vec<Option<u32>> {
    let mut dist = vec![None; g.vertex_count()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap_or(0);
        if du == depth {
            continue;
        }
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};

    fn cycle(n: usize) -> Graph {
        generate(&FamilySpec::Cycle { n }).unwrap()
    }

    #[test]
    fn antipodal_on_even_cycle() {
        let d = distances(&cycle(6), 0).unwrap();
        assert_eq!(d[3], 3);
        assert_eq!(d, vec![0, 1, 2, 3, 2, 1]);
    }

    #[test]
    fn path_endpoints() {
        let p5 = generate(&FamilySpec::Path { n: 5 }).unwrap();
        assert_eq!(distances(&p5, 0).unwrap()[4], 4);
    }

    #[test]
    fn base_to_opposite_leaf_in_s6_3() {
        // Base 1 sits opposite base 4; branch j occupies 6 + 3(j-1) .. 6 + 3j.
        let g = generate(&FamilySpec::SunletDeg { m: 6, n: 3 }).unwrap();
        let leaf_of_base_4 = 6 + 3 * 3 + 2;
        assert_eq!(distances(&g, 0).unwrap()[leaf_of_base_4], 6);
    }

    #[test]
    fn cycle_is_all_center() {
        let p = metrics(&cycle(6)).unwrap();
        assert_eq!((p.radius, p.diameter), (3, 3));
        assert_eq!(p.center_vertices, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn s6_3_center_is_the_base_cycle() {
        let g = generate(&FamilySpec::SunletDeg { m: 6, n: 3 }).unwrap();
        let p = metrics(&g).unwrap();
        assert_eq!(p.radius, 6);
        assert_eq!(p.center_vertices, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn errors() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(
            distances(&g, 0),
            Err(Error::UnreachableVertex { label: 3, from: 1 })
        );
        assert!(matches!(metrics(&g), Err(Error::UnreachableVertex { .. })));
        assert!(matches!(
            distances(&cycle(4), 4),
            Err(Error::InvalidVertex { label: 5, .. })
        ));
    }

    #[test]
    fn single_vertex() {
        let g = Graph::from_edges(1, []).unwrap();
        let p = metrics(&g).unwrap();
        assert_eq!((p.radius, p.diameter), (0, 0));
        assert_eq!(p.center_vertices, vec![0]);
    }
}
