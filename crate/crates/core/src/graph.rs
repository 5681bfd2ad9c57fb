//! Immutable simple undirected graphs.
//!
//! Vertices are `0..vertex_count` internally. Anything shown to a user
//! (documents, CLI output, error messages) uses the 1-based label `v + 1`.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::FamilySpec;

/// Structural role of a vertex in a sunlet-type graph.
///
/// A `Leaf` is the outermost vertex of a branch and is also a pendant
/// vertex; see [`Role::is_pendant`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Base,
    Pendant,
    Leaf,
    Plain,
}

impl Role {
    pub fn is_pendant(self) -> bool {
        matches!(self, Role::Pendant | Role::Leaf)
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Role::Base => "base",
            Role::Pendant => "pendant",
            Role::Leaf => "leaf",
            Role::Plain => "plain",
        };
        f.write_str(name)
    }
}

/// A connected-or-not simple undirected graph with sorted adjacency lists.
///
/// Construction validates the edge list: no self-loops, no duplicate edges,
/// every endpoint in range. Nothing mutates a `Graph` afterwards;
/// [`Graph::with_edge`] returns a new value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    roles: Option<Vec<Role>>,
    family: Option<FamilySpec>,
}

impl Graph {
    /// Builds a graph on `vertex_count` vertices from 0-based edges.
    ///
    /// ```
    /// use broadcast_domination::Graph;
    ///
    /// let triangle = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
    /// assert_eq!(triangle.edge_count(), 3);
    /// assert_eq!(triangle.neighbors(1), &[0, 2]);
    /// ```
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if vertex_count == 0 {
            return Err(Error::parameter("vertex_count", 0, ">= 1"));
        }
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidEdge {
                    u: u + 1,
                    v: v + 1,
                    reason: format!("endpoint out of range 1..={vertex_count}"),
                });
            }
            if u == v {
                return Err(Error::InvalidEdge {
                    u: u + 1,
                    v: v + 1,
                    reason: "self-loop".to_string(),
                });
            }
            if adjacency[u].contains(&v) {
                return Err(Error::InvalidEdge {
                    u: u + 1,
                    v: v + 1,
                    reason: "duplicate edge".to_string(),
                });
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            adjacency,
            roles: None,
            family: None,
        })
    }

    /// Attaches one role per vertex.
    pub fn with_roles(mut self, roles: Vec<Role>) -> Result<Self> {
        if roles.len() != self.vertex_count() {
            return Err(Error::InvalidRange(format!(
                "{} roles given for {} vertices",
                roles.len(),
                self.vertex_count()
            )));
        }
        self.roles = Some(roles);
        Ok(self)
    }

    /// Records the family this graph was generated from.
    pub fn with_family(mut self, family: FamilySpec) -> Self {
        self.family = Some(family);
        self
    }

    /// Returns a copy with the extra edge `{u, v}`.
    ///
    /// Roles are kept; the family echo is dropped since the result is no
    /// longer a member of that family.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut edges: Vec<(usize, usize)> = self.edges().collect();
        edges.push((u, v));
        let mut g = Graph::from_edges(self.vertex_count(), edges)?;
        g.roles = self.roles.clone();
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency
            .get(u)
            .is_some_and(|list| list.binary_search(&v).is_ok())
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Pairs `(u, v)`, `u < v`, that are not joined by an edge.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let n = self.vertex_count();
        (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.has_edge(u, v))
            .collect()
    }

    pub fn roles(&self) -> Option<&[Role]> {
        self.roles.as_deref()
    }

    /// Role of `v`, or `Role::Plain` when the graph carries no roles.
    pub fn role(&self, v: usize) -> Role {
        self.roles.as_ref().map_or(Role::Plain, |r| r[v])
    }

    pub fn family(&self) -> Option<&FamilySpec> {
        self.family.as_ref()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        degrees.sort_unstable();
        degrees
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                label: v + 1,
                vertex_count: self.vertex_count(),
            })
        }
    }

    /// First vertex (0-based) not reachable from vertex 0, if any.
    pub fn first_unreachable(&self) -> Option<usize> {
        let mut seen = vec![false; self.vertex_count()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.iter().position(|&s| !s)
    }

    pub fn is_connected(&self) -> bool {
        self.first_unreachable().is_none()
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        match self.first_unreachable() {
            None => Ok(()),
            Some(v) => Err(Error::UnreachableVertex {
                label: v + 1,
                from: 1,
            }),
        }
    }
}
