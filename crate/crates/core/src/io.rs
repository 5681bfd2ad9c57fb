//! On-disk formats: graph documents (`.graph.json`), broadcast documents
//! (`.bcast.json`) and Graphviz DOT export.
//!
//! All documents use 1-based vertex labels. JSON output is canonical:
//! object keys sorted, edges sorted, one edge per line, trailing newline.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::broadcast::{coverage, BroadcastAssignment};
use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::graph::{Graph, Role};

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDocument {
    version: String,
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    roles: Option<BTreeMap<String, Role>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    family: Option<FamilySpec>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BroadcastDocument {
    version: String,
    assignments: BTreeMap<String, u64>,
    cost: u64,
}

fn check_version(version: &str) -> Result<()> {
    if version == FORMAT_VERSION {
        Ok(())
    } else {
        Err(Error::UnsupportedVersion(version.to_string()))
    }
}

fn parse_label(key: &str) -> Result<usize> {
    match key.parse::<usize>() {
        Ok(label) if label >= 1 => Ok(label),
        Ok(label) => Err(Error::InvalidLabel { label }),
        Err(_) => Err(Error::Parse {
            line: 0,
            column: 0,
            message: format!("vertex label {key:?} is not a positive integer"),
        }),
    }
}

/// Parses a graph document.
///
/// ```
/// use broadcast_domination::io::read_graph;
///
/// let g = read_graph(r#"{"version": "1", "n": 3, "edges": [[1, 2], [1, 3], [2, 3]]}"#).unwrap();
/// assert_eq!((g.vertex_count(), g.edge_count()), (3, 3));
/// ```
pub fn read_graph(text: &str) -> Result<Graph> {
    let doc: GraphDocument = serde_json::from_str(text)?;
    check_version(&doc.version)?;
    let n = doc.n;
    if n == 0 {
        return Err(Error::InvalidRange(
            "a graph needs at least one vertex".to_string(),
        ));
    }
    let mut edges = Vec::with_capacity(doc.edges.len());
    for [u, v] in doc.edges {
        if u == 0 || v == 0 || u > n || v > n {
            return Err(Error::InvalidEdge {
                u,
                v,
                reason: format!("endpoint out of range 1..={n}"),
            });
        }
        edges.push((u.min(v) - 1, u.max(v) - 1));
    }
    let mut g = Graph::from_edges(n, edges)?;
    if let Some(map) = doc.roles {
        let mut roles = vec![Role::Plain; n];
        for (key, role) in map {
            let label = parse_label(&key)?;
            if label > n {
                return Err(Error::InvalidVertex {
                    label,
                    vertex_count: n,
                });
            }
            roles[label - 1] = role;
        }
        g = g.with_roles(roles)?;
    }
    if let Some(family) = doc.family {
        family.validate()?;
        g = g.with_family(family);
    }
    Ok(g)
}

/// Renders a graph document in canonical form.
pub fn write_graph(g: &Graph) -> String {
    let doc = GraphDocument {
        version: FORMAT_VERSION.to_string(),
        n: g.vertex_count(),
        edges: g.edges().map(|(u, v)| [u + 1, v + 1]).collect(),
        roles: g.roles().map(|roles| {
            roles
                .iter()
                .enumerate()
                .map(|(v, &r)| ((v + 1).to_string(), r))
                .collect()
        }),
        family: g.family().cloned(),
    };
    render_canonical(&serde_json::to_value(doc).expect("graph documents serialize"))
}

/// Parses a broadcast document, checking the declared cost.
pub fn read_broadcast(text: &str) -> Result<BroadcastAssignment> {
    let doc: BroadcastDocument = serde_json::from_str(text)?;
    check_version(&doc.version)?;
    let mut pairs = Vec::with_capacity(doc.assignments.len());
    for (key, strength) in &doc.assignments {
        let label = parse_label(key)?;
        let s =
            u32::try_from(*strength)
                .ok()
                .filter(|&s| s >= 1)
                .ok_or(Error::InvalidStrength {
                    label,
                    strength: *strength,
                })?;
        pairs.push((label, s));
    }
    let f = BroadcastAssignment::from_labels(pairs)?;
    if f.cost() != doc.cost {
        return Err(Error::CostMismatch {
            declared: doc.cost,
            actual: f.cost(),
        });
    }
    Ok(f)
}

/// Renders a broadcast document in canonical form.
///
/// ```
/// use broadcast_domination::{io::write_broadcast, BroadcastAssignment};
///
/// let f = BroadcastAssignment::from_labels([(3, 2), (7, 1)]).unwrap();
/// assert_eq!(
///     write_broadcast(&f),
///     "{\n  \"assignments\": {\"3\":2,\"7\":1},\n  \"cost\": 3,\n  \"version\": \"1\"\n}\n"
/// );
/// ```
pub fn write_broadcast(f: &BroadcastAssignment) -> String {
    let doc = BroadcastDocument {
        version: FORMAT_VERSION.to_string(),
        assignments: f
            .iter()
            .map(|(v, s)| ((v + 1).to_string(), u64::from(s)))
            .collect(),
        cost: f.cost(),
    };
    render_canonical(&serde_json::to_value(doc).expect("broadcast documents serialize"))
}

/// Top-level keys on their own lines; arrays of arrays one element per
/// line; everything else compact. Keys come out sorted because
/// `serde_json::Map` is ordered.
pub fn render_canonical(value: &Value) -> String {
    let Value::Object(map) = value else {
        return format!("{value}\n");
    };
    let mut out = String::from("{\n");
    let last = map.len().saturating_sub(1);
    for (i, (key, v)) in map.iter().enumerate() {
        let _ = write!(out, "  {}: ", Value::String(key.clone()));
        match v {
            Value::Array(items) if !items.is_empty() && items.iter().all(Value::is_array) => {
                out.push_str("[\n");
                for (j, item) in items.iter().enumerate() {
                    let sep = if j + 1 < items.len() { "," } else { "" };
                    let _ = writeln!(out, "    {item}{sep}");
                }
                out.push_str("  ]");
            }
            other => {
                let _ = write!(out, "{other}");
            }
        }
        out.push_str(if i < last { ",\n" } else { "\n" });
    }
    out.push_str("}\n");
    out
}

/// Presentation switches for [`export_dot`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DotOptions {
    /// Outline every covered vertex as well.
    pub mark_covered: bool,
}

const BROADCAST_FILL: &str = "#6fa8dc";
const COVERED_OUTLINE: &str = "#1c4587";

/// Undirected DOT rendering. Broadcast vertices are filled and carry their
/// strength as an external label.
///
/// ```
/// use broadcast_domination::io::{export_dot, DotOptions};
/// use broadcast_domination::families::{generate, FamilySpec};
/// use broadcast_domination::BroadcastAssignment;
///
/// let c6 = generate(&FamilySpec::Cycle { n: 6 }).unwrap();
/// let f = BroadcastAssignment::from_labels([(3, 1), (6, 1)]).unwrap();
/// let dot = export_dot(&c6, Some(&f), DotOptions::default()).unwrap();
/// assert!(dot.contains(r##"3 [style=filled, fillcolor="#6fa8dc", xlabel="1"];"##));
/// ```
pub fn export_dot(g: &Graph, f: Option<&BroadcastAssignment>, opts: DotOptions) -> Result<String> {
    let covered = match f {
        Some(f) if opts.mark_covered => Some(coverage(g, f)?.coverage_count),
        Some(f) => {
            f.check_against(g)?;
            None
        }
        None => None,
    };
    let name = g
        .family()
        .map_or_else(|| "G".to_string(), ToString::to_string);
    let mut out = String::new();
    let _ = writeln!(out, "graph {} {{", Value::String(name));
    out.push_str("  node [shape=circle];\n");
    for v in 0..g.vertex_count() {
        let mut attrs = Vec::new();
        let strength = f.map_or(0, |f| f.strength(v));
        if strength > 0 {
            attrs.push(format!(
                "style=filled, fillcolor=\"{BROADCAST_FILL}\", xlabel=\"{strength}\""
            ));
        }
        if covered.as_ref().is_some_and(|c| c[v] > 0) {
            attrs.push(format!("color=\"{COVERED_OUTLINE}\", penwidth=2"));
        }
        if attrs.is_empty() {
            let _ = writeln!(out, "  {};", v + 1);
        } else {
            let _ = writeln!(out, "  {} [{}];", v + 1, attrs.join(", "));
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {} -- {};", u + 1, v + 1);
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::generate;

    #[test]
    fn triangle() {
        let g = read_graph(r#"{"version":"1","n":3,"edges":[[1,2],[1,3],[2,3]]}"#).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(
            write_graph(&g),
            "{\n  \"edges\": [\n    [1,2],\n    [1,3],\n    [2,3]\n  ],\n  \"n\": 3,\n  \"version\": \"1\"\n}\n"
        );
    }

    #[test]
    fn sunlet_document() {
        let g = generate(&FamilySpec::Sunlet { n: 8 }).unwrap();
        let text = write_graph(&g);
        assert!(text.contains(r#""family": {"kind":"sunlet","n":8}"#));
        let back = read_graph(&text).unwrap();
        assert_eq!((back.vertex_count(), back.edge_count()), (16, 16));
        assert_eq!(back, g);
    }

    #[test]
    fn bad_edges() {
        let err = read_graph(r#"{"version":"1","n":3,"edges":[[1,9]]}"#).unwrap_err();
        assert!(matches!(err, Error::InvalidEdge { u: 1, v: 9, .. }));
        let err = read_graph(r#"{"version":"1","n":3,"edges":[[1,2],[2,1]]}"#).unwrap_err();
        assert!(matches!(err, Error::InvalidEdge { .. }));
        let err = read_graph(r#"{"version":"1","n":3,"edges":[[2,2]]}"#).unwrap_err();
        assert!(matches!(err, Error::InvalidEdge { .. }));
    }

    #[test]
    fn parse_errors_carry_position() {
        let err = read_graph("{\n  \"version\": \"1\",\n  \"n\": 3,\n  \"edges\": [[1,2],\n}")
            .unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            read_graph(r#"{"version":"2","n":1,"edges":[]}"#),
            Err(Error::UnsupportedVersion(_))
        ));
        assert!(matches!(
            read_graph(r#"{"version":"1","n":1,"edges":[],"extra":1}"#),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn roles_default_to_plain() {
        let g =
            read_graph(r#"{"version":"1","n":2,"edges":[[1,2]],"roles":{"1":"base"}}"#).unwrap();
        assert_eq!(g.roles(), Some(&[Role::Base, Role::Plain][..]));
        assert!(
            read_graph(r#"{"version":"1","n":2,"edges":[[1,2]],"roles":{"3":"base"}}"#).is_err()
        );
    }

    #[test]
    fn broadcast_documents() {
        let f = read_broadcast(r#"{"version":"1","assignments":{"3":2,"7":1},"cost":3}"#).unwrap();
        assert_eq!(
            f,
            BroadcastAssignment::from_labels([(3, 2), (7, 1)]).unwrap()
        );
        assert_eq!(read_broadcast(&write_broadcast(&f)).unwrap(), f);

        assert_eq!(
            read_broadcast(r#"{"version":"1","assignments":{"3":2},"cost":3}"#),
            Err(Error::CostMismatch {
                declared: 3,
                actual: 2
            })
        );
        assert!(matches!(
            read_broadcast(r#"{"version":"1","assignments":{"3":0},"cost":0}"#),
            Err(Error::InvalidStrength { label: 3, .. })
        ));
        assert!(matches!(
            read_broadcast(r#"{"version":"1","assignments":{"0":1},"cost":1}"#),
            Err(Error::InvalidLabel { label: 0 })
        ));
    }

    #[test]
    fn dot_plain_and_highlighted() {
        let c6 = generate(&FamilySpec::Cycle { n: 6 }).unwrap();
        let plain = export_dot(&c6, None, DotOptions::default()).unwrap();
        assert!(!plain.contains("fillcolor"));
        assert!(plain.starts_with("graph \"C_6\" {\n"));
        assert_eq!(plain.matches(" -- ").count(), 6);

        let f = BroadcastAssignment::from_labels([(3, 1), (6, 1)]).unwrap();
        let dot = export_dot(&c6, Some(&f), DotOptions::default()).unwrap();
        assert_eq!(dot.matches("xlabel=\"1\"").count(), 2);

        let marked = export_dot(&c6, Some(&f), DotOptions { mark_covered: true }).unwrap();
        assert_eq!(marked.matches("penwidth=2").count(), 6);

        let s = generate(&FamilySpec::SunletDeg { m: 6, n: 3 }).unwrap();
        let f = BroadcastAssignment::from_labels([(1, 6)]).unwrap();
        let dot = export_dot(&s, Some(&f), DotOptions::default()).unwrap();
        assert_eq!(dot.matches("fillcolor").count(), 1);
        assert!(dot.contains("  1 [style=filled, fillcolor=\"#6fa8dc\", xlabel=\"6\"];"));

        let bad = BroadcastAssignment::from_labels([(9, 1)]).unwrap();
        assert!(export_dot(&c6, Some(&bad), DotOptions::default()).is_err());
    }
}
