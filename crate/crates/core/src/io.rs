//! Graph wire formats: `{"n": .., "edges": [[u, v], ..]}` JSON and DIMACS
//! `.col` (1-based on the wire).

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = j.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::new(j.n, &edges)
    }
}

pub fn to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("graph json")
}

pub fn from_json(text: &str) -> Result<Graph> {
    let j: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    Graph::try_from(j)
}

pub fn to_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.n(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn from_dimacs(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let mut parts = line.split_whitespace();
        let bad = |what: &str| Error::Parse(format!("line {}: {what}", lineno + 1));
        match parts.next() {
            None | Some("c") => {}
            Some("p") => {
                let _format = parts.next().ok_or_else(|| bad("missing format"))?;
                let count = parts
                    .next()
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| bad("bad vertex count"))?;
                n = Some(count);
            }
            Some("e") => {
                let mut end = || {
                    parts
                        .next()
                        .and_then(|s| s.parse::<usize>().ok())
                        .filter(|&x| x >= 1)
                        .ok_or_else(|| bad("bad edge endpoint"))
                };
                let (u, v) = (end()?, end()?);
                edges.push((u - 1, v - 1));
            }
            Some(other) => return Err(bad(&format!("unexpected record '{other}'"))),
        }
    }
    let n = n.ok_or_else(|| Error::Parse("missing 'p edge' header".into()))?;
    Graph::new(n, &edges)
}

/// Parses either format, choosing DIMACS when the text starts with a `c` or
/// `p` record.
pub fn parse_any(text: &str) -> Result<Graph> {
    let first = text.trim_start().chars().next();
    match first {
        Some('{') => from_json(text),
        _ => from_dimacs(text),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimacs_is_one_based_on_the_wire() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let text = to_dimacs(&g);
        assert_eq!(text, "p edge 3 2\ne 1 2\ne 2 3\n");
        assert_eq!(from_dimacs(&text).unwrap(), g);
    }

    #[test]
    fn dimacs_comments_and_errors() {
        let g = from_dimacs("c hello\np edge 2 1\ne 1 2\n").unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(from_dimacs("e 1 2\n").is_err());
        assert!(from_dimacs("p edge 2 1\ne 0 1\n").is_err());
        assert!(from_dimacs("p edge 2 1\ne 1 3\n").is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = Graph::new(4, &[(0, 3), (1, 2)]).unwrap();
        let text = to_json(&g);
        assert_eq!(text, r#"{"n":4,"edges":[[0,3],[1,2]]}"#);
        assert_eq!(parse_any(&text).unwrap(), g);
        assert!(from_json(r#"{"n":2,"edges":[[0,0]]}"#).is_err());
    }
}
