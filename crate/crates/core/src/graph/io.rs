//! Text edge-list and JSON graph formats.
//!
//! Edge list: first non-comment line `n m`, then `m` lines `u v` (0-based).
//! Anything after `#` on a line is ignored.
//!
//! JSON: `{"n": 3, "edges": [[0,1],[1,2]], "labels": {"0": "a", ...}}` with
//! `labels` optional; unlabeled vertices fall back to their id.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("missing `n m` header".into()))?;
    let (n, m) = parse_pair(header)?;
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        edges.push(parse_pair(line)?);
    }
    if edges.len() != m {
        return Err(Error::Parse(format!("header announces {m} edges, found {}", edges.len())));
    }
    Graph::new(n, &edges)
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(|t| {
        t.parse::<usize>()
            .map_err(|_| Error::Parse(format!("expected an integer, got `{t}`")))
    });
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok((a?, b?)),
        _ => Err(Error::Parse(format!("expected two integers, got `{line}`"))),
    }
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<BTreeMap<usize, String>>,
}

pub fn to_json(g: &Graph) -> String {
    let doc = GraphJson {
        n: g.n(),
        edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
        labels: g
            .labels()
            .map(|l| l.iter().cloned().enumerate().collect()),
    };
    serde_json::to_string(&doc).expect("graph serializes")
}

pub fn parse_json(text: &str) -> Result<Graph> {
    let doc: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let edges: Vec<_> = doc.edges.iter().map(|&[u, v]| (u, v)).collect();
    let g = Graph::new(doc.n, &edges)?;
    match doc.labels {
        None => Ok(g),
        Some(map) => {
            if let Some(&bad) = map.keys().find(|&&k| k >= doc.n) {
                return Err(Error::Parse(format!("label for unknown vertex {bad}")));
            }
            let labels = (0..doc.n)
                .map(|v| map.get(&v).cloned().unwrap_or_else(|| v.to_string()))
                .collect();
            g.with_labels(labels)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_split, path};

    #[test]
    fn edge_list_with_comments() {
        let g = parse_edge_list("# a path\n3 2\n0 1 # first\n\n1 2\n").unwrap();
        assert_eq!(g, path(3).unwrap());
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(parse_edge_list(""), Err(Error::Parse(_))));
        assert!(matches!(parse_edge_list("3 2\n0 1\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_edge_list("3 1\n0 x\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_edge_list("3 1\n0 5\n"), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn json_keeps_labels() {
        let g = complete_split(2, 2).unwrap().graph;
        let text = to_json(&g);
        assert!(text.contains("\"labels\":{\"0\":\"x1\""));
        let back = parse_json(&text).unwrap();
        assert_eq!(back.labels(), g.labels());
        assert_eq!(back, g);
        let plain = parse_json(r#"{"n":2,"edges":[[0,1]]}"#).unwrap();
        assert_eq!(plain.labels(), None);
        assert!(parse_json(r#"{"n":2,"edges":[[0,1]],"labels":{"5":"z"}}"#).is_err());
    }
}
