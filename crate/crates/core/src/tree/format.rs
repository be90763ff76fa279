//! Text, JSON and DOT forms of search trees.
//!
//! Text: `root; v:parent, v:parent, ...` listing every non-root vertex, for
//! example `1; 0:1, 2:1`. [`parse_tree`] also accepts `order: 2 0 1` to
//! build a tree from an elimination ordering.
//!
//! JSON: `{"root": 1, "parent": [1, null, 1]}` with `null` in the root slot.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::SearchTree;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn to_text(t: &SearchTree) -> String {
    let root = t.root();
    let rest: Vec<String> = (0..t.len())
        .filter_map(|v| t.parent(v).map(|p| format!("{v}:{p}")))
        .collect();
    if rest.is_empty() {
        format!("{root};")
    } else {
        format!("{root}; {}", rest.join(", "))
    }
}

fn id(s: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("expected a vertex id, got `{}`", s.trim())))
}

/// Parses the text form on `n` vertices. Only the shape is checked here.
pub fn parse_text(text: &str, n: usize) -> Result<SearchTree> {
    let (root, rest) = text
        .split_once(';')
        .ok_or_else(|| Error::Parse("tree text must look like `root; v:parent, ...`".into()))?;
    let root = id(root)?;
    let mut parents: Vec<Option<Option<usize>>> = vec![None; n];
    if root >= n {
        return Err(Error::Parse(format!("root {root} out of range")));
    }
    parents[root] = Some(None);
    for item in rest.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (v, p) = item
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected `v:parent`, got `{item}`")))?;
        let (v, p) = (id(v)?, id(p)?);
        if v >= n || p >= n {
            return Err(Error::Parse(format!("`{item}` names a vertex outside 0..{n}")));
        }
        if parents[v].is_some() {
            return Err(Error::Parse(format!("vertex {v} listed twice")));
        }
        parents[v] = Some(Some(p));
    }
    let parents: Vec<Option<usize>> = parents
        .into_iter()
        .enumerate()
        .map(|(v, p)| p.ok_or_else(|| Error::Parse(format!("vertex {v} has no parent entry"))))
        .collect::<Result<_>>()?;
    SearchTree::from_parents(&parents)
}

#[derive(Serialize, Deserialize)]
struct TreeJson {
    root: usize,
    parent: Vec<Option<usize>>,
}

pub fn to_json_value(t: &SearchTree) -> serde_json::Value {
    serde_json::to_value(TreeJson { root: t.root(), parent: t.parents() }).expect("tree serializes")
}

pub fn to_json(t: &SearchTree) -> String {
    to_json_value(t).to_string()
}

pub fn parse_json(text: &str) -> Result<SearchTree> {
    let doc: TreeJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let t = SearchTree::from_parents(&doc.parent)?;
    if t.root() != doc.root {
        return Err(Error::Parse(format!("root field {} disagrees with the parent array", doc.root)));
    }
    Ok(t)
}

/// Parses any accepted tree form and checks it is a search tree on `g`.
pub fn parse_tree(g: &Graph, text: &str) -> Result<SearchTree> {
    let text = text.trim();
    let t = if let Some(rest) = text.strip_prefix("order:") {
        let order: Vec<usize> = rest
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(id)
            .collect::<Result<_>>()?;
        SearchTree::from_ordering(g, &order)?
    } else if text.starts_with('{') {
        parse_json(text)?
    } else {
        parse_text(text, g.n())?
    };
    t.validate(g)?;
    Ok(t)
}

/// Graphviz digraph with edges from parent to child, using vertex labels when present.
pub fn to_dot(g: &Graph, t: &SearchTree) -> String {
    let mut out = String::from("digraph search_tree {\n  node [shape=circle];\n");
    for v in 0..t.len() {
        let _ = writeln!(out, "  {v} [label=\"{}\"];", g.label(v));
    }
    for v in 0..t.len() {
        if let Some(p) = t.parent(v) {
            let _ = writeln!(out, "  {p} -> {v};");
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_split, path};

    #[test]
    fn text_round_trip() {
        let g = path(3).unwrap();
        let t = SearchTree::from_ordering(&g, &[1, 0, 2]).unwrap();
        assert_eq!(to_text(&t), "1; 0:1, 2:1");
        assert_eq!(parse_tree(&g, "1; 0:1, 2:1").unwrap(), t);
        assert_eq!(parse_tree(&g, "order: 1 0 2").unwrap(), t);
        let single = SearchTree::from_parents(&[None]).unwrap();
        assert_eq!(to_text(&single), "0;");
        assert_eq!(parse_text("0;", 1).unwrap(), single);
    }

    #[test]
    fn json_round_trip() {
        let g = path(3).unwrap();
        let t = SearchTree::from_ordering(&g, &[1, 0, 2]).unwrap();
        assert_eq!(to_json(&t), r#"{"parent":[1,null,1],"root":1}"#);
        assert_eq!(parse_tree(&g, &to_json(&t)).unwrap(), t);
        assert!(parse_json(r#"{"root":0,"parent":[1,null,1]}"#).is_err());
    }

    #[test]
    fn parse_errors() {
        let g = path(3).unwrap();
        assert!(parse_tree(&g, "1 0:1").is_err());
        assert!(parse_tree(&g, "1; 0:1").is_err());
        assert!(parse_tree(&g, "1; 0:1, 0:1, 2:1").is_err());
        assert!(parse_tree(&g, "0; 1:0, 2:0").is_err());
        assert!(parse_tree(&g, "1; 0:1, 2:9").is_err());
    }

    #[test]
    fn dot_uses_labels() {
        let g = complete_split(1, 2).unwrap().graph;
        let t = SearchTree::canonical_start(&g).unwrap();
        let dot = to_dot(&g, &t);
        assert!(dot.contains("label=\"x1\""));
        assert!(dot.contains("0 -> 1;"));
    }
}
