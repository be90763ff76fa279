//! Trivially perfect graphs: recognition through the universal clique
//! decomposition, minimum-height search trees, and a rotation sequence of
//! length at most `m` from any search tree to the canonical one.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::tree::{RotationSequence, SearchTree};

/// Universal clique decomposition: a rooted tree of bags, root at index 0.
/// Each bag is the set of universal vertices of the subgraph induced by the
/// bags below it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ucd {
    pub nodes: Vec<UcdNode>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UcdNode {
    pub bag: VertexSet,
    pub children: Vec<usize>,
}

/// Vertices of `s` adjacent to every other vertex of `s`.
fn universal_within(g: &Graph, s: VertexSet) -> VertexSet {
    s.iter()
        .filter(|&v| s.without(v).is_subset(g.neighbors(v)))
        .collect()
}

/// The decomposition of a connected graph, or `None` when the graph is not
/// trivially perfect (some connected induced piece has no universal vertex).
pub fn recognize_tp(g: &Graph) -> Option<Ucd> {
    if !g.is_connected() {
        return None;
    }
    let mut nodes = vec![UcdNode { bag: VertexSet::EMPTY, children: Vec::new() }];
    let mut stack = vec![(0, g.vertices())];
    while let Some((id, set)) = stack.pop() {
        let bag = universal_within(g, set);
        if bag.is_empty() {
            return None;
        }
        nodes[id].bag = bag;
        for comp in g.components_within(set.difference(bag)) {
            let child = nodes.len();
            nodes.push(UcdNode { bag: VertexSet::EMPTY, children: Vec::new() });
            nodes[id].children.push(child);
            stack.push((child, comp));
        }
    }
    Some(Ucd { nodes })
}

pub fn is_trivially_perfect(g: &Graph) -> bool {
    recognize_tp(g).is_some()
}

impl Ucd {
    pub fn root(&self) -> &UcdNode {
        &self.nodes[0]
    }

    /// Union of the bags in the subtree of node `id`.
    pub fn subtree_vertices(&self, id: usize) -> VertexSet {
        let mut out = self.nodes[id].bag;
        for &c in &self.nodes[id].children {
            out = out.union(self.subtree_vertices(c));
        }
        out
    }

    /// Bag sizes grouped by depth, each level sorted; equal for isomorphic graphs.
    pub fn level_profile(&self) -> Vec<Vec<usize>> {
        let mut levels: Vec<Vec<usize>> = Vec::new();
        let mut layer = vec![0];
        while !layer.is_empty() {
            let mut sizes: Vec<usize> = layer.iter().map(|&i| self.nodes[i].bag.len()).collect();
            sizes.sort_unstable();
            levels.push(sizes);
            layer = layer.iter().flat_map(|&i| self.nodes[i].children.iter().copied()).collect();
        }
        levels
    }

    /// Checks every defining property of a universal clique decomposition of `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        if self.nodes.is_empty() {
            return bad("decomposition has no nodes".into());
        }
        // parent links, and reachability of every node from the root
        let mut parent = vec![None; self.nodes.len()];
        for (i, node) in self.nodes.iter().enumerate() {
            for &c in &node.children {
                if c == 0 || c >= self.nodes.len() || parent[c].is_some() {
                    return bad(format!("node {c} has a bad parent link"));
                }
                parent[c] = Some(i);
            }
        }
        let mut covered = VertexSet::EMPTY;
        let mut total = 0;
        for (i, node) in self.nodes.iter().enumerate() {
            if i != 0 && parent[i].is_none() {
                return bad(format!("node {i} is unreachable"));
            }
            if node.bag.is_empty() {
                return bad(format!("node {i} has an empty bag"));
            }
            if node.children.len() == 1 {
                return bad(format!("node {i} has a single child"));
            }
            covered = covered.union(node.bag);
            total += node.bag.len();
            let below = self.subtree_vertices(i);
            if universal_within(g, below) != node.bag {
                return bad(format!("bag of node {i} is not the universal clique below it"));
            }
        }
        if covered != g.vertices() || total != g.n() {
            return bad("bags do not partition the vertices".into());
        }
        // each edge must join bags on a common root-to-leaf path
        let mut node_of = vec![0; g.n()];
        for (i, node) in self.nodes.iter().enumerate() {
            for v in node.bag.iter() {
                node_of[v] = i;
            }
        }
        let is_ancestor_or_self = |a: usize, mut b: usize| loop {
            if a == b {
                return true;
            }
            match parent[b] {
                Some(p) => b = p,
                None => return false,
            }
        };
        for &(u, v) in g.edges() {
            let (a, b) = (node_of[u], node_of[v]);
            if !is_ancestor_or_self(a, b) && !is_ancestor_or_self(b, a) {
                return bad(format!("edge ({u}, {v}) crosses branches"));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let doc = UcdJson {
            nodes: self
                .nodes
                .iter()
                .map(|n| UcdNodeJson { bag: n.bag.to_vec(), children: n.children.clone() })
                .collect(),
        };
        serde_json::to_string(&doc).expect("decomposition serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: UcdJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(Ucd {
            nodes: doc
                .nodes
                .into_iter()
                .map(|n| UcdNode { bag: n.bag.iter().collect(), children: n.children })
                .collect(),
        })
    }
}

#[derive(Serialize, Deserialize)]
struct UcdJson {
    nodes: Vec<UcdNodeJson>,
}

#[derive(Serialize, Deserialize)]
struct UcdNodeJson {
    bag: Vec<usize>,
    children: Vec<usize>,
}

/// Search tree of height equal to the clique number: each bag becomes a
/// chain in ascending id order, and the trees of the child nodes hang below
/// the last vertex of the chain.
pub fn min_height_tree(g: &Graph, ucd: &Ucd) -> Result<SearchTree> {
    ucd.validate(g)?;
    let mut parents = vec![None; g.n()];
    let mut stack = vec![(0, None)];
    while let Some((id, above)) = stack.pop() {
        let mut last = above;
        for v in ucd.nodes[id].bag.iter() {
            parents[v] = last;
            last = Some(v);
        }
        for &c in &ucd.nodes[id].children {
            stack.push((c, last));
        }
    }
    SearchTree::from_parents(&parents)
}

/// The minimum-height tree every transformation ends at.
pub fn canonical_tree(g: &Graph) -> Result<SearchTree> {
    let ucd = recognize_tp(g).ok_or(Error::NotTriviallyPerfect)?;
    min_height_tree(g, &ucd)
}

/// Rotations taking `t` to [`canonical_tree`]. Within each tube, the
/// smallest universal vertex is lifted to the top of the tube, then the
/// components below it are handled recursively. Every rotation moves the
/// lifted vertex above a neighbour that stays below it for good, so the
/// length is at most `m`.
pub fn tp_transform(g: &Graph, t: &SearchTree) -> Result<RotationSequence> {
    if !is_trivially_perfect(g) {
        return Err(Error::NotTriviallyPerfect);
    }
    t.validate(g)?;
    let mut cur = t.clone();
    let mut seq = RotationSequence::new();
    let mut stack = vec![g.vertices()];
    while let Some(set) = stack.pop() {
        let r = universal_within(g, set).first().ok_or(Error::NotTriviallyPerfect)?;
        while let Some(p) = cur.parent(r).filter(|&p| set.contains(p)) {
            debug_assert!(g.has_edge(p, r));
            seq.push(r);
            cur = cur.rotate(g, r)?;
        }
        stack.extend(g.components_within(set.without(r)));
    }
    Ok(seq)
}

/// `t1` to the canonical tree, then back out to `t2`; at most `2m` rotations.
pub fn tp_path(g: &Graph, t1: &SearchTree, t2: &SearchTree) -> Result<RotationSequence> {
    let mut seq = tp_transform(g, t1)?;
    let back = tp_transform(g, t2)?;
    seq.extend(&back.inverse(g, t2)?);
    Ok(seq)
}

/// `m < td * n` for a trivially perfect graph, with `td` read off the
/// minimum-height tree.
pub fn edge_bound(g: &Graph) -> Result<bool> {
    let td = canonical_tree(g)?.height();
    Ok(g.m() < td * g.n())
}
