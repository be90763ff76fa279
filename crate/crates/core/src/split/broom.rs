use crate::error::{Error, Result};
use crate::graph::{Bipartition, PartKind, VertexSet};
use crate::tree::SearchTree;

/// A search tree shaped as a chain (the handle, root first) whose last
/// vertex carries the remaining vertices as leaf children.
///
/// The handle is read canonically: it continues while a vertex has exactly
/// one child, so a full chain is all handle and has no leaves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Broom {
    pub handle: Vec<usize>,
    pub leaves: VertexSet,
}

pub(crate) fn handle_of(t: &SearchTree) -> Vec<usize> {
    let children = t.children_lists();
    let mut handle = vec![t.root()];
    loop {
        let last = *handle.last().expect("nonempty");
        match children[last][..] {
            [c] => handle.push(c),
            _ => return handle,
        }
    }
}

/// Reads a search tree of a complete split or complete bipartite graph as a broom.
pub fn to_broom(bp: &Bipartition, t: &SearchTree) -> Result<Broom> {
    t.validate(&bp.graph)?;
    let handle = handle_of(t);
    let center = *handle.last().expect("nonempty");
    let leaves: VertexSet = t.children(center).into_iter().collect();
    let covered: VertexSet = handle.iter().collect::<VertexSet>().union(leaves);
    if covered != bp.graph.vertices() || leaves.iter().any(|v| !t.children(v).is_empty()) {
        return Err(Error::InvalidTree("search tree is not a broom".into()));
    }
    let on_handle: VertexSet = handle.iter().collect();
    let ok = match bp.kind {
        PartKind::Split => bp.p_set().is_subset(on_handle),
        PartKind::Bipartite => bp.p_set().is_subset(on_handle) || bp.q_set().is_subset(on_handle),
    };
    if !ok {
        return Err(Error::InvalidTree("broom handle misses a whole side".into()));
    }
    Ok(Broom { handle, leaves })
}

impl Broom {
    pub fn to_tree(&self, bp: &Bipartition) -> Result<SearchTree> {
        let n = bp.graph.n();
        let mut parents = vec![None; n];
        for w in self.handle.windows(2) {
            parents[w[1]] = Some(w[0]);
        }
        let center = *self
            .handle
            .last()
            .ok_or_else(|| Error::InvalidTree("broom has an empty handle".into()))?;
        for v in self.leaves.iter() {
            parents[v] = Some(center);
        }
        let t = SearchTree::from_parents(&parents)?;
        t.validate(&bp.graph)?;
        Ok(t)
    }

    pub fn is_chain(&self) -> bool {
        self.leaves.is_empty()
    }
}
