//! Projections of search trees onto convex vertex subsets of chordal graphs.
//!
//! A set `S` is convex when the vertices outside it can be removed one at a
//! time, each being simplicial in what remains. Deleting a simplicial vertex
//! from a search tree leaves a search tree on the smaller graph: a leaf is
//! dropped, a root is replaced by its only child, and an inner vertex (which
//! then has exactly one child) is spliced out. The result does not depend on
//! the elimination order.

use super::{RotationSequence, SearchTree};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// An order in which the vertices outside `s` can be eliminated, or `None`.
fn elimination_outside(g: &Graph, s: VertexSet) -> Option<Vec<usize>> {
    let mut remaining = g.vertices();
    let mut order = Vec::new();
    // simpliciality is inherited by induced subgraphs, so greedy never
    // needs to backtrack
    while remaining != s {
        let v = remaining
            .difference(s)
            .iter()
            .find(|&v| g.is_simplicial_within(remaining, v))?;
        order.push(v);
        remaining.remove(v);
    }
    Some(order)
}

fn check_subset(g: &Graph, s: VertexSet) -> Result<()> {
    if s.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    if !s.is_subset(g.vertices()) {
        return Err(Error::InvalidParameter("vertex set is not contained in the graph".into()));
    }
    Ok(())
}

pub fn is_convex(g: &Graph, s: VertexSet) -> Result<bool> {
    if !g.is_chordal() {
        return Err(Error::NotChordal);
    }
    check_subset(g, s)?;
    Ok(elimination_outside(g, s).is_some())
}

/// Projection of `t` onto the convex set `s`, as a tree on `G[s]` with the
/// vertices renumbered like [`Graph::induced_subgraph`].
pub fn project_tree(g: &Graph, t: &SearchTree, s: VertexSet) -> Result<SearchTree> {
    if !g.is_chordal() {
        return Err(Error::NotChordal);
    }
    check_subset(g, s)?;
    let order = elimination_outside(g, s).ok_or(Error::NotConvex)?;
    project_tree_with_order(g, t, s, &order)
}

/// Same as [`project_tree`] but deleting the outside vertices in the given
/// order, which must eliminate simplicial vertices only.
pub fn project_tree_with_order(
    g: &Graph,
    t: &SearchTree,
    s: VertexSet,
    order: &[usize],
) -> Result<SearchTree> {
    check_subset(g, s)?;
    t.validate(g)?;
    let outside = g.vertices().difference(s);
    if order.len() != outside.len() || order.iter().collect::<VertexSet>() != outside {
        return Err(Error::InvalidParameter("order must list exactly the vertices outside the set".into()));
    }
    let mut parent = t.parents();
    let mut alive = g.vertices();
    for &v in order {
        if !g.is_simplicial_within(alive, v) {
            return Err(Error::NotConvex);
        }
        let kids: Vec<usize> = alive.iter().filter(|&c| parent[c] == Some(v)).collect();
        match kids[..] {
            [] => {}
            [c] => parent[c] = parent[v],
            _ => unreachable!("a simplicial vertex has at most one child"),
        }
        alive.remove(v);
    }
    let (_, map) = g.induced_subgraph(s)?;
    let mut projected = vec![None; s.len()];
    for v in s.iter() {
        projected[map[v].expect("kept")] = parent[v].map(|p| map[p].expect("parent kept"));
    }
    SearchTree::from_parents(&projected)
}

/// Keeps the rotations of `seq` (replayed from `start`) whose two vertices
/// both lie in `s`, renumbered into `G[s]`. The result replays from the
/// projection of `start` to the projection of the end tree.
pub fn project_sequence(
    g: &Graph,
    start: &SearchTree,
    seq: &RotationSequence,
    s: VertexSet,
) -> Result<RotationSequence> {
    if !is_convex(g, s)? {
        return Err(Error::NotConvex);
    }
    let (_, resolved) = seq.replay(g, start)?;
    let (_, map) = g.induced_subgraph(s)?;
    Ok(RotationSequence(
        resolved
            .iter()
            .filter(|r| s.contains(r.parent) && s.contains(r.child))
            .map(|r| map[r.child].expect("kept"))
            .collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, ladder_pw2, path};
    use crate::tree::enumerate_search_trees;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    #[test]
    fn convexity_examples() {
        let p3 = path(3).unwrap();
        assert!(is_convex(&p3, p3.vertices()).unwrap());
        assert!(!is_convex(&p3, set(&[0, 2])).unwrap());
        assert!(is_convex(&p3, set(&[0, 1])).unwrap());
        assert!(is_convex(&p3, set(&[1])).unwrap());
        assert_eq!(is_convex(&cycle(4).unwrap(), set(&[0])), Err(Error::NotChordal));
        let lad = ladder_pw2(6).unwrap();
        assert!(is_convex(&lad.graph, lad.left()).unwrap());
        assert!(is_convex(&lad.graph, lad.right()).unwrap());
    }

    #[test]
    fn identity_and_leaf_deletion() {
        let g = path(4).unwrap();
        for t in enumerate_search_trees(&g, 100).unwrap() {
            assert_eq!(project_tree(&g, &t, g.vertices()).unwrap(), t);
        }
        // chain 0 -> 1 -> 2 -> 3; 3 is a leaf and simplicial
        let t = SearchTree::from_ordering(&g, &[0, 1, 2, 3]).unwrap();
        let p = project_tree(&g, &t, set(&[0, 1, 2])).unwrap();
        assert_eq!(p.parents(), vec![None, Some(0), Some(1)]);
        // root deletion: 0 is the root and simplicial
        let p = project_tree(&g, &t, set(&[1, 2, 3])).unwrap();
        assert_eq!(p.parents(), vec![None, Some(0), Some(1)]);
    }

    #[test]
    fn splice_in_complete_graph() {
        let g = complete(4).unwrap();
        let t = SearchTree::chain(&g, &[3, 1, 0, 2]).unwrap();
        let p = project_tree(&g, &t, set(&[0, 2, 3])).unwrap();
        // remaining ids 0, 2, 3 become 0, 1, 2: chain 3 -> 0 -> 2
        assert_eq!(p.parents(), vec![Some(2), Some(0), None]);
    }

    #[test]
    fn rejects_non_convex() {
        let g = path(3).unwrap();
        let t = SearchTree::canonical_start(&g).unwrap();
        assert_eq!(project_tree(&g, &t, set(&[0, 2])), Err(Error::NotConvex));
        assert_eq!(
            project_tree_with_order(&g, &t, set(&[0, 2]), &[1]),
            Err(Error::NotConvex)
        );
    }

    #[test]
    fn single_rotation_outside_projects_to_nothing() {
        let g = path(3).unwrap();
        let t = SearchTree::from_ordering(&g, &[0, 1, 2]).unwrap();
        let seq = RotationSequence(vec![2]);
        let s = set(&[0, 1]);
        assert!(project_sequence(&g, &t, &seq, s).unwrap().is_empty());
        let end = t.apply(&g, &seq).unwrap();
        assert_eq!(project_tree(&g, &t, s).unwrap(), project_tree(&g, &end, s).unwrap());
        let all = project_sequence(&g, &t, &seq, g.vertices()).unwrap();
        assert_eq!(all, seq);
    }
}
