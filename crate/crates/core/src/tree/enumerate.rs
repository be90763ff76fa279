use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use super::SearchTree;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Exact number of search trees on a connected graph: a sum over root
/// choices of the product over the remaining components.
pub fn count_search_trees(g: &Graph) -> Result<BigUint> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut memo = HashMap::new();
    Ok(count(g, g.vertices(), &mut memo))
}

fn count(g: &Graph, set: VertexSet, memo: &mut HashMap<VertexSet, BigUint>) -> BigUint {
    if set.len() <= 1 {
        return BigUint::one();
    }
    if let Some(c) = memo.get(&set) {
        return c.clone();
    }
    let mut total = BigUint::default();
    for r in set.iter() {
        let mut prod = BigUint::one();
        for c in g.components_within(set.without(r)) {
            prod *= count(g, c, memo);
        }
        total += prod;
    }
    memo.insert(set, total.clone());
    total
}

/// Calls `visit` once for every search tree, in a deterministic order.
/// Returns the number of trees visited.
pub fn for_each_search_tree(g: &Graph, mut visit: impl FnMut(&SearchTree)) -> Result<u64> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let mut tree = SearchTree::from_raw(vec![0; n]);
    let mut pending = vec![(g.vertices(), None)];
    let mut visited = 0;
    walk(g, &mut tree, &mut pending, &mut |t| {
        visited += 1;
        visit(t)
    });
    Ok(visited)
}

fn walk(
    g: &Graph,
    tree: &mut SearchTree,
    pending: &mut Vec<(VertexSet, Option<usize>)>,
    visit: &mut dyn FnMut(&SearchTree),
) {
    let Some((set, above)) = pending.pop() else {
        visit(tree);
        return;
    };
    let mark = pending.len();
    for r in set.iter() {
        tree.parent[r] = above.unwrap_or(r) as u8;
        pending.extend(g.components_within(set.without(r)).into_iter().map(|c| (c, Some(r))));
        walk(g, tree, pending, visit);
        pending.truncate(mark);
    }
    pending.push((set, above));
}

/// Collects all search trees, refusing up front if there are more than `cap`.
pub fn enumerate_search_trees(g: &Graph, cap: u64) -> Result<Vec<SearchTree>> {
    let total = count_search_trees(g)?;
    match total.to_u64() {
        Some(c) if c <= cap => {
            let mut out = Vec::with_capacity(c as usize);
            for_each_search_tree(g, |t| out.push(t.clone()))?;
            Ok(out)
        }
        _ => Err(Error::CapExceeded { what: "search trees", count: total.to_string(), cap }),
    }
}
