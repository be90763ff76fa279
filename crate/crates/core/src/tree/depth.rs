use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Default vertex limit for [`tree_depth`]; the memo table grows with the
/// number of connected subsets.
pub const DEFAULT_TREE_DEPTH_CAP: usize = 16;

/// Minimum height of a search tree on a connected graph.
pub fn tree_depth(g: &Graph) -> Result<usize> {
    tree_depth_with_cap(g, DEFAULT_TREE_DEPTH_CAP)
}

pub fn tree_depth_with_cap(g: &Graph, cap: usize) -> Result<usize> {
    if g.n() > cap {
        return Err(Error::TooManyVertices { n: g.n(), max: cap });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut memo = HashMap::new();
    Ok(td(g, g.vertices(), &mut memo))
}

fn td(g: &Graph, set: VertexSet, memo: &mut HashMap<VertexSet, usize>) -> usize {
    if set.len() <= 2 {
        return set.len();
    }
    if let Some(&d) = memo.get(&set) {
        return d;
    }
    let mut best = set.len();
    for r in set.iter() {
        let mut worst = 0;
        for c in g.components_within(set.without(r)) {
            // no point descending into a branch that cannot beat `best`
            if c.len() < worst {
                continue;
            }
            worst = worst.max(td(g, c, memo));
            if worst + 1 >= best {
                break;
            }
        }
        best = best.min(worst + 1);
    }
    memo.insert(set, best);
    best
}
