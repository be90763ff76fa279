//! Brooms on complete split graphs `SPK(p, q)` and complete bipartite graphs
//! `K(p, q)`: witness pairs, the lower-bound machinery, constructive
//! rotation paths and the closed-form diameters.
//!
//! Throughout, `P = {x_1..x_p}` has ids `0..p` and `Q = {y_1..y_q}` has ids
//! `p..p+q`, as produced by [`complete_split`](crate::graph::complete_split)
//! and [`complete_bipartite`](crate::graph::complete_bipartite).

mod bipartite;
mod broom;
mod complete_split;

pub use bipartite::{
    bipartite_diameter_unbalanced, bipartite_upper_path, bipartite_witnesses, lift_group, xt_nt,
    BipartitePaths,
};
pub use broom::{to_broom, Broom};
pub use complete_split::{
    choose_witness_params, f_eval, handle_profile, split_diameter, split_lower_bound,
    split_upper_path, split_upper_path_balanced, split_witnesses, BalancedPaths, HandleProfile,
    SplitWitnessParams,
};

use crate::error::Result;
use crate::graph::Graph;
use crate::tree::{RotationSequence, SearchTree};

pub(crate) fn binom2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// Applies rotations one at a time while recording them.
pub(crate) struct Recorder<'g> {
    pub g: &'g Graph,
    pub tree: SearchTree,
    pub seq: RotationSequence,
}

impl<'g> Recorder<'g> {
    pub fn new(g: &'g Graph, tree: SearchTree) -> Self {
        Recorder { g, tree, seq: RotationSequence::new() }
    }

    pub fn rotate(&mut self, v: usize) -> Result<()> {
        self.tree = self.tree.rotate(self.g, v)?;
        self.seq.push(v);
        Ok(())
    }

    /// Handle of the current tree: the chain from the root down to the first
    /// vertex that does not have exactly one child.
    pub fn handle(&self) -> Vec<usize> {
        broom::handle_of(&self.tree)
    }

    /// Reorders the top `target.len()` handle positions into `target` by
    /// adjacent swaps; swapping positions `i` and `i + 1` is the rotation at
    /// the lower vertex. Returns the number of swaps.
    pub fn bubble_sort_handle(&mut self, offset: usize, target: &[usize]) -> Result<usize> {
        let mut rank = vec![usize::MAX; self.g.n()];
        for (i, &v) in target.iter().enumerate() {
            rank[v] = i;
        }
        let mut swaps = 0;
        loop {
            let h = self.handle();
            let seg = &h[offset..offset + target.len()];
            let Some(i) = (0..seg.len().saturating_sub(1)).find(|&i| rank[seg[i]] > rank[seg[i + 1]]) else {
                debug_assert_eq!(seg, target);
                return Ok(swaps);
            };
            self.rotate(seg[i + 1])?;
            swaps += 1;
            debug_assert_eq!(self.handle()[offset + i], seg[i + 1]);
        }
    }
}

/// Number of inversions turning `from` into `to` (both permutations of the same set).
pub(crate) fn inversions(from: &[usize], to: &[usize]) -> usize {
    let pos = |v: usize| to.iter().position(|&w| w == v).expect("same elements");
    let ranks: Vec<usize> = from.iter().map(|&v| pos(v)).collect();
    let mut count = 0;
    for i in 0..ranks.len() {
        for j in i + 1..ranks.len() {
            if ranks[i] > ranks[j] {
                count += 1;
            }
        }
    }
    count
}
