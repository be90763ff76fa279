use super::broom::handle_of;
use super::{binom2, inversions, to_broom, Broom, Recorder};
use crate::error::{Error, Result};
use crate::graph::{complete_split, Bipartition, PartKind};
use crate::tree::{RotationSequence, SearchTree};

/// Parameters of the witness pair: `alpha < p` clique vertices sit above
/// the independent set in the first tree, and `beta < q` independent
/// vertices sit below `x_p` in the second.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitWitnessParams {
    pub alpha: usize,
    pub beta: usize,
}

impl SplitWitnessParams {
    pub fn new(p: usize, q: usize, alpha: usize, beta: usize) -> Result<Self> {
        if p == 0 || q == 0 || alpha >= p || beta >= q {
            return Err(Error::InvalidParameter(format!(
                "need alpha < p and beta < q, got alpha={alpha}, beta={beta}, p={p}, q={q}"
            )));
        }
        Ok(SplitWitnessParams { alpha, beta })
    }
}

fn require_split(bp: &Bipartition) -> Result<()> {
    if bp.kind != PartKind::Split {
        return Err(Error::InvalidParameter("expected a complete split graph".into()));
    }
    Ok(())
}

/// The pair of brooms used for the lower bound, built from the orders
/// `x_1..x_a, y_1..y_q, x_(a+1)..x_p` and
/// `y_q..y_(b+1), x_p, y_b..y_1, x_(p-1)..x_1`.
///
/// With `p = 1` and `beta > 0` the second order cannot be a chain (the
/// vertices after `x_1` are pairwise non-adjacent), so `y_beta..y_1` end up
/// as leaves under `x_1`.
pub fn split_witnesses(p: usize, q: usize, params: SplitWitnessParams) -> Result<(Broom, Broom)> {
    SplitWitnessParams::new(p, q, params.alpha, params.beta)?;
    let bp = complete_split(p, q)?;
    let (a, b) = (params.alpha, params.beta);
    let first: Vec<usize> = (1..=a)
        .map(|i| bp.x(i))
        .chain((1..=q).map(|j| bp.y(j)))
        .chain((a + 1..=p).map(|i| bp.x(i)))
        .collect();
    let second: Vec<usize> = (b + 1..=q)
        .rev()
        .map(|j| bp.y(j))
        .chain(std::iter::once(bp.x(p)))
        .chain((1..=b).rev().map(|j| bp.y(j)))
        .chain((1..p).rev().map(|i| bp.x(i)))
        .collect();
    let t1 = SearchTree::from_ordering(&bp.graph, &first)?;
    let t2 = SearchTree::from_ordering(&bp.graph, &second)?;
    Ok((to_broom(&bp, &t1)?, to_broom(&bp, &t2)?))
}

/// `C(p,2) + C(q,2) - C(k,2) + alpha q + k (2p - 2 alpha - 1) + |beta - k|`.
pub fn f_eval(p: usize, q: usize, alpha: usize, beta: usize, k: usize) -> Result<i64> {
    if k > q {
        return Err(Error::InvalidParameter(format!("k = {k} exceeds q = {q}")));
    }
    let (p, q, a, b, k) = (p as i64, q as i64, alpha as i64, beta as i64, k as i64);
    let c2 = |x: i64| x * (x - 1) / 2;
    Ok(c2(p) + c2(q) - c2(k) + a * q + k * (2 * p - 2 * a - 1) + (b - k).abs())
}

/// Witness parameters giving the best lower bound: `(0, 0)` when
/// `q >= 4p + 1` or `q = 1`, otherwise `alpha` and `beta` are the integer
/// and scaled fractional parts of `(4p + 1 - q) / 4`.
pub fn choose_witness_params(p: usize, q: usize) -> Result<SplitWitnessParams> {
    if p == 0 || q == 0 {
        return Err(Error::InvalidParameter("p and q must be positive".into()));
    }
    if q > 4 * p || q == 1 {
        return SplitWitnessParams::new(p, q, 0, 0);
    }
    let num = 4 * p + 1 - q;
    SplitWitnessParams::new(p, q, num / 4, q * (num % 4) / 4)
}

/// Lower bound on the diameter of the rotation graph of `SPK(p, q)`, with
/// the witness parameters it was evaluated at.
pub fn split_lower_bound(p: usize, q: usize) -> Result<(usize, SplitWitnessParams)> {
    let params = choose_witness_params(p, q)?;
    if q == 1 {
        // the graph is complete on p + 1 vertices
        return Ok((binom2(p + 1), params));
    }
    let (a, b) = (params.alpha, params.beta);
    let bound = binom2(p) + a * q + (binom2(q) + b).min(2 * q * (p - a) - b);
    Ok((bound, params))
}

/// Exact diameter: `2pq + C(p,2)` when `q >= 4p + 1`, otherwise
/// `pq + floor(C(q,2) / 2) + C(p,2)`.
pub fn split_diameter(p: usize, q: usize) -> Result<usize> {
    if p == 0 || q == 0 {
        return Err(Error::InvalidParameter("p and q must be positive".into()));
    }
    Ok(if q > 4 * p { 2 * p * q + binom2(p) } else { p * q + binom2(q) / 2 + binom2(p) })
}

/// Number of clique vertices above each `y_j` in a broom (`p` for a leaf).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HandleProfile {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    /// Sum over both trees.
    pub total: usize,
}

/// `w[j - 1]` = number of vertices of `P` above `y_j` in `t`.
pub fn handle_profile(bp: &Bipartition, t: &SearchTree) -> Result<Vec<usize>> {
    let broom = to_broom(bp, t)?;
    let mut above_p = 0;
    let mut w = vec![bp.p; bp.q];
    for &v in &broom.handle {
        if bp.in_p(v) {
            above_p += 1;
        } else {
            w[v - bp.p] = above_p;
        }
    }
    Ok(w)
}

impl HandleProfile {
    pub fn of(bp: &Bipartition, t1: &SearchTree, t2: &SearchTree) -> Result<Self> {
        let first = handle_profile(bp, t1)?;
        let second = handle_profile(bp, t2)?;
        let total = first.iter().sum::<usize>() + second.iter().sum::<usize>();
        Ok(HandleProfile { first, second, total })
    }
}

/// Pushes every independent vertex of the handle down to the leaves,
/// lowest first, by rotating the vertex below it. Each costs `p - w`.
fn push_down(bp: &Bipartition, t: &SearchTree) -> Result<RotationSequence> {
    let w = handle_profile(bp, t)?;
    let mut rec = Recorder::new(&bp.graph, t.clone());
    let handle_q: Vec<usize> = handle_of(t).into_iter().filter(|&v| !bp.in_p(v)).collect();
    for &y in handle_q.iter().rev() {
        let before = rec.seq.len();
        while let Some(&c) = rec.tree.children(y).first() {
            debug_assert!(bp.in_p(c));
            rec.rotate(c)?;
        }
        assert_eq!(rec.seq.len() - before, bp.p - w[y - bp.p], "push-down cost of {y}");
    }
    Ok(rec.seq)
}

/// Lifts every independent vertex above all clique vertices, top of the
/// handle first and then the leaves by id, never swapping two independent
/// vertices. Each costs `w`.
fn lift_up(bp: &Bipartition, t: &SearchTree) -> Result<RotationSequence> {
    let w = handle_profile(bp, t)?;
    let broom = to_broom(bp, t)?;
    let order: Vec<usize> = broom
        .handle
        .iter()
        .copied()
        .filter(|&v| !bp.in_p(v))
        .chain(broom.leaves.iter())
        .collect();
    let mut rec = Recorder::new(&bp.graph, t.clone());
    for y in order {
        let before = rec.seq.len();
        while rec.tree.parent(y).is_some_and(|a| bp.in_p(a)) {
            rec.rotate(y)?;
        }
        assert_eq!(rec.seq.len() - before, w[y - bp.p], "lift cost of {y}");
    }
    Ok(rec.seq)
}

/// A path from `t1` to `t2` of length at most `2pq + C(p,2)`: push the
/// independent handle vertices of `t1` down to the leaves, sort the clique
/// chain, then undo the push-down of `t2`.
pub fn split_upper_path(bp: &Bipartition, t1: &SearchTree, t2: &SearchTree) -> Result<RotationSequence> {
    require_split(bp)?;
    let g = &bp.graph;
    let down1 = push_down(bp, t1)?;
    let down2 = push_down(bp, t2)?;
    let mid1 = t1.apply(g, &down1)?;
    let mid2 = t2.apply(g, &down2)?;
    let target = handle_of(&mid2);
    let expected = inversions(&handle_of(&mid1)[..bp.p], &target[..bp.p]);
    let mut rec = Recorder::new(g, mid1);
    rec.seq = down1;
    let swaps = rec.bubble_sort_handle(0, &target[..bp.p])?;
    assert_eq!(swaps, expected);
    assert!(swaps <= binom2(bp.p));
    debug_assert_eq!(rec.tree, mid2);
    rec.seq.extend(&down2.inverse(g, t2)?);
    assert!(rec.seq.len() <= 2 * bp.p * bp.q + binom2(bp.p));
    Ok(rec.seq)
}

/// Both candidate paths of the balanced case, with their handle profile.
#[derive(Clone, Debug)]
pub struct BalancedPaths {
    /// Everything independent pushed to the leaves.
    pub down: RotationSequence,
    /// Everything independent lifted above the clique.
    pub up: RotationSequence,
    pub profile: HandleProfile,
}

impl BalancedPaths {
    pub fn shorter(&self) -> &RotationSequence {
        if self.up.len() < self.down.len() {
            &self.up
        } else {
            &self.down
        }
    }
}

/// For `q <= 4p`, the shorter of two paths: the push-down path, or lifting
/// every independent vertex above the clique in both trees and sorting the
/// two blocks of the resulting chains. The result has length at most
/// `pq + floor(C(q,2) / 2) + C(p,2)`.
pub fn split_upper_path_balanced(
    bp: &Bipartition,
    t1: &SearchTree,
    t2: &SearchTree,
) -> Result<BalancedPaths> {
    require_split(bp)?;
    let (p, q) = (bp.p, bp.q);
    if q > 4 * p {
        return Err(Error::InvalidParameter(format!("balanced path needs q <= 4p, got p={p}, q={q}")));
    }
    let g = &bp.graph;
    let profile = HandleProfile::of(bp, t1, t2)?;
    let down = split_upper_path(bp, t1, t2)?;
    assert!(down.len() <= binom2(p) + 2 * p * q - profile.total);

    let up1 = lift_up(bp, t1)?;
    let up2 = lift_up(bp, t2)?;
    let mid1 = t1.apply(g, &up1)?;
    let mid2 = t2.apply(g, &up2)?;
    let target = handle_of(&mid2);
    let expected = inversions(&handle_of(&mid1), &target);
    let mut rec = Recorder::new(g, mid1);
    rec.seq = up1;
    let qs = rec.bubble_sort_handle(0, &target[..q])?;
    let ps = rec.bubble_sort_handle(q, &target[q..])?;
    assert_eq!(qs + ps, expected);
    debug_assert_eq!(rec.tree, mid2);
    rec.seq.extend(&up2.inverse(g, t2)?);
    let up = rec.seq;
    assert!(up.len() <= binom2(p) + binom2(q) + profile.total);

    let paths = BalancedPaths { down, up, profile };
    assert!(paths.shorter().len() <= p * q + binom2(q) / 2 + binom2(p));
    Ok(paths)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_examples() {
        assert_eq!(f_eval(3, 13, 0, 0, 0).unwrap(), 81);
        assert_eq!(f_eval(3, 13, 0, 0, 13).unwrap(), 81);
        assert!(f_eval(2, 3, 0, 0, 4).is_err());
        for (p, q, a, b) in [(3, 7, 1, 2), (5, 9, 4, 8), (1, 1, 0, 0)] {
            let c2 = |x: i64| x * (x - 1) / 2;
            let (pi, qi, ai, bi) = (p as i64, q as i64, a as i64, b as i64);
            assert_eq!(f_eval(p, q, a, b, 0).unwrap(), c2(pi) + c2(qi) + ai * qi + bi);
            assert_eq!(f_eval(p, q, a, b, q).unwrap(), c2(pi) + ai * qi + 2 * qi * (pi - ai) - bi);
        }
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(split_lower_bound(1, 5).unwrap().0, 10);
        let (b, params) = split_lower_bound(2, 4).unwrap();
        assert_eq!((b, params), (12, SplitWitnessParams { alpha: 1, beta: 1 }));
        for p in 1..=6 {
            assert_eq!(split_lower_bound(p, 1).unwrap().0, binom2(p + 1));
        }
    }

    #[test]
    fn lower_bound_matches_diameter() {
        for p in 1..=8 {
            for q in 1..=40 {
                let (low, params) = split_lower_bound(p, q).unwrap();
                assert!(params.alpha < p && params.beta < q);
                assert_eq!(low, split_diameter(p, q).unwrap(), "p={p} q={q}");
            }
        }
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(split_diameter(1, 5).unwrap(), 10);
        assert_eq!(split_diameter(2, 9).unwrap(), 37);
        assert_eq!(split_diameter(2, 4).unwrap(), 12);
    }

    #[test]
    fn witness_shapes() {
        let bp = complete_split(3, 5).unwrap();
        let (t1, t2) = split_witnesses(3, 5, SplitWitnessParams::new(3, 5, 0, 0).unwrap()).unwrap();
        assert_eq!(t1.handle[0], bp.y(1));
        // with beta = 0, x_p is the child of y_1
        let pos = t2.handle.iter().position(|&v| v == bp.y(1)).unwrap();
        assert_eq!(t2.handle[pos + 1], bp.x(3));
        let (t1, _) = split_witnesses(3, 5, SplitWitnessParams::new(3, 5, 2, 1).unwrap()).unwrap();
        assert_eq!(t1.handle[0], bp.x(1));
        // p = 1 with beta > 0 leaves y_1..y_beta hanging under x_1
        let bp1 = complete_split(1, 4).unwrap();
        let (_, t2) = split_witnesses(1, 4, SplitWitnessParams::new(1, 4, 0, 2).unwrap()).unwrap();
        assert_eq!(t2.leaves, [bp1.y(1), bp1.y(2)].iter().collect());
        assert!(split_witnesses(2, 2, SplitWitnessParams { alpha: 2, beta: 0 }).is_err());
    }

    #[test]
    fn witnesses_are_valid() {
        for p in 1..=5 {
            for q in 1..=5 {
                let bp = complete_split(p, q).unwrap();
                for a in 0..p {
                    for b in 0..q {
                        let (t1, t2) = split_witnesses(p, q, SplitWitnessParams { alpha: a, beta: b }).unwrap();
                        assert!(t1.to_tree(&bp).unwrap().is_valid(&bp.graph));
                        assert!(t2.to_tree(&bp).unwrap().is_valid(&bp.graph));
                    }
                }
            }
        }
    }

    #[test]
    fn all_leaves_pair_needs_no_rotations() {
        let bp = complete_split(3, 4).unwrap();
        let t = SearchTree::from_ordering(&bp.graph, &[0, 1, 2, 3, 4, 5, 6]).unwrap();
        assert!(split_upper_path(&bp, &t, &t).unwrap().is_empty());
        let paths = split_upper_path_balanced(&bp, &t, &t).unwrap();
        assert_eq!(paths.profile.total, 2 * 3 * 4);
        assert!(paths.shorter().is_empty());
    }
}
