use super::{to_broom, Broom};
use crate::error::{Error, Result};
use crate::graph::{complete_bipartite, Bipartition, Graph, PartKind, VertexSet};
use crate::tree::{RotationSequence, SearchTree};

fn require_bipartite(bp: &Bipartition) -> Result<()> {
    if bp.kind != PartKind::Bipartite {
        return Err(Error::InvalidParameter("expected a complete bipartite graph".into()));
    }
    Ok(())
}

/// Brooms whose handle is `y_1..y_q` (respectively `y_q..y_1`) with the
/// whole of `P` as leaves.
pub fn bipartite_witnesses(p: usize, q: usize) -> Result<(Broom, Broom)> {
    let bp = complete_bipartite(p, q)?;
    let leaves = bp.p_set();
    let up: Vec<usize> = (1..=q).map(|j| bp.y(j)).collect();
    let down: Vec<usize> = up.iter().rev().copied().collect();
    let t1 = Broom { handle: up, leaves }.to_tree(&bp)?;
    let t2 = Broom { handle: down, leaves }.to_tree(&bp)?;
    Ok((to_broom(&bp, &t1)?, to_broom(&bp, &t2)?))
}

/// For each vertex of `order` in turn, rotate it upwards as long as its
/// parent lies outside `group`.
pub fn lift_group(
    g: &Graph,
    t: &SearchTree,
    order: &[usize],
    group: VertexSet,
) -> Result<(SearchTree, RotationSequence)> {
    let mut cur = t.clone();
    let mut seq = RotationSequence::new();
    for &v in order {
        while cur.parent(v).is_some_and(|a| !group.contains(a)) {
            cur = cur.rotate(g, v)?;
            seq.push(v);
        }
    }
    Ok((cur, seq))
}

/// Vertices of `side` ordered by depth in `t`, ties by id.
fn appearance_order(t: &SearchTree, side: VertexSet) -> Vec<usize> {
    let depths = t.depths();
    let mut out = side.to_vec();
    out.sort_by_key(|&v| (depths[v], v));
    out
}

/// `X_T`: the broom whose handle is `P` in the order it appears in `t`
/// (by depth, then id) with `Q` as leaves; `N_T` is the same with the
/// roles of `P` and `Q` exchanged.
pub fn xt_nt(bp: &Bipartition, t: &SearchTree) -> Result<(Broom, Broom)> {
    require_bipartite(bp)?;
    t.validate(&bp.graph)?;
    let x = Broom { handle: appearance_order(t, bp.p_set()), leaves: bp.q_set() };
    let nn = Broom { handle: appearance_order(t, bp.q_set()), leaves: bp.p_set() };
    // normalize through a tree so a single-leaf broom reads as a chain
    let x = to_broom(bp, &x.to_tree(bp)?)?;
    let nn = to_broom(bp, &nn.to_tree(bp)?)?;
    Ok((x, nn))
}

/// Rotations from `t` to `X_T` (lifting `P`) and to `N_T` (lifting `Q`),
/// in appearance order. Their lengths add up to `pq`.
fn to_x_and_n(bp: &Bipartition, t: &SearchTree) -> Result<(RotationSequence, RotationSequence)> {
    let g = &bp.graph;
    let (x, nn) = xt_nt(bp, t)?;
    let (tx, sx) = lift_group(g, t, &appearance_order(t, bp.p_set()), bp.p_set())?;
    let (tn, sn) = lift_group(g, t, &appearance_order(t, bp.q_set()), bp.q_set())?;
    assert_eq!(tx, x.to_tree(bp)?);
    assert_eq!(tn, nn.to_tree(bp)?);
    assert_eq!(sx.len() + sn.len(), bp.p * bp.q);
    Ok((sx, sn))
}

/// Both candidate paths between two trees on `K(p, q)`.
#[derive(Clone, Debug)]
pub struct BipartitePaths {
    /// `T1 -> X_T1 -> N_T2 -> T2`.
    pub via_x: RotationSequence,
    /// `T1 -> N_T1 -> X_T2 -> T2`.
    pub via_n: RotationSequence,
}

impl BipartitePaths {
    pub fn shorter(&self) -> &RotationSequence {
        if self.via_n.len() < self.via_x.len() {
            &self.via_n
        } else {
            &self.via_x
        }
    }
}

/// Two paths whose lengths add up to `4pq`, so the shorter has at most
/// `2pq` rotations. The middle leg exchanges an all-`P` handle for an
/// all-`Q` handle by lifting the other side past everything, `pq` rotations.
pub fn bipartite_upper_path(bp: &Bipartition, t1: &SearchTree, t2: &SearchTree) -> Result<BipartitePaths> {
    require_bipartite(bp)?;
    let g = &bp.graph;
    let pq = bp.p * bp.q;
    let (x1, n1) = to_x_and_n(bp, t1)?;
    let (x2, n2) = to_x_and_n(bp, t2)?;
    let (_, broom_n2) = xt_nt(bp, t2)?;
    let (broom_x2, _) = xt_nt(bp, t2)?;

    let leg = |start: &SearchTree, first: &RotationSequence, target: &Broom, group: VertexSet| -> Result<RotationSequence> {
        let mid = start.apply(g, first)?;
        let (end, cross) = lift_group(g, &mid, &target.handle, group)?;
        assert_eq!(cross.len(), pq, "exchanging the handle side costs pq");
        assert_eq!(end, target.to_tree(bp)?);
        let mut seq = first.clone();
        seq.extend(&cross);
        Ok(seq)
    };
    let mut via_x = leg(t1, &x1, &broom_n2, bp.q_set())?;
    via_x.extend(&n2.inverse(g, t2)?);
    let mut via_n = leg(t1, &n1, &broom_x2, bp.p_set())?;
    via_n.extend(&x2.inverse(g, t2)?);
    assert_eq!(via_x.len() + via_n.len(), 4 * pq);
    Ok(BipartitePaths { via_x, via_n })
}

/// `2pq`, valid when `q >= 4p + 1`; the balanced case has no known closed form.
pub fn bipartite_diameter_unbalanced(p: usize, q: usize) -> Result<usize> {
    if p == 0 || q < 4 * p + 1 {
        return Err(Error::InvalidParameter(format!("closed form needs q >= 4p + 1, got p={p}, q={q}")));
    }
    Ok(2 * p * q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::enumerate_search_trees;

    #[test]
    fn witnesses_are_valid() {
        for p in 1..=6 {
            for q in 1..=6 {
                let bp = complete_bipartite(p, q).unwrap();
                let (t1, t2) = bipartite_witnesses(p, q).unwrap();
                let (a, b) = (t1.to_tree(&bp).unwrap(), t2.to_tree(&bp).unwrap());
                assert!(a.is_valid(&bp.graph) && b.is_valid(&bp.graph));
                assert_eq!(q == 1, a == b);
            }
        }
    }

    #[test]
    fn nt_is_a_fixed_point() {
        let bp = complete_bipartite(2, 3).unwrap();
        for t in enumerate_search_trees(&bp.graph, 10_000).unwrap() {
            let (_, nn) = xt_nt(&bp, &t).unwrap();
            let nt = nn.to_tree(&bp).unwrap();
            assert_eq!(xt_nt(&bp, &nt).unwrap().1, nn);
        }
    }

    #[test]
    fn paths_replay_and_stay_within_2pq() {
        let bp = complete_bipartite(2, 3).unwrap();
        let trees = enumerate_search_trees(&bp.graph, 10_000).unwrap();
        for t1 in trees.iter().step_by(7) {
            for t2 in trees.iter().step_by(5) {
                let paths = bipartite_upper_path(&bp, t1, t2).unwrap();
                for seq in [&paths.via_x, &paths.via_n] {
                    assert_eq!(&t1.apply(&bp.graph, seq).unwrap(), t2);
                }
                assert!(paths.shorter().len() <= 12);
            }
        }
    }

    #[test]
    fn unbalanced_formula() {
        assert_eq!(bipartite_diameter_unbalanced(1, 5).unwrap(), 10);
        assert_eq!(bipartite_diameter_unbalanced(1, 9).unwrap(), 18);
        assert_eq!(bipartite_diameter_unbalanced(2, 9).unwrap(), 36);
        assert!(bipartite_diameter_unbalanced(2, 8).is_err());
    }
}
