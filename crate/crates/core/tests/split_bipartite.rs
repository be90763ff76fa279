use gassoc::flip::{check_sequence, distance, FlipGraph};
use gassoc::graph::*;
use gassoc::split::*;
use gassoc::tree::{RotationSequence, SearchTree};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn c2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

fn split_path(bp: &Bipartition, t1: &SearchTree, t2: &SearchTree) -> RotationSequence {
    if bp.q <= 4 * bp.p {
        split_upper_path_balanced(bp, t1, t2).unwrap().shorter().clone()
    } else {
        split_upper_path(bp, t1, t2).unwrap()
    }
}

#[test]
fn f_minimum_at_an_endpoint() {
    let mut checked = 0;
    for p in 1..=8 {
        for q in 1..=40 {
            for a in 0..p {
                for b in 0..q {
                    let ends = f_eval(p, q, a, b, 0).unwrap().min(f_eval(p, q, a, b, q).unwrap());
                    for k in 0..=q {
                        assert!(f_eval(p, q, a, b, k).unwrap() >= ends, "p={p} q={q} a={a} b={b} k={k}");
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked > 100_000);
}

#[test]
fn f_at_zero_has_its_closed_form() {
    for p in 1..=6 {
        for q in 1..=12 {
            for a in 0..p {
                for b in 0..q {
                    let expected = c2(p) + c2(q) + a * q + b;
                    assert_eq!(f_eval(p, q, a, b, 0).unwrap(), expected as i64);
                }
            }
        }
    }
}

#[test]
fn formula_matches_exact_diameter() {
    for p in 1..=5 {
        for q in 1..=6 {
            if p + q > 7 {
                continue;
            }
            let bp = complete_split(p, q).unwrap();
            let d = FlipGraph::build(&bp.graph).unwrap().diameter().diameter;
            assert_eq!(d, split_diameter(p, q).unwrap(), "p={p} q={q}");
            if q == 1 {
                assert_eq!(d, c2(p + 1));
            }
        }
    }
}

#[test]
fn witnesses_realize_the_diameter_on_small_instances() {
    for p in 1..=4 {
        for q in 2..=5 {
            if p + q > 7 {
                continue;
            }
            let bp = complete_split(p, q).unwrap();
            let (lower, params) = split_lower_bound(p, q).unwrap();
            let (b1, b2) = split_witnesses(p, q, params).unwrap();
            let d = distance(&bp.graph, &b1.to_tree(&bp).unwrap(), &b2.to_tree(&bp).unwrap()).unwrap().distance;
            assert!(d >= lower, "p={p} q={q}: {d} < {lower}");
            assert_eq!(d, split_diameter(p, q).unwrap(), "p={p} q={q}");
        }
    }
}

#[test]
fn lower_bound_equals_formula_on_a_large_grid() {
    for p in 1..=8 {
        for q in 1..=40 {
            assert_eq!(split_lower_bound(p, q).unwrap().0, split_diameter(p, q).unwrap(), "p={p} q={q}");
        }
    }
}

#[test]
fn constructive_paths_replay_and_respect_distance() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for (p, q) in [(1, 5), (2, 3), (2, 4), (3, 3), (1, 6)] {
        let bp = complete_split(p, q).unwrap();
        let g = &bp.graph;
        let fg = FlipGraph::build(g).unwrap();
        for _ in 0..40 {
            let a = fg.tree(rng.gen_range(0..fg.node_count()));
            let b = fg.tree(rng.gen_range(0..fg.node_count()));
            let d = fg.distance(&a, &b).unwrap();
            let mut paths = vec![split_upper_path(&bp, &a, &b).unwrap()];
            if q <= 4 * p {
                let bal = split_upper_path_balanced(&bp, &a, &b).unwrap();
                paths.push(bal.down.clone());
                paths.push(bal.up.clone());
            }
            for seq in paths {
                assert_eq!(check_sequence(g, &a, &seq).unwrap(), b);
                assert!(seq.len() >= d);
            }
        }
    }
    for (p, q) in [(1, 3), (2, 2), (2, 3), (3, 3), (2, 4)] {
        let bp = complete_bipartite(p, q).unwrap();
        let g = &bp.graph;
        let fg = FlipGraph::build(g).unwrap();
        for _ in 0..40 {
            let a = fg.tree(rng.gen_range(0..fg.node_count()));
            let b = fg.tree(rng.gen_range(0..fg.node_count()));
            let d = fg.distance(&a, &b).unwrap();
            let paths = bipartite_upper_path(&bp, &a, &b).unwrap();
            for seq in [&paths.via_x, &paths.via_n] {
                assert_eq!(check_sequence(g, &a, seq).unwrap(), b);
                assert!(seq.len() >= d);
            }
            assert!(paths.shorter().len() <= 2 * p * q);
        }
    }
}

#[test]
fn bound_sandwich_over_sampled_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for p in 1..=5 {
        for q in 1..=5 {
            let bp = complete_split(p, q).unwrap();
            let g = &bp.graph;
            let (lower, params) = split_lower_bound(p, q).unwrap();
            let formula = split_diameter(p, q).unwrap();
            // the witnesses, or reversed chains when the graph is a clique
            let (w1, w2) = if q == 1 {
                let order: Vec<usize> = (0..g.n()).collect();
                let rev: Vec<usize> = order.iter().rev().copied().collect();
                (SearchTree::chain(g, &order).unwrap(), SearchTree::chain(g, &rev).unwrap())
            } else {
                let (b1, b2) = split_witnesses(p, q, params).unwrap();
                (b1.to_tree(&bp).unwrap(), b2.to_tree(&bp).unwrap())
            };
            let mut worst = split_path(&bp, &w1, &w2).len();
            for _ in 0..30 {
                let a = SearchTree::random(g, &mut rng).unwrap();
                let b = SearchTree::random(g, &mut rng).unwrap();
                let len = split_path(&bp, &a, &b).len();
                assert!(len <= formula);
                worst = worst.max(len);
            }
            assert!(lower <= formula && formula <= worst, "p={p} q={q}: {lower} {formula} {worst}");
        }
    }
}

#[test]
fn lifting_to_both_brooms_costs_at_most_pq() {
    for p in 1..=3 {
        for q in 1..=3 {
            let bp = complete_bipartite(p, q).unwrap();
            let g = &bp.graph;
            let fg = FlipGraph::build(g).unwrap();
            for id in 0..fg.node_count() {
                let t = fg.tree(id);
                let (x, nn) = xt_nt(&bp, &t).unwrap();
                let (xt, nt) = (x.to_tree(&bp).unwrap(), nn.to_tree(&bp).unwrap());
                let exact = fg.distance(&t, &xt).unwrap() + fg.distance(&t, &nt).unwrap();
                assert!(exact <= p * q, "p={p} q={q} tree {t:?}");
                let (end_x, sx) = lift_group(g, &t, &x.handle, bp.p_set()).unwrap();
                let (end_n, sn) = lift_group(g, &t, &nn.handle, bp.q_set()).unwrap();
                assert_eq!((end_x, end_n), (xt, nt));
                assert_eq!(sx.len() + sn.len(), p * q);
            }
        }
    }
}

#[test]
fn alternating_handle_example() {
    // handle y1 x1 y2 x2 y3 on K(2,3) with the remaining vertex as a leaf
    let bp = complete_bipartite(2, 3).unwrap();
    let order = [bp.y(1), bp.x(1), bp.y(2), bp.x(2), bp.y(3)];
    let t = SearchTree::from_ordering(&bp.graph, &order).unwrap();
    let (x, nn) = xt_nt(&bp, &t).unwrap();
    assert_eq!(x.handle, vec![bp.x(1), bp.x(2)]);
    assert_eq!(nn.handle, vec![bp.y(1), bp.y(2), bp.y(3)]);
    let (_, sx) = lift_group(&bp.graph, &t, &x.handle, bp.p_set()).unwrap();
    let (_, sn) = lift_group(&bp.graph, &t, &nn.handle, bp.q_set()).unwrap();
    assert!(sx.len() + sn.len() <= 6);
}

#[test]
fn bipartite_witnesses_on_k15() {
    let bp = complete_bipartite(1, 5).unwrap();
    let (b1, b2) = bipartite_witnesses(1, 5).unwrap();
    let (t1, t2) = (b1.to_tree(&bp).unwrap(), b2.to_tree(&bp).unwrap());
    assert_eq!(distance(&bp.graph, &t1, &t2).unwrap().distance, 10);
    let paths = bipartite_upper_path(&bp, &t1, &t2).unwrap();
    assert_eq!(paths.shorter().len(), 10);
    assert_eq!(FlipGraph::build(&bp.graph).unwrap().diameter().diameter, 10);
}

#[test]
fn unbalanced_bipartite_constructions_hit_2pq() {
    for p in 1..=3 {
        for q in 4 * p + 1..=4 * p + 6 {
            let bp = complete_bipartite(p, q).unwrap();
            let (b1, b2) = bipartite_witnesses(p, q).unwrap();
            let (t1, t2) = (b1.to_tree(&bp).unwrap(), b2.to_tree(&bp).unwrap());
            let paths = bipartite_upper_path(&bp, &t1, &t2).unwrap();
            assert_eq!(paths.shorter().len(), bipartite_diameter_unbalanced(p, q).unwrap());
        }
    }
}

#[test]
fn small_bipartite_diameters_within_2pq() {
    for p in 1..=3 {
        for q in p..=4 {
            if p + q > 6 {
                continue;
            }
            let g = complete_bipartite(p, q).unwrap().graph;
            let d = FlipGraph::build(&g).unwrap().diameter().diameter;
            assert!(d <= 2 * p * q, "p={p} q={q} d={d}");
        }
    }
}

#[test]
fn wrong_graph_kind_is_rejected() {
    let split = complete_split(2, 3).unwrap();
    let bip = complete_bipartite(2, 3).unwrap();
    let t = SearchTree::canonical_start(&split.graph).unwrap();
    assert!(bipartite_upper_path(&split, &t, &t).is_err());
    let u = SearchTree::canonical_start(&bip.graph).unwrap();
    assert!(split_upper_path(&bip, &u, &u).is_err());
    assert!(split_upper_path_balanced(&complete_split(1, 9).unwrap(), &t, &t).is_err());
    assert!(SplitWitnessParams::new(2, 3, 2, 0).is_err());
    assert!(bipartite_diameter_unbalanced(2, 8).is_err());
}
