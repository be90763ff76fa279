use gassoc::graph::io::{parse_edge_list, parse_json, to_edge_list, to_json};
use gassoc::graph::small::{all_connected_graphs, all_graphs, canonical_code};
use gassoc::graph::*;
use gassoc::trivially_perfect::is_trivially_perfect;

/// Induced P4 or C4 among four vertices, by degree sequence.
fn has_p4_or_c4(g: &Graph) -> bool {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let quad = [a, b, c, d];
                    let mut deg = [0; 4];
                    let mut edges = 0;
                    for i in 0..4 {
                        for j in i + 1..4 {
                            if g.has_edge(quad[i], quad[j]) {
                                deg[i] += 1;
                                deg[j] += 1;
                                edges += 1;
                            }
                        }
                    }
                    deg.sort_unstable();
                    if (edges == 3 && deg == [1, 1, 2, 2]) || (edges == 4 && deg == [2, 2, 2, 2]) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

fn brute_clique_number(g: &Graph) -> usize {
    let n = g.n();
    (0u32..1 << n)
        .filter(|mask| {
            let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

#[test]
fn generators_are_connected_and_simple() {
    let mut graphs = vec![];
    for n in 1..=8 {
        graphs.push(complete(n).unwrap());
        graphs.push(path(n).unwrap());
        graphs.push(star(n).unwrap());
    }
    for n in 3..=8 {
        graphs.push(cycle(n).unwrap());
    }
    for p in 1..=4 {
        for q in 1..=4 {
            graphs.push(complete_split(p, q).unwrap().graph);
            graphs.push(complete_bipartite(p, q).unwrap().graph);
        }
    }
    for k in 1..=4 {
        graphs.push(glued_cliques(k, 3).unwrap().graph);
        graphs.push(clique_chain(k + 1, 3).unwrap().graph);
    }
    for n in [2, 4, 8] {
        graphs.push(ladder_pw2(n).unwrap().graph);
    }
    for seed in 0..20 {
        graphs.push(random_tp(seed, 8).unwrap());
        graphs.push(random_connected(seed, 7, 0.3).unwrap());
        graphs.push(random_cograph(seed, 7).unwrap());
    }
    for g in &graphs {
        assert!(g.is_connected());
        for &(u, v) in g.edges() {
            assert!(u < v && v < g.n());
        }
        let mut e = g.edges().to_vec();
        e.dedup();
        assert_eq!(e.len(), g.m());
    }
}

#[test]
fn complete_split_degrees() {
    for p in 1..=8 {
        for q in 1..=8 {
            let bp = complete_split(p, q).unwrap();
            for v in bp.graph.vertices() {
                let expected = if bp.in_p(v) { p - 1 + q } else { p };
                assert_eq!(bp.graph.degree(v), expected, "p={p} q={q} v={v}");
            }
            assert_eq!(bp.graph.m(), p * q + p * (p - 1) / 2);
        }
    }
}

#[test]
fn ladders_are_chordal_with_clique_number_three() {
    for n in 2..=32 {
        let l = ladder_pw2(n).unwrap();
        let peo = l.graph.perfect_elimination_ordering().expect("chordal");
        assert!(l.graph.is_perfect_elimination_ordering(&peo));
        assert_eq!(l.graph.n(), 2 * n);
        assert_eq!(l.graph.m(), 4 * n - 3);
        assert_eq!(l.graph.clique_number(), 3);
    }
}

#[test]
fn clique_chain_counts() {
    for k in 2..=6 {
        for t in 1..=6 {
            let c = clique_chain(k, t).unwrap();
            assert_eq!(c.graph.n(), t * (k - 1) + 1);
            assert_eq!(c.graph.m(), t * k * (k - 1) / 2);
        }
    }
}

#[test]
fn random_tp_has_no_induced_p4_or_c4() {
    for seed in 0..1000 {
        let g = random_tp(seed, 1 + seed as usize % 12).unwrap();
        if g.n() <= 9 {
            assert!(!has_p4_or_c4(&g), "seed {seed}");
        }
        assert!(is_trivially_perfect(&g), "seed {seed}");
    }
}

#[test]
fn recognition_matches_forbidden_subgraphs() {
    for n in 1..=6 {
        for g in all_connected_graphs(n) {
            assert_eq!(is_trivially_perfect(&g), !has_p4_or_c4(&g), "{:?}", g.edges());
        }
    }
}

#[test]
fn clique_number_matches_brute_force() {
    for n in 1..=6 {
        for g in all_graphs(n) {
            assert_eq!(g.clique_number(), brute_clique_number(&g));
        }
    }
}

#[test]
fn small_graph_class_counts() {
    // connected graphs up to isomorphism on 1..=6 vertices
    let counts: Vec<usize> = (1..=6).map(|n| all_connected_graphs(n).len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    let all: Vec<usize> = (1..=5).map(|n| all_graphs(n).len()).collect();
    assert_eq!(all, vec![1, 2, 4, 11, 34]);
    // relabeling keeps the class
    let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    let h = Graph::new(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
    assert_eq!(canonical_code(&g), canonical_code(&h));
}

#[test]
fn io_round_trips() {
    for g in [star(4).unwrap(), ladder_pw2(3).unwrap().graph, complete_split(2, 3).unwrap().graph] {
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap().edges(), g.edges());
        assert_eq!(parse_json(&to_json(&g)).unwrap().edges(), g.edges());
    }
}

#[test]
fn specs_build_what_they_name() {
    let cases = [
        ("star:5", 6, 5),
        ("split:2,4", 6, 9),
        ("bipartite:1,5", 6, 5),
        ("ladder:4", 8, 13),
        ("gluedcliques:2x5", 9, 20),
        ("cliquechain:3x2", 5, 6),
        ("complete:4", 4, 6),
    ];
    for (text, n, m) in cases {
        let g = text.parse::<spec::GraphSpec>().unwrap().build().unwrap();
        assert_eq!((g.n(), g.m()), (n, m), "{text}");
    }
}
