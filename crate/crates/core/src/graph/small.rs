//! Exhaustive generation of small graphs up to isomorphism.
//!
//! Canonical forms are computed by brute force over all vertex
//! permutations, so this is only meant for `n <= 7`.

use std::collections::BTreeSet;

use super::Graph;

/// Largest vertex count accepted by [`all_graphs`].
pub const MAX_SMALL: usize = 7;

fn pair_index(u: usize, v: usize) -> usize {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    v * (v - 1) / 2 + u
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Smallest edge code over all relabelings.
fn canonical(n: usize, adj: &[u8], perms: &[Vec<usize>]) -> u32 {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).filter(move |&v| adj[u] >> v & 1 == 1).map(move |v| (u, v)))
        .collect();
    perms
        .iter()
        .map(|p| {
            edges
                .iter()
                .fold(0u32, |c, &(u, v)| c | 1 << pair_index(p[u], p[v]))
        })
        .min()
        .unwrap_or(0)
}

fn decode(n: usize, code: u32) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if code >> pair_index(u, v) & 1 == 1 {
                edges.push((u, v));
            }
        }
    }
    edges
}

/// Canonical edge codes of all graphs on `n` vertices, one per isomorphism
/// class. Built by extending every class on `n - 1` vertices with a new
/// vertex attached to every possible neighbour subset.
fn classes(n: usize) -> BTreeSet<u32> {
    if n <= 1 {
        return BTreeSet::from([0]);
    }
    let perms = permutations(n);
    let mut out = BTreeSet::new();
    for code in classes(n - 1) {
        let mut adj = vec![0u8; n];
        for (u, v) in decode(n - 1, code) {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        for nb in 0u32..(1 << (n - 1)) {
            let mut a = adj.clone();
            for u in 0..n - 1 {
                if nb >> u & 1 == 1 {
                    a[u] |= 1 << (n - 1);
                    a[n - 1] |= 1 << u;
                }
            }
            out.insert(canonical(n, &a, &perms));
        }
    }
    out
}

/// One representative of every isomorphism class of graphs on `n` vertices.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=MAX_SMALL).contains(&n), "small graph enumeration needs 1 <= n <= {MAX_SMALL}");
    classes(n)
        .into_iter()
        .map(|code| Graph::new(n, &decode(n, code)).expect("valid edges"))
        .collect()
}

/// One representative of every isomorphism class of connected graphs on `n` vertices.
pub fn all_connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}

/// Canonical code of a graph with at most [`MAX_SMALL`] vertices; equal
/// codes (for equal `n`) mean isomorphic graphs.
pub fn canonical_code(g: &Graph) -> u32 {
    let n = g.n();
    assert!(n <= MAX_SMALL);
    let adj: Vec<u8> = (0..n).map(|v| g.neighbors(v).bits() as u8).collect();
    canonical(n, &adj, &permutations(n))
}
