//! Generators for every graph family used by the experiments.
//!
//! Generators that carry extra structure (a bipartition, a shared vertex,
//! the `a_i`/`b_i` naming of the ladder) return a small wrapper type that
//! exposes it alongside the graph.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

pub fn complete(n: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges)
}

pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::new(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid("cycle needs at least 3 vertices"));
    }
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::new(n, &edges)
}

/// Star with centre `0` and leaves `1..=q`.
pub fn star(q: usize) -> Result<Graph> {
    if q == 0 {
        return Err(invalid("star needs at least one leaf"));
    }
    let edges: Vec<_> = (1..=q).map(|v| (0, v)).collect();
    Graph::new(q + 1, &edges)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartKind {
    /// `P` is a clique: the complete split graph.
    Split,
    /// `P` is independent: the complete bipartite graph.
    Bipartite,
}

/// A complete split or complete bipartite graph with its sides.
///
/// `P = {x_1..x_p}` has ids `0..p` and `Q = {y_1..y_q}` has ids `p..p+q`.
#[derive(Clone, Debug)]
pub struct Bipartition {
    pub graph: Graph,
    pub p: usize,
    pub q: usize,
    pub kind: PartKind,
}

impl Bipartition {
    /// Id of `x_i` (1-based).
    pub fn x(&self, i: usize) -> usize {
        debug_assert!((1..=self.p).contains(&i));
        i - 1
    }

    /// Id of `y_j` (1-based).
    pub fn y(&self, j: usize) -> usize {
        debug_assert!((1..=self.q).contains(&j));
        self.p + j - 1
    }

    pub fn p_set(&self) -> VertexSet {
        VertexSet::full(self.p)
    }

    pub fn q_set(&self) -> VertexSet {
        VertexSet::full(self.p + self.q).difference(self.p_set())
    }

    pub fn in_p(&self, v: usize) -> bool {
        v < self.p
    }
}

fn two_sided(p: usize, q: usize, kind: PartKind) -> Result<Bipartition> {
    if p == 0 || q == 0 {
        return Err(invalid("both sides need at least one vertex"));
    }
    let mut edges = Vec::new();
    for x in 0..p {
        for y in p..p + q {
            edges.push((x, y));
        }
        if kind == PartKind::Split {
            for x2 in x + 1..p {
                edges.push((x, x2));
            }
        }
    }
    let labels = (1..=p)
        .map(|i| format!("x{i}"))
        .chain((1..=q).map(|j| format!("y{j}")))
        .collect();
    let graph = Graph::new(p + q, &edges)?.with_labels(labels)?;
    Ok(Bipartition { graph, p, q, kind })
}

/// `SPK_{p,q}`: a `p`-clique joined to an independent set of size `q`.
pub fn complete_split(p: usize, q: usize) -> Result<Bipartition> {
    two_sided(p, q, PartKind::Split)
}

/// `K_{p,q}`.
pub fn complete_bipartite(p: usize, q: usize) -> Result<Bipartition> {
    two_sided(p, q, PartKind::Bipartite)
}

/// `k` cliques of size `s` that pairwise share exactly one vertex.
#[derive(Clone, Debug)]
pub struct GluedCliques {
    pub graph: Graph,
    /// The vertex common to all cliques (always id 0).
    pub shared: usize,
    pub cliques: Vec<VertexSet>,
}

pub fn glued_cliques(k: usize, s: usize) -> Result<GluedCliques> {
    if k == 0 || s < 2 {
        return Err(invalid("glued cliques need k >= 1 and clique size >= 2"));
    }
    let n = k * (s - 1) + 1;
    let mut edges = Vec::new();
    let mut cliques = Vec::with_capacity(k);
    for i in 0..k {
        let members: Vec<usize> = std::iter::once(0)
            .chain((0..s - 1).map(|j| 1 + i * (s - 1) + j))
            .collect();
        for (a, &u) in members.iter().enumerate() {
            for &v in &members[a + 1..] {
                edges.push((u, v));
            }
        }
        cliques.push(members.iter().collect());
    }
    Ok(GluedCliques { graph: Graph::new(n, &edges)?, shared: 0, cliques })
}

/// `t` cliques of size `k` in a row; consecutive cliques share one vertex.
#[derive(Clone, Debug)]
pub struct CliqueChain {
    pub graph: Graph,
    pub cliques: Vec<VertexSet>,
    /// `shared[i]` is the vertex common to cliques `i` and `i + 1`.
    pub shared: Vec<usize>,
}

pub fn clique_chain(k: usize, t: usize) -> Result<CliqueChain> {
    if k < 2 || t == 0 {
        return Err(invalid("clique chain needs k >= 2 and t >= 1"));
    }
    let n = t * (k - 1) + 1;
    let mut edges = Vec::new();
    let mut cliques = Vec::with_capacity(t);
    let mut shared = Vec::with_capacity(t.saturating_sub(1));
    for i in 0..t {
        let start = i * (k - 1);
        let members: Vec<usize> = (start..start + k).collect();
        for (a, &u) in members.iter().enumerate() {
            for &v in &members[a + 1..] {
                edges.push((u, v));
            }
        }
        cliques.push(members.iter().collect());
        if i + 1 < t {
            shared.push(start + k - 1);
        }
    }
    Ok(CliqueChain { graph: Graph::new(n, &edges)?, cliques, shared })
}

/// The pathwidth-two ladder `G_n` on `a_1..a_n`, `b_1..b_n`.
///
/// `a_i` is adjacent to `a_{i+1}`, `b_{i+1}` and `b_i`; `b_i` to `b_{i+1}`.
/// Ids interleave: `a_i = 2(i-1)`, `b_i = 2(i-1)+1`, so the first half of
/// the ladder occupies ids `0..n`.
#[derive(Clone, Debug)]
pub struct Ladder {
    pub graph: Graph,
    pub n: usize,
}

impl Ladder {
    pub fn a(&self, i: usize) -> usize {
        debug_assert!((1..=self.n).contains(&i));
        2 * (i - 1)
    }

    pub fn b(&self, i: usize) -> usize {
        debug_assert!((1..=self.n).contains(&i));
        2 * (i - 1) + 1
    }

    /// `{a_i, b_i : i <= n/2}`.
    pub fn left(&self) -> VertexSet {
        VertexSet::full(2 * (self.n / 2))
    }

    /// `{a_i, b_i : i > n/2}`.
    pub fn right(&self) -> VertexSet {
        self.graph.vertices().difference(self.left())
    }
}

pub fn ladder_pw2(n: usize) -> Result<Ladder> {
    if n < 2 {
        return Err(invalid("ladder needs n >= 2"));
    }
    let a = |i: usize| 2 * (i - 1);
    let b = |i: usize| 2 * (i - 1) + 1;
    let mut edges = Vec::new();
    for i in 1..=n {
        edges.push((a(i), b(i)));
        if i < n {
            edges.push((a(i), a(i + 1)));
            edges.push((a(i), b(i + 1)));
            edges.push((b(i), b(i + 1)));
        }
    }
    let labels = (1..=n)
        .flat_map(|i| [format!("a{i}"), format!("b{i}")])
        .collect();
    let graph = Graph::new(2 * n, &edges)?.with_labels(labels)?;
    Ok(Ladder { graph, n })
}

/// A random connected trivially perfect graph.
///
/// Starts from the empty graph and applies `steps` seeded choices among:
/// add an isolated vertex, add a vertex universal to one existing part, or
/// take the disjoint union of two parts. A final universal vertex over the
/// union of all parts makes the result connected, so `n <= steps + 1`.
pub fn random_tp(seed: u64, steps: usize) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut parts: Vec<VertexSet> = Vec::new();
    let mut edges = Vec::new();
    let mut n = 0usize;
    for _ in 0..steps {
        let rule = if parts.len() >= 2 {
            rng.gen_range(0..3)
        } else if parts.is_empty() {
            0
        } else {
            rng.gen_range(0..2)
        };
        match rule {
            0 => {
                parts.push(VertexSet::singleton(n));
                n += 1;
            }
            1 => {
                let i = rng.gen_range(0..parts.len());
                for u in parts[i] {
                    edges.push((u, n));
                }
                parts[i].insert(n);
                n += 1;
            }
            _ => {
                let i = rng.gen_range(0..parts.len());
                let merged = parts.swap_remove(i);
                let j = rng.gen_range(0..parts.len());
                parts[j] = parts[j].union(merged);
            }
        }
        if n >= super::MAX_VERTICES {
            return Err(invalid("too many steps"));
        }
    }
    for u in 0..n {
        edges.push((u, n));
    }
    Graph::new(n + 1, &edges)
}

/// A random connected graph on `n` vertices: a random spanning tree plus
/// each remaining pair independently with probability `density`.
pub fn random_connected(seed: u64, n: usize, density: f64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        edges.push((order[i], order[j]));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges)
}

/// A random connected cograph on `n` vertices, built from single vertices by
/// seeded disjoint unions and joins; the last operation is always a join.
pub fn random_cograph(seed: u64, n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut parts: Vec<VertexSet> = (0..n).map(VertexSet::singleton).collect();
    let mut edges = Vec::new();
    while parts.len() > 1 {
        let i = rng.gen_range(0..parts.len());
        let a = parts.swap_remove(i);
        let j = rng.gen_range(0..parts.len());
        let b = parts[j];
        if parts.len() == 1 || rng.gen_bool(0.5) {
            for u in a {
                for v in b {
                    edges.push((u, v));
                }
            }
        }
        parts[j] = a.union(b);
    }
    Graph::new(n, &edges)
}
