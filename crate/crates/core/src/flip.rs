//! The rotation graph of search trees and exact distances in it.
//!
//! [`FlipGraph::build`] materializes every search tree with dense ids and a
//! flat adjacency array; [`FlipGraph::diameter`] then runs breadth-first
//! search from every node that could still beat the best eccentricity seen.
//! [`distance`] answers a single query with a bidirectional search that
//! generates neighbours on the fly.

use std::collections::VecDeque;

use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::tree::{count_search_trees, RotationSequence, SearchTree};

/// Size limits for the brute-force searches. Exceeding one is an error,
/// never a truncated answer.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct FlipConfig {
    /// Maximum number of nodes in a materialized rotation graph.
    pub max_nodes: u64,
    /// Rough upper bound on the memory a build may use.
    pub max_memory_bytes: u64,
    /// Maximum number of trees a bidirectional search may store.
    pub max_visited: u64,
}

impl Default for FlipConfig {
    fn default() -> Self {
        FlipConfig { max_nodes: 5_000_000, max_memory_bytes: 8 << 30, max_visited: 20_000_000 }
    }
}

/// Compact hash key of a search tree: 4 bits per vertex when there are at
/// most 16 vertices, the raw parent array otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum TreeKey {
    Packed(u64),
    Wide(Box<[u8]>),
}

impl TreeKey {
    fn of(t: &SearchTree) -> Self {
        let raw = t.raw();
        if raw.len() <= 16 {
            TreeKey::Packed(raw.iter().rev().fold(0u64, |k, &p| k << 4 | p as u64))
        } else {
            TreeKey::Wide(raw.into())
        }
    }

    fn tree(&self, n: usize) -> SearchTree {
        match self {
            TreeKey::Packed(k) => SearchTree::from_raw((0..n).map(|v| (k >> (4 * v) & 0xf) as u8).collect()),
            TreeKey::Wide(raw) => SearchTree::from_raw(raw.to_vec()),
        }
    }
}

/// Every search tree of a graph with its rotation neighbours.
pub struct FlipGraph {
    graph: Graph,
    keys: Vec<TreeKey>,
    index: FxHashMap<TreeKey, u32>,
    /// `degree` neighbour ids per node, node `i` at `i * degree ..`.
    adj: Vec<u32>,
    degree: usize,
}

/// Exact rotation distance with a shortest rotation sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceCertificate {
    pub distance: usize,
    pub witness: RotationSequence,
}

#[derive(Clone, Debug)]
pub struct Diameter {
    pub diameter: usize,
    /// Two trees at distance `diameter`.
    pub pair: (SearchTree, SearchTree),
    /// How many breadth-first searches were needed.
    pub searches: usize,
}

impl std::fmt::Debug for FlipGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FlipGraph")
            .field("vertices", &self.graph.n())
            .field("nodes", &self.keys.len())
            .field("degree", &self.degree)
            .finish()
    }
}

impl FlipGraph {
    pub fn build(g: &Graph) -> Result<Self> {
        Self::build_with(g, &FlipConfig::default())
    }

    pub fn build_with(g: &Graph, cfg: &FlipConfig) -> Result<Self> {
        let count = count_search_trees(g)?;
        let nodes = match u64::try_from(&count) {
            Ok(c) if c <= cfg.max_nodes && c <= u32::MAX as u64 => c,
            _ => {
                return Err(Error::CapExceeded {
                    what: "rotation graph nodes",
                    count: count.to_string(),
                    cap: cfg.max_nodes,
                })
            }
        };
        let n = g.n();
        let degree = n - 1;
        let key_bytes = if n <= 16 { 16 } else { 40 + n as u64 };
        // adjacency, key vector, and the hash index with its load factor
        let estimate = nodes * (4 * degree as u64 + key_bytes + 2 * (key_bytes + 4));
        if estimate > cfg.max_memory_bytes {
            return Err(Error::CapExceeded {
                what: "estimated memory bytes",
                count: estimate.to_string(),
                cap: cfg.max_memory_bytes,
            });
        }
        let mut keys = Vec::with_capacity(nodes as usize);
        let mut index = FxHashMap::default();
        index.reserve(nodes as usize);
        let mut adj = Vec::with_capacity(nodes as usize * degree);
        let start = TreeKey::of(&SearchTree::canonical_start(g)?);
        index.insert(start.clone(), 0);
        keys.push(start);
        let mut i = 0;
        while i < keys.len() {
            let t = keys[i].tree(n);
            for nb in t.neighbors(g) {
                let k = TreeKey::of(&nb);
                let next = keys.len() as u32;
                let id = *index.entry(k.clone()).or_insert_with(|| {
                    keys.push(k);
                    next
                });
                adj.push(id);
            }
            i += 1;
        }
        debug_assert_eq!(keys.len() as u64, nodes);
        Ok(FlipGraph { graph: g.clone(), keys, index, adj, degree })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn node_count(&self) -> usize {
        self.keys.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.len() / 2
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn tree(&self, id: usize) -> SearchTree {
        self.keys[id].tree(self.graph.n())
    }

    pub fn id_of(&self, t: &SearchTree) -> Option<usize> {
        self.index.get(&TreeKey::of(t)).map(|&i| i as usize)
    }

    pub fn neighbors(&self, id: usize) -> &[u32] {
        &self.adj[id * self.degree..(id + 1) * self.degree]
    }

    /// Distances from `id` to every node.
    pub fn bfs(&self, id: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.node_count()];
        let mut queue = VecDeque::with_capacity(1024);
        dist[id] = 0;
        queue.push_back(id as u32);
        while let Some(u) = queue.pop_front() {
            let d = dist[u as usize] + 1;
            for &v in self.neighbors(u as usize) {
                if dist[v as usize] == u32::MAX {
                    dist[v as usize] = d;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    fn require(&self, t: &SearchTree) -> Result<usize> {
        self.id_of(t)
            .ok_or_else(|| Error::InvalidTree("tree is not a search tree of this graph".into()))
    }

    pub fn distances_from(&self, t: &SearchTree) -> Result<Vec<u32>> {
        Ok(self.bfs(self.require(t)?))
    }

    pub fn eccentricity(&self, t: &SearchTree) -> Result<usize> {
        Ok(ecc_far(&self.distances_from(t)?).0 as usize)
    }

    /// Distance between two trees by a full search over the materialized graph.
    pub fn distance(&self, a: &SearchTree, b: &SearchTree) -> Result<usize> {
        let (i, j) = (self.require(a)?, self.require(b)?);
        Ok(self.bfs(i)[j] as usize)
    }

    /// Exact diameter with an antipodal pair.
    ///
    /// A double sweep seeds the best eccentricity; every finished search from
    /// `s` caps `ecc(v) <= ecc(s) + d(s, v)`, and nodes whose cap cannot beat
    /// the best value are never searched from. Batches of sources run in parallel.
    pub fn diameter(&self) -> Diameter {
        let nodes = self.node_count();
        let mut upper = vec![u32::MAX; nodes];
        let mut searched = vec![false; nodes];
        let mut searches = 0;
        let absorb = |dist: &[u32], upper: &mut [u32]| {
            let (e, _) = ecc_far(dist);
            for (u, &d) in upper.iter_mut().zip(dist) {
                *u = (*u).min(e + d);
            }
        };
        let d0 = self.bfs(0);
        let (_, a) = ecc_far(&d0);
        absorb(&d0, &mut upper);
        searched[0] = true;
        let da = self.bfs(a);
        let (mut best, b) = ecc_far(&da);
        let mut pair = (a, b);
        absorb(&da, &mut upper);
        searched[a] = true;
        searches += 2;
        drop((d0, da));

        let threads = rayon::current_num_threads().max(1);
        // keep the per-batch distance arrays within roughly 512 MiB
        let batch = (threads * 2).min((512usize << 20) / (4 * nodes).max(1)).max(1);
        let mut next = 0;
        loop {
            let mut sources = Vec::with_capacity(batch);
            while next < nodes && sources.len() < batch {
                if !searched[next] && upper[next] > best {
                    sources.push(next);
                }
                next += 1;
            }
            if sources.is_empty() {
                break;
            }
            let results: Vec<(usize, Vec<u32>)> =
                sources.par_iter().map(|&s| (s, self.bfs(s))).collect();
            searches += results.len();
            for (s, dist) in results {
                let (e, far) = ecc_far(&dist);
                if e > best {
                    best = e;
                    pair = (s, far);
                }
                absorb(&dist, &mut upper);
                searched[s] = true;
            }
        }
        Diameter { diameter: best as usize, pair: (self.tree(pair.0), self.tree(pair.1)), searches }
    }
}

/// Eccentricity and the first node attaining it.
fn ecc_far(dist: &[u32]) -> (u32, usize) {
    let mut best = (0, 0);
    for (v, &d) in dist.iter().enumerate() {
        debug_assert_ne!(d, u32::MAX, "rotation graph is connected");
        if d > best.0 {
            best = (d, v);
        }
    }
    best
}

/// Replays `seq` from `t`; errors name the first step that cannot be applied.
pub fn check_sequence(g: &Graph, t: &SearchTree, seq: &RotationSequence) -> Result<SearchTree> {
    t.apply(g, seq)
}

/// One side of the bidirectional search: every stored tree with the
/// predecessor it was reached from and the vertex rotated on the way.
struct Side {
    keys: Vec<TreeKey>,
    index: FxHashMap<TreeKey, u32>,
    pred: Vec<(u32, u8)>,
    frontier: Vec<u32>,
    depth: usize,
}

impl Side {
    fn new(t: &SearchTree) -> Self {
        let k = TreeKey::of(t);
        let mut index = FxHashMap::default();
        index.insert(k.clone(), 0);
        Side { keys: vec![k], index, pred: vec![(0, 0)], frontier: vec![0], depth: 0 }
    }

    /// Rotated vertices from the side's start to node `i`.
    fn path_to(&self, mut i: u32) -> Vec<usize> {
        let mut out = Vec::new();
        while i != 0 {
            let (p, v) = self.pred[i as usize];
            out.push(v as usize);
            i = p;
        }
        out.reverse();
        out
    }
}

/// Exact rotation distance by layered bidirectional breadth-first search.
pub fn distance(g: &Graph, t1: &SearchTree, t2: &SearchTree) -> Result<DistanceCertificate> {
    distance_with(g, t1, t2, &FlipConfig::default())
}

pub fn distance_with(
    g: &Graph,
    t1: &SearchTree,
    t2: &SearchTree,
    cfg: &FlipConfig,
) -> Result<DistanceCertificate> {
    t1.validate(g)?;
    t2.validate(g)?;
    if t1 == t2 {
        return Ok(DistanceCertificate { distance: 0, witness: RotationSequence::new() });
    }
    let n = g.n();
    let mut sides = [Side::new(t1), Side::new(t2)];
    loop {
        // grow the side with the smaller frontier by one full layer
        let s = if sides[0].frontier.len() <= sides[1].frontier.len() { 0 } else { 1 };
        let (this, other) = if s == 0 {
            let (a, b) = sides.split_at_mut(1);
            (&mut a[0], &b[0])
        } else {
            let (a, b) = sides.split_at_mut(1);
            (&mut b[0], &a[0])
        };
        let frontier = std::mem::take(&mut this.frontier);
        for &i in &frontier {
            let t = this.keys[i as usize].tree(n);
            let sets = t.subtree_sets();
            for b in 0..n {
                let Some(a) = t.parent(b) else { continue };
                let nb = t.rotate_with(g, &sets, b);
                let k = TreeKey::of(&nb);
                if this.index.contains_key(&k) {
                    continue;
                }
                // backward edges are stored as the rotation that undoes them
                let step = if s == 0 { b } else { a };
                if let Some(&j) = other.index.get(&k) {
                    let mut forward = this.path_to(i);
                    forward.push(step);
                    let back = other.path_to(j);
                    let (head, tail) = if s == 0 { (forward, back) } else { (back, forward) };
                    let witness: Vec<usize> = head.into_iter().chain(tail.into_iter().rev()).collect();
                    return Ok(DistanceCertificate {
                        distance: witness.len(),
                        witness: RotationSequence(witness),
                    });
                }
                let id = this.keys.len() as u32;
                this.index.insert(k.clone(), id);
                this.keys.push(k);
                this.pred.push((i, step as u8));
                this.frontier.push(id);
            }
            let visited = (this.keys.len() + other.keys.len()) as u64;
            if visited > cfg.max_visited {
                return Err(Error::CapExceeded {
                    what: "visited trees",
                    count: visited.to_string(),
                    cap: cfg.max_visited,
                });
            }
        }
        this.depth += 1;
        if this.frontier.is_empty() {
            unreachable!("rotation graph is connected and both trees are valid");
        }
    }
}
