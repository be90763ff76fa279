//! Search trees (elimination trees) on a graph and rotations between them.
//!
//! A search tree on a connected graph `G` is rooted at some vertex `r` whose
//! children root search trees on the connected components of `G - r`. The
//! vertex set of every subtree is a tube, and the rotation graph of search
//! trees is the skeleton of the graph associahedron.
//!
//! [`SearchTree`] does not hold on to its graph: operations that need
//! adjacency take the graph as an argument.

mod depth;
mod enumerate;
pub mod format;
mod projection;
mod tubing;

pub use depth::{tree_depth, tree_depth_with_cap, DEFAULT_TREE_DEPTH_CAP};
pub use enumerate::{count_search_trees, enumerate_search_trees, for_each_search_tree};
pub use projection::{is_convex, project_sequence, project_tree, project_tree_with_order};
pub use tubing::{is_valid_tubing, Tubing};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A rooted tree on `0..n`, stored as a parent array with the root pointing
/// at itself. Equality and hashing are array equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SearchTree {
    parent: Vec<u8>,
}

/// A rotation resolved against a particular tree: `child` is rotated above
/// its current `parent`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rotation {
    pub parent: usize,
    pub child: usize,
}

/// A sequence of rotations, each named by the child vertex that moves up.
/// The parent is whatever the child's parent is when the step is replayed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RotationSequence(pub Vec<usize>);

impl RotationSequence {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, child: usize) {
        self.0.push(child);
    }

    pub fn extend(&mut self, other: &RotationSequence) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn steps(&self) -> &[usize] {
        &self.0
    }

    /// Replays the sequence from `start`, returning the final tree and the
    /// resolved `(parent, child)` pairs.
    pub fn replay(&self, g: &Graph, start: &SearchTree) -> Result<(SearchTree, Vec<Rotation>)> {
        let mut t = start.clone();
        let mut resolved = Vec::with_capacity(self.len());
        for (step, &b) in self.0.iter().enumerate() {
            if b >= t.len() {
                return Err(Error::SequenceVertex { step, vertex: b });
            }
            let Some(a) = t.parent(b) else {
                return Err(Error::SequenceRoot { step, vertex: b });
            };
            resolved.push(Rotation { parent: a, child: b });
            t = t.rotate(g, b)?;
        }
        Ok((t, resolved))
    }

    /// The sequence that undoes this one: replayed from the end tree it
    /// returns to `start`. Each step is inverted by rotating the vertex that
    /// was the parent of the moved child.
    pub fn inverse(&self, g: &Graph, start: &SearchTree) -> Result<RotationSequence> {
        let (_, resolved) = self.replay(g, start)?;
        Ok(RotationSequence(resolved.iter().rev().map(|r| r.parent).collect()))
    }
}

impl From<Vec<usize>> for RotationSequence {
    fn from(v: Vec<usize>) -> Self {
        RotationSequence(v)
    }
}

/// A permutation of the vertices, read as the order in which roots are picked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationOrdering(pub Vec<usize>);

impl SearchTree {
    /// Builds a tree from `parents[v]` (`None` for the root). Checks only
    /// that it is a rooted spanning tree; use [`SearchTree::is_valid`] for
    /// the search-tree conditions.
    pub fn from_parents(parents: &[Option<usize>]) -> Result<Self> {
        let n = parents.len();
        if n == 0 {
            return Err(Error::InvalidTree("no vertices".into()));
        }
        if n > u8::MAX as usize {
            return Err(Error::TooManyVertices { n, max: u8::MAX as usize });
        }
        let roots: Vec<usize> = (0..n).filter(|&v| parents[v].is_none()).collect();
        if roots.len() != 1 {
            return Err(Error::InvalidTree(format!("expected exactly one root, found {}", roots.len())));
        }
        let mut parent = vec![0u8; n];
        for (v, p) in parents.iter().enumerate() {
            let p = p.unwrap_or(v);
            if p >= n || (p == v && parents[v].is_some()) {
                return Err(Error::InvalidTree(format!("bad parent {p} for vertex {v}")));
            }
            parent[v] = p as u8;
        }
        let t = SearchTree { parent };
        // every vertex must reach the root
        for v in 0..n {
            let mut u = v;
            let mut steps = 0;
            while let Some(p) = t.parent(u) {
                u = p;
                steps += 1;
                if steps > n {
                    return Err(Error::InvalidTree("parent links contain a cycle".into()));
                }
            }
        }
        Ok(t)
    }

    /// Builds the tree from a raw parent array with the root pointing at itself.
    pub(crate) fn from_raw(parent: Vec<u8>) -> Self {
        SearchTree { parent }
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.parent
    }

    /// Recursive construction from an ordering: within each component, the
    /// first vertex of `order` becomes the root. Every permutation yields a
    /// valid search tree on a connected graph.
    pub fn from_ordering(g: &Graph, order: &[usize]) -> Result<Self> {
        let n = g.n();
        if order.len() != n || order.iter().collect::<VertexSet>() != g.vertices() {
            return Err(Error::InvalidParameter("ordering is not a permutation of the vertices".into()));
        }
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut rank = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            rank[v] = i;
        }
        let mut parent = vec![0u8; n];
        let mut stack: Vec<(VertexSet, usize)> = Vec::new();
        let root = order[0];
        parent[root] = root as u8;
        for c in g.components_within(g.vertices().without(root)) {
            stack.push((c, root));
        }
        while let Some((set, above)) = stack.pop() {
            let r = set.iter().min_by_key(|&v| rank[v]).expect("nonempty component");
            parent[r] = above as u8;
            for c in g.components_within(set.without(r)) {
                stack.push((c, r));
            }
        }
        Ok(SearchTree { parent })
    }

    /// Tree built from a uniformly random ordering. Not uniform over trees.
    pub fn random<R: rand::Rng + ?Sized>(g: &Graph, rng: &mut R) -> Result<Self> {
        use rand::seq::SliceRandom;
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.shuffle(rng);
        Self::from_ordering(g, &order)
    }

    /// The tree obtained from the identity ordering `0, 1, .., n-1`.
    pub fn canonical_start(g: &Graph) -> Result<Self> {
        let order: Vec<usize> = (0..g.n()).collect();
        Self::from_ordering(g, &order)
    }

    /// A path `order[0] -> order[1] -> ...`; fails unless it is a valid search tree on `g`.
    pub fn chain(g: &Graph, order: &[usize]) -> Result<Self> {
        let n = order.len();
        if n != g.n() {
            return Err(Error::InvalidParameter("chain must list every vertex".into()));
        }
        let mut parents = vec![None; n];
        for w in order.windows(2) {
            parents[w[1]] = Some(w[0]);
        }
        let t = Self::from_parents(&parents)?;
        if !t.is_valid(g) {
            return Err(Error::InvalidTree(format!("chain {order:?} is not a search tree")));
        }
        Ok(t)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.parent.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn root(&self) -> usize {
        (0..self.len())
            .find(|&v| self.parent[v] as usize == v)
            .expect("tree has a root")
    }

    #[inline]
    pub fn parent(&self, v: usize) -> Option<usize> {
        let p = self.parent[v] as usize;
        (p != v).then_some(p)
    }

    pub fn parents(&self) -> Vec<Option<usize>> {
        (0..self.len()).map(|v| self.parent(v)).collect()
    }

    /// Children of `v` in ascending order.
    pub fn children(&self, v: usize) -> Vec<usize> {
        (0..self.len()).filter(|&c| c != v && self.parent[c] as usize == v).collect()
    }

    pub fn children_lists(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.len()];
        for v in 0..self.len() {
            if let Some(p) = self.parent(v) {
                out[p].push(v);
            }
        }
        out
    }

    /// Number of edges from `v` up to the root.
    pub fn depth(&self, v: usize) -> usize {
        let mut d = 0;
        let mut u = v;
        while let Some(p) = self.parent(u) {
            u = p;
            d += 1;
        }
        d
    }

    pub fn depths(&self) -> Vec<usize> {
        (0..self.len()).map(|v| self.depth(v)).collect()
    }

    /// Number of vertices on a longest root-to-leaf path; a single vertex has height one.
    pub fn height(&self) -> usize {
        self.depths().into_iter().max().map_or(0, |d| d + 1)
    }

    /// `u` is a proper ancestor of `v`.
    pub fn is_ancestor(&self, u: usize, v: usize) -> bool {
        let mut w = v;
        while let Some(p) = self.parent(w) {
            if p == u {
                return true;
            }
            w = p;
        }
        false
    }

    /// Vertex sets of all subtrees, indexed by subtree root.
    pub fn subtree_sets(&self) -> Vec<VertexSet> {
        let n = self.len();
        let depths = self.depths();
        let mut by_depth: Vec<usize> = (0..n).collect();
        by_depth.sort_by_key(|&v| std::cmp::Reverse(depths[v]));
        let mut sets: Vec<VertexSet> = (0..n).map(VertexSet::singleton).collect();
        for v in by_depth {
            if let Some(p) = self.parent(v) {
                sets[p] = sets[p].union(sets[v]);
            }
        }
        sets
    }

    pub fn subtree(&self, v: usize) -> VertexSet {
        (0..self.len())
            .filter(|&u| u == v || self.is_ancestor(v, u))
            .collect()
    }

    /// Checks every search-tree condition: a spanning rooted tree whose
    /// subtrees induce connected subgraphs, and whose children at each vertex
    /// root exactly the components left after removing that vertex.
    pub fn is_valid(&self, g: &Graph) -> bool {
        self.validate(g).is_ok()
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.n();
        if self.len() != n {
            return Err(Error::InvalidTree(format!("tree has {} vertices, graph has {n}", self.len())));
        }
        // re-run the structural checks in case the tree was built unchecked
        SearchTree::from_parents(&self.parents())?;
        let sets = self.subtree_sets();
        let children = self.children_lists();
        for v in 0..n {
            if !g.is_connected_within(sets[v]) {
                return Err(Error::InvalidTree(format!("subtree of {v} is not connected")));
            }
            let mut comps = g.components_within(sets[v].without(v));
            let mut kids: Vec<VertexSet> = children[v].iter().map(|&c| sets[c]).collect();
            comps.sort();
            kids.sort();
            if comps != kids {
                return Err(Error::InvalidTree(format!(
                    "children of {v} do not match the components below it"
                )));
            }
        }
        Ok(())
    }

    /// Rotation at `b`: `b` takes the place of its parent `a`, and `a`
    /// becomes the root of the component of `G[A] - b` containing it, where
    /// `A` is the subtree of `a`. Children of `b` lying in that component
    /// move under `a`; everything else is unchanged.
    pub fn rotate(&self, g: &Graph, b: usize) -> Result<SearchTree> {
        if b >= self.len() {
            return Err(Error::InvalidParameter(format!("vertex {b} out of range")));
        }
        if self.parent(b).is_none() {
            return Err(Error::RotateRoot { vertex: b });
        }
        Ok(self.rotate_with(g, &self.subtree_sets(), b))
    }

    pub(crate) fn rotate_with(&self, g: &Graph, sets: &[VertexSet], b: usize) -> SearchTree {
        let a = self.parent[b] as usize;
        debug_assert_ne!(a, b);
        let keep = g.component_of(sets[a].without(b), a);
        let mut parent = self.parent.clone();
        let above = self.parent[a];
        parent[b] = if above as usize == a { b as u8 } else { above };
        parent[a] = b as u8;
        for c in 0..self.len() {
            if c != b && self.parent[c] as usize == b && sets[c].intersects(keep) {
                parent[c] = a as u8;
            }
        }
        SearchTree { parent }
    }

    /// All trees one rotation away, ordered by the rotated vertex.
    pub fn neighbors(&self, g: &Graph) -> Vec<SearchTree> {
        let sets = self.subtree_sets();
        (0..self.len())
            .filter(|&b| self.parent(b).is_some())
            .map(|b| self.rotate_with(g, &sets, b))
            .collect()
    }

    /// Rotations that bring `v` to the root: `v` repeated `depth(v)` times.
    pub fn lift_to_root(&self, v: usize) -> RotationSequence {
        RotationSequence(vec![v; self.depth(v)])
    }

    /// A random walk of `len` rotations, each at a uniformly chosen non-root
    /// vertex. Returns the walk and the tree it ends at.
    pub fn random_walk<R: rand::Rng + ?Sized>(
        &self,
        g: &Graph,
        len: usize,
        rng: &mut R,
    ) -> (RotationSequence, SearchTree) {
        let mut seq = RotationSequence::new();
        let mut t = self.clone();
        if self.len() < 2 {
            return (seq, t);
        }
        for _ in 0..len {
            let root = t.root();
            let mut b = rng.gen_range(0..self.len() - 1);
            if b >= root {
                b += 1;
            }
            t = t.rotate_with(g, &t.subtree_sets(), b);
            seq.push(b);
        }
        (seq, t)
    }

    /// Applies `seq` and returns the final tree.
    pub fn apply(&self, g: &Graph, seq: &RotationSequence) -> Result<SearchTree> {
        seq.replay(g, self).map(|(t, _)| t)
    }

    /// Tubing made of the subtree sets, including the full vertex set.
    pub fn to_tubing(&self) -> Tubing {
        Tubing::new(self.subtree_sets())
    }

    /// Vertices in breadth-first order from the root, ties by ascending id.
    pub fn bfs_order(&self) -> Vec<usize> {
        let children = self.children_lists();
        let mut out = vec![self.root()];
        let mut i = 0;
        while i < out.len() {
            out.extend_from_slice(&children[out[i]]);
            i += 1;
        }
        out
    }

    /// True if every vertex has at most one child.
    pub fn is_chain(&self) -> bool {
        self.children_lists().iter().all(|c| c.len() <= 1)
    }
}

impl std::fmt::Debug for SearchTree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", format::to_text(self))
    }
}
