//! Simple undirected graphs on dense vertex ids, with bitset adjacency.
//!
//! Vertices are `0..n`. Every graph keeps its adjacency twice: as one
//! [`VertexSet`] row per vertex (used by all the connectivity queries) and as
//! a sorted edge list.

mod generators;
pub mod io;
pub mod small;
pub mod spec;
mod vertex_set;

pub use generators::*;
pub use vertex_set::{Iter as VertexIter, VertexSet, MAX_VERTICES};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate edges are merged; the
    /// orientation of a pair does not matter.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        let edges = adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect();
        Ok(Graph { adj, edges, labels: None })
    }

    /// Attaches display labels. Labels are metadata only.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::InvalidParameter(format!(
                "expected {} labels, got {}",
                self.n(),
                labels.len()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of `v`, falling back to the id.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// The connected component of `G[within]` that contains `v`.
    pub fn component_of(&self, within: VertexSet, v: usize) -> VertexSet {
        debug_assert!(within.contains(v));
        let mut comp = VertexSet::singleton(v);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for u in frontier {
                next = next.union(self.adj[u]);
            }
            frontier = next.intersection(within).difference(comp);
            comp = comp.union(frontier);
        }
        comp
    }

    /// Connected components of `G[within]`, ordered by smallest member.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut rest = within;
        while let Some(v) = rest.first() {
            let c = self.component_of(rest, v);
            rest = rest.difference(c);
            out.push(c);
        }
        out
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// True iff `G[s]` is connected. The empty set is not connected.
    pub fn is_connected_within(&self, s: VertexSet) -> bool {
        match s.first() {
            Some(v) => self.component_of(s, v) == s,
            None => false,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertices())
    }

    /// `G[s]` with vertices renumbered in ascending order. The second value
    /// maps old ids to new ones.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<(Graph, Vec<Option<usize>>)> {
        if s.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let mut map = vec![None; self.n()];
        for (i, v) in s.iter().enumerate() {
            map[v] = Some(i);
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((map[u]?, map[v]?)))
            .collect();
        let mut g = Graph::new(s.len(), &edges)?;
        if let Some(labels) = &self.labels {
            g.labels = Some(s.iter().map(|v| labels[v].clone()).collect());
        }
        Ok((g, map))
    }

    /// `v` is simplicial in `G[within]`: its neighbours there form a clique.
    pub fn is_simplicial_within(&self, within: VertexSet, v: usize) -> bool {
        let nb = self.adj[v].intersection(within);
        nb.iter()
            .all(|u| nb.without(u).is_subset(self.adj[u]))
    }

    pub fn is_simplicial(&self, v: usize) -> bool {
        self.is_simplicial_within(self.vertices(), v)
    }

    /// A perfect elimination ordering found by repeatedly removing the
    /// smallest simplicial vertex, or `None` if the graph is not chordal.
    pub fn perfect_elimination_ordering(&self) -> Option<Vec<usize>> {
        let mut rest = self.vertices();
        let mut order = Vec::with_capacity(self.n());
        while !rest.is_empty() {
            let v = rest.iter().find(|&v| self.is_simplicial_within(rest, v))?;
            order.push(v);
            rest.remove(v);
        }
        debug_assert!(self.is_perfect_elimination_ordering(&order));
        Some(order)
    }

    /// Checks that every vertex's later neighbours form a clique.
    pub fn is_perfect_elimination_ordering(&self, order: &[usize]) -> bool {
        if order.len() != self.n() || order.iter().collect::<VertexSet>() != self.vertices() {
            return false;
        }
        let mut rest = self.vertices();
        for &v in order {
            if !self.is_simplicial_within(rest, v) {
                return false;
            }
            rest.remove(v);
        }
        true
    }

    pub fn is_chordal(&self) -> bool {
        self.perfect_elimination_ordering().is_some()
    }

    /// True if every edge of `self` is an edge of `other` (same vertex ids).
    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n() <= other.n() && self.edges.iter().all(|&(u, v)| other.has_edge(u, v))
    }

    /// Clique number by exhaustive branching. Intended for small graphs.
    pub fn clique_number(&self) -> usize {
        fn grow(g: &Graph, clique: usize, cand: VertexSet) -> usize {
            let mut best = clique;
            let mut cand = cand;
            while let Some(v) = cand.first() {
                if clique + cand.len() <= best {
                    break;
                }
                best = best.max(grow(g, clique + 1, cand.intersection(g.adj[v])));
                cand.remove(v);
            }
            best
        }
        grow(self, 0, self.vertices())
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::new(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn construction_and_dedup() {
        let g = Graph::new(1, &[]).unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
        assert_eq!(p3().m(), 2);
        let g = Graph::new(3, &[(0, 1), (1, 2), (0, 1), (1, 0)]).unwrap();
        assert_eq!(g.m(), 2);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Graph::new(0, &[]), Err(Error::EmptyGraph));
        assert_eq!(Graph::new(2, &[(0, 0)]), Err(Error::SelfLoop(0)));
        assert!(matches!(
            Graph::new(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(matches!(
            Graph::new(129, &[]),
            Err(Error::TooManyVertices { .. })
        ));
    }

    #[test]
    fn connectivity() {
        assert!(p3().is_connected());
        assert!(!Graph::new(2, &[]).unwrap().is_connected());
        assert!(Graph::new(1, &[]).unwrap().is_connected());
        assert!(complete_split(2, 4).unwrap().graph.is_connected());
    }

    #[test]
    fn components() {
        let g = p3();
        let comps = g.components_within(VertexSet::from_iter([0, 2]));
        assert_eq!(comps, vec![VertexSet::singleton(0), VertexSet::singleton(2)]);
        let s = star(4).unwrap();
        let comps = s.components_within(s.vertices().without(0));
        assert_eq!(comps.len(), 4);
        assert_eq!(g.connected_components(), vec![g.vertices()]);
    }

    #[test]
    fn induced() {
        let (h, map) = p3().induced_subgraph(VertexSet::from_iter([0, 1])).unwrap();
        assert_eq!((h.n(), h.m()), (2, 1));
        assert_eq!(map, vec![Some(0), Some(1), None]);
        let k4 = complete(4).unwrap();
        let (k3, _) = k4.induced_subgraph(VertexSet::from_iter([0, 2, 3])).unwrap();
        assert_eq!(k3, complete(3).unwrap());
        let sp = complete_split(2, 4).unwrap();
        let (q, _) = sp.graph.induced_subgraph(sp.q_set()).unwrap();
        assert_eq!((q.n(), q.m()), (4, 0));
        assert_eq!(p3().induced_subgraph(VertexSet::EMPTY), Err(Error::EmptyVertexSet));
    }

    #[test]
    fn simplicial_and_peo() {
        let g = p3();
        assert!(g.is_simplicial(0));
        assert!(!g.is_simplicial(1));
        let k = complete(5).unwrap();
        assert!((0..5).all(|v| k.is_simplicial(v)));
        let order = g.perfect_elimination_ordering().unwrap();
        assert!(order[0] == 0 || order[0] == 2);
        assert_eq!(cycle(4).unwrap().perfect_elimination_ordering(), None);
        assert!(complete_split(2, 4).unwrap().graph.is_chordal());
    }

    #[test]
    fn clique_number_small() {
        assert_eq!(complete(5).unwrap().clique_number(), 5);
        assert_eq!(cycle(5).unwrap().clique_number(), 2);
        assert_eq!(complete_split(3, 2).unwrap().graph.clique_number(), 4);
    }
}
