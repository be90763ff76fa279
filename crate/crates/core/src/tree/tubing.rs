use crate::graph::{Graph, VertexSet};

/// A set of tubes, kept sorted so that equal tubings compare equal.
///
/// The tubing of a search tree contains one tube per vertex, the root's tube
/// being the whole vertex set. Some authors leave that trivial tube out; we
/// keep it so that a tree on `n` vertices always has `n` tubes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tubing {
    tubes: Vec<VertexSet>,
}

impl Tubing {
    pub fn new(mut tubes: Vec<VertexSet>) -> Self {
        tubes.sort();
        tubes.dedup();
        Tubing { tubes }
    }

    pub fn tubes(&self) -> &[VertexSet] {
        &self.tubes
    }

    pub fn len(&self) -> usize {
        self.tubes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tubes.is_empty()
    }

    pub fn contains(&self, tube: VertexSet) -> bool {
        self.tubes.binary_search(&tube).is_ok()
    }

    /// Number of tubes in exactly one of the two tubings.
    pub fn symmetric_difference(&self, other: &Tubing) -> usize {
        let only_self = self.tubes.iter().filter(|t| !other.contains(**t)).count();
        let only_other = other.tubes.iter().filter(|t| !self.contains(**t)).count();
        only_self + only_other
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        is_valid_tubing(g, &self.tubes)
    }
}

/// Every tube is nonempty and connected, and every pair is nested or
/// non-adjacent (their union is disconnected).
pub fn is_valid_tubing(g: &Graph, tubes: &[VertexSet]) -> bool {
    let all = g.vertices();
    if !tubes.iter().all(|&t| t.is_subset(all) && g.is_connected_within(t)) {
        return false;
    }
    for (i, &s) in tubes.iter().enumerate() {
        for &t in &tubes[i + 1..] {
            let nested = s.is_subset(t) || t.is_subset(s);
            if !nested && g.is_connected_within(s.union(t)) {
                return false;
            }
        }
    }
    true
}
