//! Closed-form diameter bounds, the witnesses and invariants behind the
//! pathwidth-two lower bound, and the theorem checks in [`verify`].

mod verify;

pub use verify::{verify, verify_all, Check, VerifyConfig, VerifyReport, LADDER_WITNESS_DISTANCES, THEOREM_IDS};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::flip::{FlipConfig, FlipGraph};
use crate::graph::spec::GraphSpec;
use crate::graph::{ladder_pw2, Graph, Ladder, VertexSet};
use crate::tree::{tree_depth, SearchTree};

/// The bit-reversal permutation of length `2^(k-1)`, values `1..=n`:
/// `(1)` for `k = 1`, then `2s - 1` followed by `2s` for the previous `s`.
pub fn bit_reversal(k: usize) -> Result<Vec<usize>> {
    if k == 0 || k > 24 {
        return Err(Error::InvalidParameter(format!("bit reversal order must be in 1..=24, got {k}")));
    }
    let mut s = vec![1];
    for _ in 1..k {
        let odd = s.iter().map(|&v| 2 * v - 1);
        let even = s.iter().map(|&v| 2 * v);
        s = odd.chain(even).collect();
    }
    Ok(s)
}

/// A split of the vertices into two colour classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwoColoring {
    pub left: VertexSet,
    pub right: VertexSet,
}

impl TwoColoring {
    pub fn new(g: &Graph, left: VertexSet) -> Result<Self> {
        if !left.is_subset(g.vertices()) {
            return Err(Error::InvalidParameter("colour class outside the graph".into()));
        }
        Ok(TwoColoring { left, right: g.vertices().difference(left) })
    }

    /// Left half `{a_i, b_i : i <= n/2}` of the ladder.
    pub fn of_ladder(ladder: &Ladder) -> Self {
        TwoColoring { left: ladder.left(), right: ladder.right() }
    }

    pub fn same_colour(&self, u: usize, v: usize) -> bool {
        self.left.contains(u) == self.left.contains(v)
    }
}

/// Maximum number of bichromatic edges on a root-to-leaf path.
pub fn alternation_number(t: &SearchTree, c: &TwoColoring) -> usize {
    let mut best = vec![None; t.len()];
    fn count(t: &SearchTree, c: &TwoColoring, v: usize, memo: &mut [Option<usize>]) -> usize {
        if let Some(x) = memo[v] {
            return x;
        }
        let x = match t.parent(v) {
            None => 0,
            Some(p) => count(t, c, p, memo) + usize::from(!c.same_colour(p, v)),
        };
        memo[v] = Some(x);
        x
    }
    (0..t.len()).map(|v| count(t, c, v, &mut best)).max().unwrap_or(0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RotationColour {
    Monochromatic,
    Bichromatic,
}

/// Colour type of the rotation at `b`, judged by `b` and its parent.
pub fn classify_rotation(t: &SearchTree, b: usize, c: &TwoColoring) -> Result<RotationColour> {
    let a = t.parent(b).ok_or(Error::RotateRoot { vertex: b })?;
    Ok(if c.same_colour(a, b) { RotationColour::Monochromatic } else { RotationColour::Bichromatic })
}

/// The two chains on the ladder with `n = 2^(k-1)` rungs: `a_1, b_1, a_2,
/// b_2, ..` and `a_s(1), .., a_s(n), b_1, .., b_n` for the bit-reversal `s`.
pub fn pw2_witness_trees(n: usize) -> Result<(Ladder, SearchTree, SearchTree)> {
    if n < 2 || !n.is_power_of_two() {
        return Err(Error::InvalidParameter(format!("ladder witnesses need a power of two >= 2, got {n}")));
    }
    let ladder = ladder_pw2(n)?;
    let k = n.trailing_zeros() as usize + 1;
    let sigma = bit_reversal(k)?;
    let first: Vec<usize> = (1..=n).flat_map(|i| [ladder.a(i), ladder.b(i)]).collect();
    let second: Vec<usize> = sigma
        .iter()
        .map(|&i| ladder.a(i))
        .chain((1..=n).map(|i| ladder.b(i)))
        .collect();
    let t = SearchTree::chain(&ladder.graph, &first)?;
    let t2 = SearchTree::chain(&ladder.graph, &second)?;
    Ok((ladder, t, t2))
}

/// `(max{m, 2n - 20}, C(n,2))`.
pub fn mp_bounds(g: &Graph) -> (i64, usize) {
    let n = g.n() as i64;
    let lower = (g.m() as i64).max(2 * n - 20);
    (lower, g.n() * g.n().saturating_sub(1) / 2)
}

/// `2 td n`.
pub fn td_bound(n: usize, td: usize) -> usize {
    2 * td * n
}

/// `ceil(c tw n log2 n)`. The constant is unknown, so this value is only
/// indicative and never asserted.
pub fn tw_bound(n: usize, tw: usize, c: f64) -> usize {
    (c * tw as f64 * n as f64 * (n as f64).log2()).ceil() as usize
}

/// Treewidth and pathwidth of the generated families where they are known.
pub fn known_widths(spec: &GraphSpec) -> (Option<usize>, Option<usize>) {
    let both = |w| (Some(w), Some(w));
    match *spec {
        GraphSpec::Complete(n) => both(n.saturating_sub(1)),
        GraphSpec::Path(n) => both(usize::from(n > 1)),
        GraphSpec::Star(_) => both(1),
        GraphSpec::Cycle(_) | GraphSpec::Ladder(_) => both(2),
        GraphSpec::Split(p, _) => both(p),
        GraphSpec::Bipartite(p, q) => both(p.min(q)),
        GraphSpec::GluedCliques(_, s) => both(s - 1),
        GraphSpec::CliqueChain(k, _) => both(k - 1),
        _ => (None, None),
    }
}

/// One row of the bounds table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub lower: i64,
    pub upper: usize,
    pub td: Option<usize>,
    pub td_bound: Option<usize>,
    pub tw: Option<usize>,
    pub pw: Option<usize>,
    /// `tw_bound` with `c = 1`; indicative only.
    pub tw_bound: Option<usize>,
    pub exact: Option<usize>,
}

impl BoundReport {
    /// `lower <= exact <= min(upper, td_bound)` whenever the exact value is known.
    pub fn consistent(&self) -> bool {
        match self.exact {
            None => true,
            Some(d) => {
                self.lower <= d as i64 && d <= self.upper && self.td_bound.is_none_or(|b| d <= b)
            }
        }
    }
}

/// Bounds for each family; the exact diameter is filled in when the
/// rotation graph fits under `cfg`.
pub fn families_table(specs: &[GraphSpec], cfg: &FlipConfig) -> Result<Vec<BoundReport>> {
    specs
        .iter()
        .map(|spec| {
            let g = spec.build()?;
            let (lower, upper) = mp_bounds(&g);
            let td = if g.n() <= 16 { Some(tree_depth(&g)?) } else { None };
            let (tw, pw) = known_widths(spec);
            let exact = match FlipGraph::build_with(&g, cfg) {
                Ok(fg) => Some(fg.diameter().diameter),
                Err(e) if e.is_cap() => None,
                Err(e) => return Err(e),
            };
            let row = BoundReport {
                graph: spec.to_string(),
                n: g.n(),
                m: g.m(),
                lower,
                upper,
                td,
                td_bound: td.map(|t| td_bound(g.n(), t)),
                tw,
                pw,
                tw_bound: tw.map(|w| tw_bound(g.n(), w.max(1), 1.0)),
                exact,
            };
            Ok(row)
        })
        .collect()
}

/// Exact diameters of `g` and `h`, and whether they are ordered as the
/// subgraph relation requires. `g` must be a subgraph of `h`.
pub fn monotonicity_check(g: &Graph, h: &Graph, cfg: &FlipConfig) -> Result<(usize, usize, bool)> {
    if !g.is_subgraph_of(h) {
        return Err(Error::InvalidParameter("first graph is not a subgraph of the second".into()));
    }
    let a = FlipGraph::build_with(g, cfg)?.diameter().diameter;
    let b = FlipGraph::build_with(h, cfg)?.diameter().diameter;
    Ok((a, b, a <= b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path, star};
    use crate::tree::project_tree;

    #[test]
    fn bit_reversal_listings() {
        assert_eq!(bit_reversal(1).unwrap(), vec![1]);
        assert_eq!(bit_reversal(2).unwrap(), vec![1, 2]);
        assert_eq!(bit_reversal(3).unwrap(), vec![1, 3, 2, 4]);
        assert_eq!(bit_reversal(4).unwrap(), vec![1, 5, 3, 7, 2, 6, 4, 8]);
        assert_eq!(
            bit_reversal(5).unwrap(),
            vec![1, 9, 5, 13, 3, 11, 7, 15, 2, 10, 6, 14, 4, 12, 8, 16]
        );
    }

    #[test]
    fn bit_reversal_alternates() {
        for k in 2..=12 {
            let s = bit_reversal(k).unwrap();
            let n = s.len();
            let mut sorted = s.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, (1..=n).collect::<Vec<_>>());
            for (i, &v) in s.iter().enumerate() {
                // 0-based even positions are the odd 1-based ones
                assert_eq!(i % 2 == 0, v <= n / 2, "k={k} i={i}");
            }
        }
    }

    #[test]
    fn witnesses_and_alternation() {
        for n in [2, 4, 8, 16] {
            let (ladder, t, t2) = pw2_witness_trees(n).unwrap();
            let c = TwoColoring::of_ladder(&ladder);
            assert_eq!(alternation_number(&t, &c), 1);
            assert_eq!(alternation_number(&t2, &c), n + 1);
        }
        assert!(pw2_witness_trees(6).is_err());
        assert!(pw2_witness_trees(1).is_err());
    }

    #[test]
    fn witnesses_project_to_half_size_witnesses() {
        for n in [4, 8, 16] {
            let (ladder, t, t2) = pw2_witness_trees(n).unwrap();
            let (_, small, small2) = pw2_witness_trees(n / 2).unwrap();
            let g = &ladder.graph;
            assert_eq!(project_tree(g, &t, ladder.left()).unwrap(), small);
            assert_eq!(project_tree(g, &t2, ladder.left()).unwrap(), small2);
            // the right half is the same ladder shifted by n ids
            assert_eq!(project_tree(g, &t, ladder.right()).unwrap(), small);
            assert_eq!(project_tree(g, &t2, ladder.right()).unwrap(), small2);
        }
    }

    #[test]
    fn monochromatic_tree_has_zero_alternation() {
        let g = path(4).unwrap();
        let t = SearchTree::canonical_start(&g).unwrap();
        let c = TwoColoring::new(&g, g.vertices()).unwrap();
        assert_eq!(alternation_number(&t, &c), 0);
        assert_eq!(classify_rotation(&t, 1, &c).unwrap(), RotationColour::Monochromatic);
        let c = TwoColoring::new(&g, [0usize].iter().collect()).unwrap();
        assert_eq!(classify_rotation(&t, 1, &c).unwrap(), RotationColour::Bichromatic);
        assert!(classify_rotation(&t, 0, &c).is_err());
    }

    #[test]
    fn formula_values() {
        assert_eq!(mp_bounds(&complete(4).unwrap()), (6, 6));
        assert_eq!(mp_bounds(&star(5).unwrap()), (5, 15));
        assert_eq!(td_bound(6, 2), 24);
        assert_eq!(tw_bound(8, 2, 1.0), 48);
        // 2n - 20 dominates only for sparse graphs on more than 20 vertices
        assert_eq!(mp_bounds(&path(30).unwrap()).0, 40);
    }

    #[test]
    fn monotonicity_examples() {
        let cfg = FlipConfig::default();
        assert_eq!(monotonicity_check(&path(3).unwrap(), &complete(3).unwrap(), &cfg).unwrap(), (2, 3, true));
        let k = complete(4).unwrap();
        assert_eq!(monotonicity_check(&k, &k, &cfg).unwrap(), (6, 6, true));
        assert!(monotonicity_check(&complete(3).unwrap(), &path(3).unwrap(), &cfg).is_err());
    }

    #[test]
    fn table_rows_are_consistent() {
        let specs: Vec<GraphSpec> = ["star:5", "complete:4", "gluedcliques:2x3", "cliquechain:3x2", "ladder:2"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        let rows = families_table(&specs, &FlipConfig::default()).unwrap();
        assert_eq!(rows[0].exact, Some(10));
        assert_eq!(rows[1].exact, Some(6));
        assert!(rows.iter().all(BoundReport::consistent));
        assert_eq!(rows[2].td, Some(3));
        assert_eq!(rows[3].pw, Some(2));
    }
}
