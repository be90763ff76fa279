//! Named theorem checks run at a configurable scale.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::{alternation_number, classify_rotation, mp_bounds, pw2_witness_trees, td_bound, RotationColour, TwoColoring};
use crate::error::{Error, Result};
use crate::flip::{self, FlipConfig, FlipGraph};
use crate::graph::small::all_connected_graphs;
use crate::graph::{
    clique_chain, complete_bipartite, complete_split, glued_cliques, ladder_pw2, random_connected, random_tp, star,
    Graph, VertexSet,
};
use crate::split::{
    bipartite_upper_path, bipartite_witnesses, choose_witness_params, f_eval, lift_group, split_diameter,
    split_lower_bound, split_upper_path, split_upper_path_balanced, split_witnesses, xt_nt,
};
use crate::tree::{project_sequence, project_tree, tree_depth, SearchTree};
use crate::trivially_perfect::{tp_path, tp_transform};

pub const THEOREM_IDS: &[&str] = &[
    "csga",
    "l2cb-witness",
    "l3sp",
    "lemme-dist-sp",
    "mlb",
    "monot",
    "mtp",
    "p1cb",
    "projection",
    "pw2lb-invariants",
    "pwcliques",
    "stello",
    "tdlb",
    "tdub",
    "teo1-sp",
    "teo1tp",
    "teo2tp",
];

/// Exact rotation distance between the two ladder witnesses, by ladder
/// size, found by bidirectional search.
pub const LADDER_WITNESS_DISTANCES: &[(usize, usize)] = &[(2, 1), (4, 7)];

/// Sample sizes and limits. `scale` multiplies every sampled count; the
/// exhaustive grids are fixed.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct VerifyConfig {
    pub scale: f64,
    pub seed: u64,
    pub flip: FlipConfig,
    /// Random connected graphs added to the exhaustive small-graph set.
    pub random_graphs: usize,
    pub monotonicity_pairs: usize,
    pub tp_graphs: usize,
    pub tp_max_vertices: usize,
    pub projection_sequences: usize,
    pub projection_max_len: usize,
    pub alternation_rotations: usize,
    pub p1cb_max_p: usize,
    pub p1cb_max_q: usize,
    pub sweep_max_p: usize,
    pub sweep_max_q: usize,
    pub pairs_per_instance: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            scale: 1.0,
            seed: 1,
            flip: FlipConfig::default(),
            random_graphs: 200,
            monotonicity_pairs: 50,
            tp_graphs: 500,
            tp_max_vertices: 9,
            projection_sequences: 200,
            projection_max_len: 30,
            alternation_rotations: 100_000,
            p1cb_max_p: 8,
            p1cb_max_q: 40,
            sweep_max_p: 5,
            sweep_max_q: 20,
            pairs_per_instance: 10,
        }
    }
}

impl VerifyConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Parse(format!("verify config: {e}")))
    }

    fn scaled(&self, count: usize) -> usize {
        ((count as f64 * self.scale).ceil() as usize).max(1)
    }

    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ salt)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub actual: Value,
    pub pass: bool,
}

impl Check {
    fn new(name: impl Into<String>, expected: impl Serialize, actual: impl Serialize, pass: bool) -> Self {
        Check {
            name: name.into(),
            expected: json!(expected),
            actual: json!(actual),
            pass,
        }
    }

    fn eq<T: Serialize + PartialEq>(name: impl Into<String>, expected: T, actual: T) -> Self {
        let pass = expected == actual;
        Self::new(name, expected, actual, pass)
    }

    fn zero(name: impl Into<String>, violations: usize) -> Self {
        Self::eq(name, 0, violations)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub theorem: String,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl VerifyReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Runs the checks behind one theorem id.
pub fn verify(id: &str, cfg: &VerifyConfig) -> Result<VerifyReport> {
    let start = Instant::now();
    let checks = match id {
        "mlb" => mlb(cfg)?,
        "monot" => monot(cfg)?,
        "teo1tp" => teo1tp(cfg)?,
        "teo2tp" => teo2tp(cfg)?,
        "mtp" => mtp(cfg)?,
        "tdub" => tdub(cfg)?,
        "tdlb" => tdlb(cfg)?,
        "pwcliques" => pwcliques(cfg)?,
        "pw2lb-invariants" => pw2lb_invariants(cfg)?,
        "p1cb" => p1cb(cfg)?,
        "l2cb-witness" => l2cb_witness(cfg)?,
        "csga" => csga(cfg)?,
        "stello" => stello(cfg)?,
        "lemme-dist-sp" => lemme_dist_sp(cfg)?,
        "l3sp" => l3sp(cfg)?,
        "teo1-sp" => teo1_sp(cfg)?,
        "projection" => projection(cfg)?,
        other => return Err(Error::UnknownTheorem(other.to_string())),
    };
    Ok(VerifyReport {
        theorem: id.to_string(),
        checks,
        elapsed_ms: Some(start.elapsed().as_millis() as u64),
    })
}

/// Every theorem id in parallel, reported in id order.
pub fn verify_all(cfg: &VerifyConfig) -> Result<Vec<VerifyReport>> {
    THEOREM_IDS.par_iter().map(|id| verify(id, cfg)).collect()
}

fn diameter(g: &Graph, cfg: &VerifyConfig) -> Result<usize> {
    Ok(FlipGraph::build_with(g, &cfg.flip)?.diameter().diameter)
}

/// Eccentricity of the tree farthest from tree 0. Never above the diameter,
/// and much cheaper to get on rotation graphs with many antipodal pairs.
fn diameter_lower(g: &Graph, cfg: &VerifyConfig) -> Result<usize> {
    let fg = FlipGraph::build_with(g, &cfg.flip)?;
    let first = fg.bfs(0);
    let far = (0..first.len()).max_by_key(|&i| first[i]).unwrap_or(0);
    Ok(fg.bfs(far).into_iter().max().unwrap_or(0) as usize)
}

/// The exhaustive connected graphs on at most six vertices followed by the
/// seeded random ones.
fn small_graphs(cfg: &VerifyConfig) -> Result<Vec<Graph>> {
    let mut out: Vec<Graph> = (1..=6).flat_map(all_connected_graphs).collect();
    let mut rng = cfg.rng(1);
    for _ in 0..cfg.scaled(cfg.random_graphs) {
        let n = rng.gen_range(2..=6);
        out.push(random_connected(rng.gen(), n, rng.gen_range(0.0..1.0))?);
    }
    Ok(out)
}

fn random_tp_graphs(cfg: &VerifyConfig, count: usize, max_n: usize, salt: u64) -> Result<Vec<Graph>> {
    let mut rng = cfg.rng(salt);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let g = random_tp(rng.gen(), rng.gen_range(1..max_n))?;
        if g.n() <= max_n {
            out.push(g);
        }
    }
    Ok(out)
}

fn mlb(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let graphs = small_graphs(cfg)?;
    let exhaustive: usize = (1..=6).map(|n| all_connected_graphs(n).len()).sum();
    let results: Vec<(i64, usize, usize)> = graphs
        .par_iter()
        .map(|g| {
            let (lo, hi) = mp_bounds(g);
            Ok((lo, diameter(g, cfg)?, hi))
        })
        .collect::<Result<_>>()?;
    let below = results.iter().filter(|&&(lo, d, _)| (d as i64) < lo).count();
    let above = results.iter().filter(|&&(_, d, hi)| d > hi).count();
    let tight = results.iter().filter(|&&(_, d, hi)| d == hi).count();
    Ok(vec![
        Check::eq("connected graphs on at most 6 vertices, up to isomorphism", 143, exhaustive),
        Check::new("graphs checked", "reported", graphs.len(), true),
        Check::zero("diameter below max{m, 2n-20}", below),
        Check::zero("diameter above C(n,2)", above),
        Check::new("graphs attaining C(n,2)", "reported", tight, true),
    ])
}

/// A connected spanning subgraph of `h` with a random subset of its edges removed.
fn random_connected_subgraph(h: &Graph, rng: &mut ChaCha8Rng) -> Result<Graph> {
    let mut edges = h.edges().to_vec();
    let tries = rng.gen_range(0..=edges.len());
    for _ in 0..tries {
        let i = rng.gen_range(0..edges.len());
        let mut fewer = edges.clone();
        fewer.swap_remove(i);
        if Graph::new(h.n(), &fewer)?.is_connected() {
            edges = fewer;
        }
    }
    Graph::new(h.n(), &edges)
}

fn monot(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let mut rng = cfg.rng(2);
    let mut pairs = Vec::new();
    for _ in 0..cfg.scaled(cfg.monotonicity_pairs) {
        let n = rng.gen_range(3..=6);
        let h = random_connected(rng.gen(), n, rng.gen_range(0.2..1.0))?;
        let g = random_connected_subgraph(&h, &mut rng)?;
        pairs.push((g, h));
    }
    let results: Vec<(usize, usize)> = pairs
        .par_iter()
        .map(|(g, h)| Ok((diameter(g, cfg)?, diameter(h, cfg)?)))
        .collect::<Result<_>>()?;
    let strict = results.iter().filter(|(a, b)| a < b).count();
    Ok(vec![
        Check::zero("subgraph with larger diameter", results.iter().filter(|(a, b)| a > b).count()),
        Check::new("pairs checked", cfg.scaled(cfg.monotonicity_pairs), results.len(), true),
        Check::new("strictly increasing pairs", "reported", strict, true),
    ])
}

fn teo1tp(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let graphs = random_tp_graphs(cfg, cfg.scaled(40), 8, 3)?;
    let results: Vec<(usize, usize)> = graphs
        .par_iter()
        .map(|g| Ok((g.m(), diameter(g, cfg)?)))
        .collect::<Result<_>>()?;
    let out_of_range = results.iter().filter(|&&(m, d)| d < m || d > 2 * m).count();
    let worst = results
        .iter()
        .filter(|(m, _)| *m > 0)
        .map(|&(m, d)| d as f64 / m as f64)
        .fold(0.0, f64::max);
    Ok(vec![
        Check::zero("diameter outside [m, 2m]", out_of_range),
        Check::new("largest diameter / m", "<= 2", worst, worst <= 2.0),
    ])
}

fn teo2tp(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let graphs = random_tp_graphs(cfg, cfg.scaled(cfg.tp_graphs), cfg.tp_max_vertices, 4)?;
    let per_graph: Vec<[usize; 3]> = graphs
        .par_iter()
        .enumerate()
        .map(|(i, g)| {
            let mut rng = cfg.rng(400 + i as u64);
            let t1 = SearchTree::random(g, &mut rng)?;
            let t2 = SearchTree::random(g, &mut rng)?;
            let transform = tp_transform(g, &t1)?;
            let path = tp_path(g, &t1, &t2)?;
            let long_transform = usize::from(transform.len() > g.m());
            let long_path = usize::from(path.len() > 2 * g.m());
            let bad_replay = usize::from(t1.apply(g, &path)? != t2);
            Ok([long_transform, long_path, bad_replay])
        })
        .collect::<Result<_>>()?;
    let sum = |k: usize| per_graph.iter().map(|r| r[k]).sum::<usize>();
    Ok(vec![
        Check::new("graphs checked", graphs.len(), per_graph.len(), true),
        Check::zero("transform longer than m", sum(0)),
        Check::zero("path longer than 2m", sum(1)),
        Check::zero("path not ending at target", sum(2)),
    ])
}

fn mtp(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let graphs = random_tp_graphs(cfg, cfg.scaled(200), 12, 5)?;
    let mut edge_violations = 0;
    let mut depth_mismatch = 0;
    for g in &graphs {
        let td = tree_depth(g)?;
        if g.m() >= td * g.n() {
            edge_violations += 1;
        }
        if td != g.clique_number() {
            depth_mismatch += 1;
        }
    }
    Ok(vec![
        Check::zero("m >= td n", edge_violations),
        Check::zero("tree-depth differs from clique number", depth_mismatch),
    ])
}

fn tdub(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let graphs = small_graphs(cfg)?;
    let violations: usize = graphs
        .par_iter()
        .map(|g| Ok(usize::from(diameter(g, cfg)? > td_bound(g.n(), tree_depth(g)?))))
        .sum::<Result<usize>>()?;
    let star5 = star(5)?;
    let d = diameter(&star5, cfg)?;
    let b = td_bound(star5.n(), tree_depth(&star5)?);
    Ok(vec![
        Check::zero("diameter above 2 td n", violations),
        Check::new("star:5 diameter <= 2 td n", b, d, d <= b),
    ])
}

fn tdlb(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for (k, s) in [(2, 3), (3, 3), (2, 4), (4, 3), (2, 5)] {
        let g = glued_cliques(k, s)?.graph;
        let n = g.n() - 1;
        let td = tree_depth(&g)?;
        let d = diameter_lower(&g, cfg)?;
        let name = format!("gluedcliques:{k}x{s}");
        checks.push(Check::eq(format!("{name} tree-depth"), n / k + 1, td));
        checks.push(Check::eq(format!("{name} edges = td n / 2"), td * n, 2 * g.m()));
        checks.push(Check::new(format!("{name} diameter >= td n / 2"), td * n / 2, d, 2 * d >= td * n));
    }
    Ok(checks)
}

fn pwcliques(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for (k, t) in [(2, 4), (3, 2), (3, 3), (4, 2), (3, 4)] {
        let chain = clique_chain(k, t)?;
        let g = &chain.graph;
        let n = g.n() - 1;
        let name = format!("cliquechain:{k}x{t}");
        checks.push(Check::eq(format!("{name} interval (chordal) with clique number k"), (true, k), (g.is_chordal(), g.clique_number())));
        checks.push(Check::new(format!("{name} m >= nk/2"), n * k, 2 * g.m(), 2 * g.m() >= n * k));
        let d = diameter_lower(g, cfg)?;
        checks.push(Check::new(format!("{name} diameter >= nk/2"), n * k, 2 * d, 2 * d >= n * k));
    }
    Ok(checks)
}

/// Alternation changes over a random walk: (monochromatic increases,
/// changes above 2, monochromatic count, bichromatic count).
fn alternation_walk(n: usize, rotations: usize, rng: &mut ChaCha8Rng) -> Result<[usize; 4]> {
    let ladder = ladder_pw2(n)?;
    let g = &ladder.graph;
    let c = TwoColoring::of_ladder(&ladder);
    let mut out = [0; 4];
    let mut t = SearchTree::random(g, rng)?;
    let mut alt = alternation_number(&t, &c);
    for step in 0..rotations {
        if step % 1000 == 0 {
            t = SearchTree::random(g, rng)?;
            alt = alternation_number(&t, &c);
        }
        let mut b = rng.gen_range(0..g.n() - 1);
        if b >= t.root() {
            b += 1;
        }
        let colour = classify_rotation(&t, b, &c)?;
        t = t.rotate(g, b)?;
        let next = alternation_number(&t, &c);
        match colour {
            RotationColour::Monochromatic => {
                out[2] += 1;
                if next > alt {
                    out[0] += 1;
                }
            }
            RotationColour::Bichromatic => out[3] += 1,
        }
        if next > alt + 2 {
            out[1] += 1;
        }
        alt = next;
    }
    Ok(out)
}

fn pw2lb_invariants(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let total = cfg.scaled(cfg.alternation_rotations);
    let walks: Vec<(usize, [usize; 4])> = [4usize, 8]
        .par_iter()
        .map(|&n| Ok((n, alternation_walk(n, total.div_ceil(2), &mut cfg.rng(600 + n as u64))?)))
        .collect::<Result<_>>()?;
    for (n, [mono_up, jump, mono, bi]) in walks {
        checks.push(Check::zero(format!("ladder:{n} monochromatic rotations increasing alternation"), mono_up));
        checks.push(Check::zero(format!("ladder:{n} rotations increasing alternation by more than 2"), jump));
        checks.push(Check::new(
            format!("ladder:{n} rotation colours"),
            "reported",
            json!({"monochromatic": mono, "bichromatic": bi}),
            true,
        ));
    }

    let mut exact = Vec::new();
    for &(n, golden) in LADDER_WITNESS_DISTANCES {
        let (ladder, t, t2) = pw2_witness_trees(n)?;
        let g = &ladder.graph;
        let c = TwoColoring::of_ladder(&ladder);
        checks.push(Check::eq(format!("ladder:{n} witness alternation"), (1, n + 1), (alternation_number(&t, &c), alternation_number(&t2, &c))));
        let cert = flip::distance_with(g, &t, &t2, &cfg.flip)?;
        checks.push(Check::eq(format!("ladder:{n} witness distance"), golden, cert.distance));
        let (_, resolved) = cert.witness.replay(g, &t)?;
        let bichromatic = resolved.iter().filter(|r| !c.same_colour(r.parent, r.child)).count();
        checks.push(Check::new(
            format!("ladder:{n} bichromatic rotations on a shortest path"),
            format!(">= {}", n / 2),
            bichromatic,
            bichromatic >= n / 2,
        ));
        if n >= 4 {
            let (_, s1, s2) = pw2_witness_trees(n / 2)?;
            let projected = (project_tree(g, &t, ladder.left())?, project_tree(g, &t2, ladder.left())?);
            checks.push(Check::eq(
                format!("ladder:{n} witnesses project onto the ladder:{} witnesses", n / 2),
                true,
                projected == (s1, s2),
            ));
        }
        exact.push((n, cert.distance));
    }
    for &(n, d) in &exact {
        if let Some(&(_, half)) = exact.iter().find(|&&(m, _)| 2 * m == n) {
            checks.push(Check::new(
                format!("distance at ladder:{n} >= 2 * distance at ladder:{} + {}", n / 2, n / 2),
                2 * half + n / 2,
                d,
                d >= 2 * half + n / 2,
            ));
        }
    }
    Ok(checks)
}

fn p1cb(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let (max_p, max_q) = (cfg.p1cb_max_p, cfg.p1cb_max_q);
    let tuples: Vec<(usize, usize)> = (1..=max_p).flat_map(|p| (1..=max_q).map(move |q| (p, q))).collect();
    let counts: Vec<(usize, usize)> = tuples
        .par_iter()
        .map(|&(p, q)| {
            let (mut checked, mut violations) = (0, 0);
            for a in 0..p {
                for b in 0..q {
                    let floor = f_eval(p, q, a, b, 0)?.min(f_eval(p, q, a, b, q)?);
                    for k in 0..=q {
                        checked += 1;
                        if f_eval(p, q, a, b, k)? < floor {
                            violations += 1;
                        }
                    }
                }
            }
            Ok((checked, violations))
        })
        .collect::<Result<_>>()?;
    let checked: usize = counts.iter().map(|c| c.0).sum();
    let violations: usize = counts.iter().map(|c| c.1).sum();
    Ok(vec![
        Check::zero(format!("f(k) < min(f(0), f(q)) for p <= {max_p}, q <= {max_q}"), violations),
        Check::new("values of k checked", "reported", checked, true),
    ])
}

fn l2cb_witness(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let (mut invalid, mut f0_mismatch, mut above) = (0, 0, 0);
    for p in 1..=cfg.sweep_max_p {
        for q in 1..=cfg.sweep_max_q {
            let params = choose_witness_params(p, q)?;
            let bp = complete_split(p, q)?;
            let (b1, b2) = split_witnesses(p, q, params)?;
            if b1.to_tree(&bp).is_err() || b2.to_tree(&bp).is_err() {
                invalid += 1;
            }
            let (a, b) = (params.alpha, params.beta);
            let f0 = (p * (p - 1) / 2 + q * (q - 1) / 2 + a * q + b) as i64;
            if f_eval(p, q, a, b, 0)? != f0 {
                f0_mismatch += 1;
            }
            if split_lower_bound(p, q)?.0 > split_diameter(p, q)? {
                above += 1;
            }
        }
    }
    checks.push(Check::zero("invalid witness trees", invalid));
    checks.push(Check::zero("f(0) differs from its closed form", f0_mismatch));
    checks.push(Check::zero("lower bound above the diameter formula", above));
    for (p, q) in [(1, 3), (1, 5), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3)] {
        let bp = complete_split(p, q)?;
        let (lower, params) = split_lower_bound(p, q)?;
        let (b1, b2) = split_witnesses(p, q, params)?;
        let d = flip::distance_with(&bp.graph, &b1.to_tree(&bp)?, &b2.to_tree(&bp)?, &cfg.flip)?.distance;
        checks.push(Check::new(format!("split:{p},{q} witness distance >= lower bound"), lower, d, d >= lower));
    }
    Ok(checks)
}

/// Constructed path between the lower-bound witnesses, and the number of
/// random pairs whose constructed path exceeds the diameter formula.
fn split_construction(p: usize, q: usize, pairs: usize, rng: &mut ChaCha8Rng) -> Result<(usize, usize)> {
    let bp = complete_split(p, q)?;
    let g = &bp.graph;
    let path = |t1: &SearchTree, t2: &SearchTree| -> Result<usize> {
        let seq = if q <= 4 * p {
            split_upper_path_balanced(&bp, t1, t2)?.shorter().clone()
        } else {
            split_upper_path(&bp, t1, t2)?
        };
        assert_eq!(&t1.apply(g, &seq)?, t2);
        Ok(seq.len())
    };
    let (_, params) = split_lower_bound(p, q)?;
    let (b1, b2) = split_witnesses(p, q, params)?;
    let witness = path(&b1.to_tree(&bp)?, &b2.to_tree(&bp)?)?;
    let bound = split_diameter(p, q)?;
    let mut over = 0;
    for _ in 0..pairs {
        let t1 = SearchTree::random(g, rng)?;
        let t2 = SearchTree::random(g, rng)?;
        if path(&t1, &t2)? > bound {
            over += 1;
        }
    }
    Ok((witness, over))
}

fn csga(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let small: Vec<(usize, usize)> = (1..=5).flat_map(|p| (1..=6).map(move |q| (p, q))).filter(|&(p, q)| p + q <= 7).collect();
    let exact: Vec<Check> = small
        .par_iter()
        .map(|&(p, q)| {
            let d = diameter(&complete_split(p, q)?.graph, cfg)?;
            Ok(Check::eq(format!("split:{p},{q} diameter"), split_diameter(p, q)?, d))
        })
        .collect::<Result<_>>()?;
    checks.extend(exact);

    let tuples: Vec<(usize, usize)> = (1..=cfg.sweep_max_p).flat_map(|p| (1..=cfg.sweep_max_q).map(move |q| (p, q))).collect();
    let pairs = cfg.scaled(cfg.pairs_per_instance);
    let sweep: Vec<(usize, usize, usize, usize)> = tuples
        .par_iter()
        .map(|&(p, q)| {
            let mut rng = cfg.rng(700 + (p * 100 + q) as u64);
            let (witness, over) = split_construction(p, q, pairs, &mut rng)?;
            Ok((split_lower_bound(p, q)?.0, witness, split_diameter(p, q)?, over))
        })
        .collect::<Result<_>>()?;
    // with q = 1 the graph is a clique and the bound comes from reversed
    // chains, not from the broom pair
    let inconsistent = sweep
        .iter()
        .zip(&tuples)
        .filter(|&(&(lo, w, hi, _), &(_, q))| !(w <= hi && (q == 1 || lo <= w)))
        .count();
    let lower_gap = sweep.iter().filter(|&&(lo, _, hi, _)| lo != hi).count();
    let over: usize = sweep.iter().map(|s| s.3).sum();
    let grid = format!("p <= {}, q <= {}", cfg.sweep_max_p, cfg.sweep_max_q);
    checks.push(Check::zero(format!("witness path outside [lower bound, formula] for {grid}"), inconsistent));
    checks.push(Check::zero(format!("lower bound differs from formula for {grid}"), lower_gap));
    checks.push(Check::zero(format!("random pair path above formula for {grid}"), over));
    Ok(checks)
}

fn stello(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for q in 1..=6 {
        let d = diameter(&star(q)?, cfg)?;
        checks.push(Check::eq(format!("star:{q} diameter"), split_diameter(1, q)?, d));
        if q >= 5 {
            checks.push(Check::eq(format!("star:{q} diameter = 2n"), 2 * q, d));
        }
    }
    Ok(checks)
}

fn lemme_dist_sp(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for p in 1..=3 {
        for q in p..=3 {
            let bp = complete_bipartite(p, q)?;
            let g = &bp.graph;
            let fg = FlipGraph::build_with(g, &cfg.flip)?;
            let mut cache = std::collections::HashMap::new();
            let mut dist_to = |t: &SearchTree| -> Result<Vec<u32>> {
                let id = fg.id_of(t).expect("valid tree");
                Ok(cache.entry(id).or_insert_with(|| fg.bfs(id)).clone())
            };
            let (mut over, mut construct_mismatch, mut worst) = (0, 0, 0);
            for id in 0..fg.node_count() {
                let t = fg.tree(id);
                let (x, nn) = xt_nt(&bp, &t)?;
                let dx = dist_to(&x.to_tree(&bp)?)?[id] as usize;
                let dn = dist_to(&nn.to_tree(&bp)?)?[id] as usize;
                worst = worst.max(dx + dn);
                if dx + dn > p * q {
                    over += 1;
                }
                let (_, sx) = lift_group(g, &t, &x.handle, bp.p_set())?;
                let (_, sn) = lift_group(g, &t, &nn.handle, bp.q_set())?;
                if sx.len() + sn.len() != p * q {
                    construct_mismatch += 1;
                }
            }
            checks.push(Check::zero(format!("bipartite:{p},{q} trees with dist(T,X_T) + dist(T,N_T) > pq"), over));
            checks.push(Check::new(format!("bipartite:{p},{q} largest dist(T,X_T) + dist(T,N_T)"), p * q, worst, worst <= p * q));
            checks.push(Check::zero(format!("bipartite:{p},{q} constructed lifts not summing to pq"), construct_mismatch));
        }
    }
    Ok(checks)
}

fn l3sp(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let mut rng = cfg.rng(8);
    let pairs = cfg.scaled(cfg.pairs_per_instance * 5);
    for (p, q) in [(1, 3), (2, 2), (2, 3), (2, 4), (3, 3), (3, 6), (4, 10)] {
        let bp = complete_bipartite(p, q)?;
        let g = &bp.graph;
        let (mut over, mut wrong_end) = (0, 0);
        for _ in 0..pairs {
            let t1 = SearchTree::random(g, &mut rng)?;
            let t2 = SearchTree::random(g, &mut rng)?;
            let paths = bipartite_upper_path(&bp, &t1, &t2)?;
            if paths.shorter().len() > 2 * p * q {
                over += 1;
            }
            if t1.apply(g, &paths.via_x)? != t2 || t1.apply(g, &paths.via_n)? != t2 {
                wrong_end += 1;
            }
        }
        checks.push(Check::zero(format!("bipartite:{p},{q} paths longer than 2pq"), over));
        checks.push(Check::zero(format!("bipartite:{p},{q} paths not ending at target"), wrong_end));
        if p + q <= 6 {
            let d = diameter(g, cfg)?;
            checks.push(Check::new(format!("bipartite:{p},{q} diameter <= 2pq"), 2 * p * q, d, d <= 2 * p * q));
        }
    }
    Ok(checks)
}

fn teo1_sp(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let bp = complete_bipartite(1, 5)?;
    let (b1, b2) = bipartite_witnesses(1, 5)?;
    let (t1, t2) = (b1.to_tree(&bp)?, b2.to_tree(&bp)?);
    let d = flip::distance_with(&bp.graph, &t1, &t2, &cfg.flip)?.distance;
    checks.push(Check::eq("bipartite:1,5 witness distance", 10, d));
    checks.push(Check::eq("bipartite:1,5 diameter", 10, diameter(&bp.graph, cfg)?));
    let mut mismatched = 0;
    for p in 1..=cfg.sweep_max_p {
        for q in 4 * p + 1..=cfg.sweep_max_q.max(4 * p + 1) {
            let bp = complete_bipartite(p, q)?;
            let (b1, b2) = bipartite_witnesses(p, q)?;
            let (t1, t2) = (b1.to_tree(&bp)?, b2.to_tree(&bp)?);
            let paths = bipartite_upper_path(&bp, &t1, &t2)?;
            // the witnesses are at distance 2pq, so no path can be shorter
            if paths.shorter().len() != 2 * p * q || t1.apply(&bp.graph, paths.shorter())? != t2 {
                mismatched += 1;
            }
        }
    }
    checks.push(Check::zero("unbalanced witness paths not of length 2pq", mismatched));
    Ok(checks)
}

/// A convex set obtained by deleting `k` random simplicial vertices in turn.
fn random_convex_set(g: &Graph, k: usize, rng: &mut ChaCha8Rng) -> VertexSet {
    let mut s = g.vertices();
    for _ in 0..k {
        let simplicial: Vec<usize> = s.iter().filter(|&v| g.is_simplicial_within(s, v)).collect();
        if s.len() <= 1 {
            break;
        }
        s.remove(simplicial[rng.gen_range(0..simplicial.len())]);
    }
    s
}

fn projection(cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let mut rng = cfg.rng(9);
    let count = cfg.scaled(cfg.projection_sequences);
    let mut instances = vec![("ladder:2".to_string(), ladder_pw2(2)?.graph)];
    for (p, q) in [(1, 4), (2, 3), (3, 3), (2, 5)] {
        instances.push((format!("split:{p},{q}"), complete_split(p, q)?.graph));
    }
    for (name, g) in &instances {
        let mut failures = 0;
        let mut kept = 0;
        for _ in 0..count {
            let start = SearchTree::random(g, &mut rng)?;
            let len = rng.gen_range(1..=cfg.projection_max_len);
            let (seq, end) = start.random_walk(g, len, &mut rng);
            let s = random_convex_set(g, rng.gen_range(0..g.n()), &mut rng);
            let (sub, _) = g.induced_subgraph(s)?;
            let projected = project_sequence(g, &start, &seq, s)?;
            kept += projected.len();
            let from = project_tree(g, &start, s)?;
            let to = project_tree(g, &end, s)?;
            if from.apply(&sub, &projected).ok() != Some(to) {
                failures += 1;
            }
        }
        checks.push(Check::zero(format!("{name} projected sequences not replaying ({count} samples)"), failures));
        checks.push(Check::new(format!("{name} projected rotations kept"), "reported", kept, true));
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_id() {
        assert!(matches!(verify("nope", &VerifyConfig::default()), Err(Error::UnknownTheorem(_))));
    }

    #[test]
    fn config_from_toml() {
        let cfg = VerifyConfig::from_toml("scale = 0.5\n[flip]\nmax_nodes = 1000\n").unwrap();
        assert_eq!(cfg.scale, 0.5);
        assert_eq!(cfg.flip.max_nodes, 1000);
        assert_eq!(cfg.tp_graphs, 500);
        assert!(VerifyConfig::from_toml("scale = \"x\"").is_err());
    }

    #[test]
    fn convex_sets_are_convex() {
        let g = complete_split(2, 3).unwrap().graph;
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for k in 0..5 {
            let s = random_convex_set(&g, k, &mut rng);
            assert_eq!(s.len(), 5 - k);
            assert!(crate::tree::is_convex(&g, s).unwrap());
        }
    }

    #[test]
    fn quick_theorems_pass() {
        let cfg = VerifyConfig { scale: 0.05, ..VerifyConfig::default() };
        for id in ["stello", "p1cb", "tdlb", "mtp", "teo1-sp"] {
            let report = verify(id, &cfg).unwrap();
            assert!(report.pass(), "{report:#?}");
        }
    }
}
