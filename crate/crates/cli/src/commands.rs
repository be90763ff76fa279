use std::path::Path;
use std::time::Instant;

use anyhow::{Context, Result};
use gassoc::bounds::{verify, verify_all, VerifyConfig, VerifyReport};
use gassoc::flip::{self, FlipConfig, FlipGraph};
use gassoc::graph::io;
use gassoc::graph::spec::GraphSpec;
use gassoc::tree::format::{to_json_value, to_text};
use gassoc::tree::{count_search_trees, enumerate_search_trees};
use serde_json::{json, Value};

use crate::input::{self, output_path};
use crate::output::{csv, emit, grid, json_line, record, table, title, Mode};
use crate::{sweep, Cli, Command, Format};

/// Runs one command. `Ok(false)` means it ran but a check failed.
pub fn run(cli: &Cli) -> Result<bool> {
    let timing = !cli.no_timing;
    match &cli.command {
        Command::Gen { spec, out, json } => gen(spec, out.as_deref(), *json).map(|()| true),
        Command::Enumerate { graph, all, cap, format } => enumerate(graph, *all, *cap, format).map(|()| true),
        Command::Distance { graph, tree_a, tree_b, max_visited, format } => {
            distance(graph, tree_a, tree_b, *max_visited, format).map(|()| true)
        }
        Command::Diameter { graph, caps, format } => {
            let cfg = FlipConfig { max_nodes: caps.cap, max_memory_bytes: caps.max_memory, ..FlipConfig::default() };
            diameter(graph, &cfg, format, timing).map(|()| true)
        }
        Command::Verify { id, scale, seed, config, format } => {
            verify_cmd(id, *scale, *seed, config.as_deref(), format, timing)
        }
        Command::Sweep { kind } => sweep::run(kind),
    }
}

fn gen(spec_text: &str, out: Option<&Path>, as_json: bool) -> Result<()> {
    let spec: GraphSpec = spec_text.parse()?;
    let g = spec.build()?;
    let text = if as_json {
        let mut doc: Value = serde_json::from_str(&io::to_json(&g))?;
        let obj = doc.as_object_mut().expect("graph JSON is an object");
        obj.insert("tool".into(), json!("gassoc"));
        obj.insert("version".into(), json!(crate::VERSION));
        obj.insert("spec".into(), json!(spec.to_string()));
        doc.to_string() + "\n"
    } else {
        format!("# gassoc {} gen {spec}\n{}", crate::VERSION, io::to_edge_list(&g))
    };
    match out {
        Some(path) => {
            let path = output_path(path);
            std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn enumerate(graph: &str, all: bool, cap: u64, format: &Format) -> Result<()> {
    let gi = input::graph(graph)?;
    let g = &gi.graph;
    let inp = json!({ "graph": gi.source, "all": all, "cap": cap });
    let count = count_search_trees(g)?;
    let trees = if all { Some(enumerate_search_trees(g, cap)?) } else { None };
    let texts: Vec<String> = trees.iter().flatten().map(to_text).collect();
    let mode = Mode::of(format);
    let text = match &mode {
        Mode::Table => {
            let mut out = table(title("enumerate", &inp), &[("vertices", g.n().to_string()), ("trees", count.to_string())]);
            for t in &texts {
                out += t;
                out.push('\n');
            }
            out
        }
        Mode::Json => {
            let mut r = record("enumerate", inp);
            r.insert("vertices".into(), json!(g.n()));
            r.insert("count".into(), count_value(&count));
            if let Some(trees) = &trees {
                r.insert("trees".into(), trees.iter().map(to_json_value).collect());
            }
            json_line(r)
        }
        Mode::Csv(_) => {
            if all {
                let rows: Vec<Vec<String>> =
                    texts.iter().enumerate().map(|(i, t)| vec![i.to_string(), t.clone()]).collect();
                csv(&["index", "tree"], &rows, &inp)?
            } else {
                csv(&["vertices", "count"], &[vec![g.n().to_string(), count.to_string()]], &inp)?
            }
        }
    };
    emit(&mode, &text)
}

/// Counts too large for a JSON number are written as strings.
fn count_value(c: &impl std::fmt::Display) -> Value {
    let s = c.to_string();
    s.parse::<u64>().map(Value::from).unwrap_or(Value::from(s))
}

fn distance(graph: &str, a: &str, b: &str, max_visited: u64, format: &Format) -> Result<()> {
    let gi = input::graph(graph)?;
    let g = &gi.graph;
    let (ta, tb) = (input::tree(g, a)?, input::tree(g, b)?);
    let inp = json!({ "graph": gi.source, "tree_a": a, "tree_b": b, "max_visited": max_visited });
    let cfg = FlipConfig { max_visited, ..FlipConfig::default() };
    let cert = flip::distance_with(g, &ta, &tb, &cfg)?;
    let steps: Vec<String> = cert.witness.steps().iter().map(usize::to_string).collect();
    let mode = Mode::of(format);
    let text = match &mode {
        Mode::Table => table(
            title("distance", &inp),
            &[
                ("from", to_text(&ta)),
                ("to", to_text(&tb)),
                ("distance", cert.distance.to_string()),
                ("rotations", steps.join(" ")),
            ],
        ),
        Mode::Json => {
            let mut r = record("distance", inp);
            r.insert("graph".into(), json!(gi.source));
            r.insert("from".into(), to_json_value(&ta));
            r.insert("to".into(), to_json_value(&tb));
            r.insert("distance".into(), json!(cert.distance));
            r.insert("witness".into(), json!(cert.witness.steps()));
            json_line(r)
        }
        Mode::Csv(_) => csv(
            &["from", "to", "distance", "rotations"],
            &[vec![to_text(&ta), to_text(&tb), cert.distance.to_string(), steps.join(" ")]],
            &inp,
        )?,
    };
    emit(&mode, &text)
}

fn diameter(graph: &str, cfg: &FlipConfig, format: &Format, timing: bool) -> Result<()> {
    let gi = input::graph(graph)?;
    let inp = json!({ "graph": gi.source, "cap": cfg.max_nodes, "max_memory": cfg.max_memory_bytes });
    let start = Instant::now();
    let fg = FlipGraph::build_with(&gi.graph, cfg)?;
    let d = fg.diameter();
    let elapsed = start.elapsed().as_millis() as u64;
    let (t1, t2) = &d.pair;
    let mode = Mode::of(format);
    let text = match &mode {
        Mode::Table => {
            let mut rows = vec![
                ("nodes", fg.node_count().to_string()),
                ("diameter", d.diameter.to_string()),
                ("witness", to_text(t1)),
                ("", to_text(t2)),
            ];
            if timing {
                rows.push(("elapsed_ms", elapsed.to_string()));
            }
            table(title("diameter", &inp), &rows)
        }
        Mode::Json => {
            let mut r = record("diameter", inp);
            r.insert("graph".into(), json!(gi.source));
            r.insert("nodes".into(), json!(fg.node_count()));
            r.insert("diameter".into(), json!(d.diameter));
            r.insert("witness".into(), json!([to_json_value(t1), to_json_value(t2)]));
            if timing {
                r.insert("elapsed_ms".into(), json!(elapsed));
            }
            json_line(r)
        }
        Mode::Csv(_) => {
            let mut head = vec!["graph", "nodes", "diameter", "witness_a", "witness_b"];
            let mut row =
                vec![gi.source.clone(), fg.node_count().to_string(), d.diameter.to_string(), to_text(t1), to_text(t2)];
            if timing {
                head.push("elapsed_ms");
                row.push(elapsed.to_string());
            }
            csv(&head, &[row], &inp)?
        }
    };
    emit(&mode, &text)
}

fn verify_cmd(
    id: &str,
    scale: Option<f64>,
    seed: Option<u64>,
    config: Option<&Path>,
    format: &Format,
    timing: bool,
) -> Result<bool> {
    let mut cfg = match config {
        Some(path) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            VerifyConfig::from_toml(&text)?
        }
        None => VerifyConfig::default(),
    };
    if let Some(s) = scale {
        if !(s.is_finite() && s > 0.0) {
            return Err(gassoc::Error::InvalidParameter(format!("scale must be positive, got {s}")).into());
        }
        cfg.scale = s;
    }
    if let Some(s) = seed {
        cfg.seed = s;
    }
    let mut reports: Vec<VerifyReport> = if id == "all" { verify_all(&cfg)? } else { vec![verify(id, &cfg)?] };
    if !timing {
        for r in &mut reports {
            r.elapsed_ms = None;
        }
    }
    let inp = json!({ "theorem": id, "config": cfg });
    let mode = Mode::of(format);
    let text = match &mode {
        Mode::Table => {
            let mut head = vec!["theorem", "result", "checks", "failed"];
            if timing {
                head.push("elapsed_ms");
            }
            let rows: Vec<Vec<String>> = reports
                .iter()
                .map(|r| {
                    let failed = r.checks.iter().filter(|c| !c.pass).count();
                    let mut row = vec![
                        r.theorem.clone(),
                        if r.pass() { "pass" } else { "FAIL" }.to_string(),
                        r.checks.len().to_string(),
                        failed.to_string(),
                    ];
                    if let Some(ms) = r.elapsed_ms {
                        row.push(ms.to_string());
                    }
                    row
                })
                .collect();
            let mut out = grid(title("verify", &json!({ "theorem": id, "scale": cfg.scale, "seed": cfg.seed })), &head, &rows);
            for r in &reports {
                for c in r.checks.iter().filter(|c| !c.pass) {
                    out += &format!("{} / {}: expected {}, got {}\n", r.theorem, c.name, c.expected, c.actual);
                }
            }
            out
        }
        Mode::Json => reports
            .iter()
            .map(|r| {
                let mut rec = record("verify", inp.clone());
                rec.insert("pass".into(), json!(r.pass()));
                if let Value::Object(fields) = serde_json::to_value(r)? {
                    rec.extend(fields);
                }
                Ok(json_line(rec))
            })
            .collect::<Result<String>>()?,
        Mode::Csv(_) => {
            let rows: Vec<Vec<String>> = reports
                .iter()
                .flat_map(|r| {
                    r.checks.iter().map(|c| {
                        vec![
                            r.theorem.clone(),
                            c.name.clone(),
                            c.expected.to_string(),
                            c.actual.to_string(),
                            c.pass.to_string(),
                        ]
                    })
                })
                .collect();
            csv(&["theorem", "check", "expected", "actual", "pass"], &rows, &inp)?
        }
    };
    emit(&mode, &text)?;
    Ok(reports.iter().all(VerifyReport::pass))
}
