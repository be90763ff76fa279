use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use gassoc::graph::io;
use gassoc::graph::spec::GraphSpec;
use gassoc::tree::format::parse_tree;
use gassoc::{Graph, SearchTree};

/// Environment variable naming the directory for relative output paths.
pub const SCRATCH_ENV: &str = "GASSOC_SCRATCH";

/// Relative output paths land in the scratch directory when one is set.
pub fn output_path(p: &Path) -> PathBuf {
    match std::env::var_os(SCRATCH_ENV) {
        Some(dir) if p.is_relative() => Path::new(&dir).join(p),
        _ => p.to_path_buf(),
    }
}

/// Relative input paths are looked up in the working directory first, then
/// in the scratch directory.
fn input_path(p: &Path) -> Option<PathBuf> {
    if p.is_file() {
        return Some(p.to_path_buf());
    }
    let alt = output_path(p);
    alt.is_file().then_some(alt)
}

/// A graph argument: a generator spec, or an edge-list or JSON file.
pub struct GraphInput {
    /// The argument as given, recorded in every output.
    pub source: String,
    pub graph: Graph,
}

pub fn graph(arg: &str) -> Result<GraphInput> {
    let graph = match arg.parse::<GraphSpec>() {
        Ok(spec) => spec.build()?,
        Err(spec_err) => match input_path(Path::new(arg)) {
            Some(path) => {
                let text = std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
                if text.trim_start().starts_with('{') {
                    io::parse_json(&text)?
                } else {
                    io::parse_edge_list(&text)?
                }
            }
            None => return Err(spec_err.into()),
        },
    };
    Ok(GraphInput { source: arg.to_string(), graph })
}

/// A tree argument in any accepted text form, or a file holding one.
pub fn tree(g: &Graph, arg: &str) -> Result<SearchTree> {
    let text = match input_path(Path::new(arg)) {
        Some(path) if !arg.contains(';') && !arg.contains(':') => {
            std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?
        }
        _ => arg.to_string(),
    };
    Ok(parse_tree(g, &text)?)
}

/// Inclusive integer range written `a..b`, `a..=b` or `a`.
pub fn range(text: &str) -> Result<std::ops::RangeInclusive<usize>, String> {
    let bad = || format!("expected a range like 1..4, got `{text}`");
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (text, text),
    };
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(format!("empty range `{text}`"));
    }
    Ok(lo..=hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(range("1..4").unwrap(), 1..=4);
        assert_eq!(range("2..=3").unwrap(), 2..=3);
        assert_eq!(range("5").unwrap(), 5..=5);
        assert!(range("4..1").is_err());
        assert!(range("x..2").is_err());
    }

    #[test]
    fn graph_from_spec() {
        let g = graph("star:5").unwrap();
        assert_eq!(g.graph.n(), 6);
        assert!(graph("nonsense").is_err());
    }
}
