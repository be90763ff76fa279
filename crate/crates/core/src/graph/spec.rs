//! String specs naming generated graphs, e.g. `split:3,4`, `ladder:8`,
//! `gluedcliques:2x5`.

use std::fmt;
use std::str::FromStr;

use super::{
    clique_chain, complete, complete_bipartite, complete_split, cycle, glued_cliques, ladder_pw2,
    path, random_cograph, random_connected, random_tp, star, Graph,
};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum GraphSpec {
    Complete(usize),
    Path(usize),
    Cycle(usize),
    Star(usize),
    Split(usize, usize),
    Bipartite(usize, usize),
    /// `k` cliques of size `s` sharing one vertex.
    GluedCliques(usize, usize),
    /// `t` cliques of size `k` in a chain.
    CliqueChain(usize, usize),
    Ladder(usize),
    RandomTp { seed: u64, steps: usize },
    RandomConnected { seed: u64, n: usize, density: f64 },
    Cograph { seed: u64, n: usize },
}

impl GraphSpec {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            GraphSpec::Complete(n) => complete(n),
            GraphSpec::Path(n) => path(n),
            GraphSpec::Cycle(n) => cycle(n),
            GraphSpec::Star(q) => star(q),
            GraphSpec::Split(p, q) => Ok(complete_split(p, q)?.graph),
            GraphSpec::Bipartite(p, q) => Ok(complete_bipartite(p, q)?.graph),
            GraphSpec::GluedCliques(k, s) => Ok(glued_cliques(k, s)?.graph),
            GraphSpec::CliqueChain(k, t) => Ok(clique_chain(k, t)?.graph),
            GraphSpec::Ladder(n) => Ok(ladder_pw2(n)?.graph),
            GraphSpec::RandomTp { seed, steps } => random_tp(seed, steps),
            GraphSpec::RandomConnected { seed, n, density } => random_connected(seed, n, density),
            GraphSpec::Cograph { seed, n } => random_cograph(seed, n),
        }
    }
}

fn num<T: FromStr>(s: &str, spec: &str) -> Result<T> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad number `{s}` in graph spec `{spec}`")))
}

fn pair(args: &str, sep: char, spec: &str) -> Result<(usize, usize)> {
    let (a, b) = args
        .split_once(sep)
        .ok_or_else(|| Error::Parse(format!("graph spec `{spec}` expects two values separated by `{sep}`")))?;
    Ok((num(a, spec)?, num(b, spec)?))
}

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let (kind, args) = spec
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("graph spec `{spec}` should look like `kind:args`")))?;
        let parsed = match kind.trim().to_ascii_lowercase().as_str() {
            "complete" | "k" => GraphSpec::Complete(num(args, spec)?),
            "path" => GraphSpec::Path(num(args, spec)?),
            "cycle" => GraphSpec::Cycle(num(args, spec)?),
            "star" => GraphSpec::Star(num(args, spec)?),
            "split" | "spk" => {
                let (p, q) = pair(args, ',', spec)?;
                GraphSpec::Split(p, q)
            }
            "bipartite" | "kpq" => {
                let (p, q) = pair(args, ',', spec)?;
                GraphSpec::Bipartite(p, q)
            }
            "gluedcliques" => {
                let (k, s) = pair(args, 'x', spec)?;
                GraphSpec::GluedCliques(k, s)
            }
            "cliquechain" => {
                let (k, t) = pair(args, 'x', spec)?;
                GraphSpec::CliqueChain(k, t)
            }
            "ladder" => GraphSpec::Ladder(num(args, spec)?),
            "randomtp" => {
                let (seed, steps) = pair(args, ',', spec)?;
                GraphSpec::RandomTp { seed: seed as u64, steps }
            }
            "random" => {
                let parts: Vec<&str> = args.split(',').collect();
                if parts.len() != 3 {
                    return Err(Error::Parse(format!("`{spec}`: expected random:seed,n,density")));
                }
                GraphSpec::RandomConnected {
                    seed: num(parts[0], spec)?,
                    n: num(parts[1], spec)?,
                    density: num(parts[2], spec)?,
                }
            }
            "cograph" => {
                let (seed, n) = pair(args, ',', spec)?;
                GraphSpec::Cograph { seed: seed as u64, n }
            }
            other => return Err(Error::Parse(format!("unknown graph family `{other}`"))),
        };
        Ok(parsed)
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Complete(n) => write!(f, "complete:{n}"),
            GraphSpec::Path(n) => write!(f, "path:{n}"),
            GraphSpec::Cycle(n) => write!(f, "cycle:{n}"),
            GraphSpec::Star(q) => write!(f, "star:{q}"),
            GraphSpec::Split(p, q) => write!(f, "split:{p},{q}"),
            GraphSpec::Bipartite(p, q) => write!(f, "bipartite:{p},{q}"),
            GraphSpec::GluedCliques(k, s) => write!(f, "gluedcliques:{k}x{s}"),
            GraphSpec::CliqueChain(k, t) => write!(f, "cliquechain:{k}x{t}"),
            GraphSpec::Ladder(n) => write!(f, "ladder:{n}"),
            GraphSpec::RandomTp { seed, steps } => write!(f, "randomtp:{seed},{steps}"),
            GraphSpec::RandomConnected { seed, n, density } => {
                write!(f, "random:{seed},{n},{density}")
            }
            GraphSpec::Cograph { seed, n } => write!(f, "cograph:{seed},{n}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_documented_specs() {
        assert_eq!("split:3,4".parse::<GraphSpec>().unwrap(), GraphSpec::Split(3, 4));
        assert_eq!("ladder:8".parse::<GraphSpec>().unwrap(), GraphSpec::Ladder(8));
        assert_eq!(
            "gluedcliques:2x5".parse::<GraphSpec>().unwrap(),
            GraphSpec::GluedCliques(2, 5)
        );
        let g = "gluedcliques:2x5".parse::<GraphSpec>().unwrap().build().unwrap();
        assert_eq!(g.m(), 20);
    }

    #[test]
    fn display_round_trips() {
        for s in ["star:5", "path:3", "bipartite:1,5", "cliquechain:3x4", "randomtp:9,7", "cograph:1,5"] {
            let spec: GraphSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!("star".parse::<GraphSpec>().is_err());
        assert!("blob:3".parse::<GraphSpec>().is_err());
        assert!("split:3".parse::<GraphSpec>().is_err());
        assert!("path:x".parse::<GraphSpec>().is_err());
    }
}
