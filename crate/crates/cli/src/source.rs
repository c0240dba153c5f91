//! Graph sources: edge-list files, graph6 strings or files, named families.

use std::path::Path;

use zfpoly::graph::{self, Graph};
use zfpoly::Error;

use crate::CliError;

/// A parsed `--family NAME:ARGS` value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Empty(usize),
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    Wheel(usize),
    Multipartite(Vec<usize>),
    Threshold(String),
    CycleChord(usize, usize, usize),
    SubdividedK4,
}

impl Family {
    pub fn parse(spec: &str) -> Result<Family, CliError> {
        let (name, args) = spec.split_once(':').unwrap_or((spec, ""));
        let num = |s: &str| -> Result<usize, CliError> {
            s.trim().parse().map_err(|_| CliError::usage(format!("bad number {s:?} in family {spec:?}")))
        };
        let fields: Vec<&str> = if args.is_empty() { vec![] } else { args.split(':').collect() };
        let one = || -> Result<usize, CliError> {
            match fields.as_slice() {
                [n] => num(n),
                _ => Err(CliError::usage(format!("family {name} takes one size, e.g. {name}:6"))),
            }
        };
        Ok(match name {
            "empty" => Family::Empty(one()?),
            "path" => Family::Path(one()?),
            "cycle" => Family::Cycle(one()?),
            "complete" => Family::Complete(one()?),
            "star" => Family::Star(one()?),
            "wheel" => Family::Wheel(one()?),
            "multipartite" => {
                let parts = args.split(',').map(num).collect::<Result<Vec<_>, _>>()?;
                Family::Multipartite(parts)
            }
            "threshold" => Family::Threshold(args.to_string()),
            "cycle-chord" => match fields.as_slice() {
                [n, i, j] => Family::CycleChord(num(n)?, num(i)?, num(j)?),
                _ => return Err(CliError::usage("cycle-chord takes n:i:j, e.g. cycle-chord:6:0:2")),
            },
            "subdivided-k4" => Family::SubdividedK4,
            _ => return Err(CliError::usage(format!("unknown family {name:?}"))),
        })
    }

    pub fn build(&self) -> Result<Graph, Error> {
        match self {
            Family::Empty(n) => graph::empty(*n),
            Family::Path(n) => graph::path(*n),
            Family::Cycle(n) => graph::cycle(*n),
            Family::Complete(n) => graph::complete(*n),
            Family::Star(n) => graph::star(*n),
            Family::Wheel(n) => graph::wheel(*n),
            Family::Multipartite(parts) => graph::complete_multipartite(parts),
            Family::Threshold(s) => graph::threshold_from_string(s),
            Family::CycleChord(n, i, j) => graph::cycle_plus_chord(*n, *i, *j),
            Family::SubdividedK4 => Ok(graph::subdivided_k4()),
        }
    }
}

pub enum Source {
    Graph(Graph),
    Family(Family, Graph),
}

impl Source {
    pub fn graph(&self) -> &Graph {
        match self {
            Source::Graph(g) | Source::Family(_, g) => g,
        }
    }

    pub fn family(&self) -> Option<&Family> {
        match self {
            Source::Family(f, _) => Some(f),
            Source::Graph(_) => None,
        }
    }
}

pub fn load(edge_list: Option<&Path>, graph6: Option<&str>, family: Option<&str>) -> Result<Source, CliError> {
    if let Some(path) = edge_list {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
        return Ok(Source::Graph(graph::from_edge_list_text(&text)?));
    }
    if let Some(arg) = graph6 {
        let path = Path::new(arg);
        let text = if path.is_file() {
            let body = std::fs::read_to_string(path)
                .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
            body.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or_default().to_string()
        } else {
            arg.to_string()
        };
        return Ok(Source::Graph(graph::from_graph6(&text)?));
    }
    if let Some(spec) = family {
        let fam = Family::parse(spec)?;
        let g = fam.build()?;
        return Ok(Source::Family(fam, g));
    }
    Err(CliError::usage("give one of --edge-list, --graph6 or --family"))
}
