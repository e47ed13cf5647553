//! Edge-list text format.
//!
//! One edge per line as two whitespace-separated non-negative integers.
//! `#` starts a comment; blank lines are ignored. Source IDs are compacted to
//! `0..n` in ascending numeric order.

use std::collections::BTreeMap;
use std::io::{self, BufRead, Write};

use symmine_core::graph::BuildStats;
use symmine_core::{Graph, VertexId};
use thiserror::Error;

/// Failure to read an edge list.
#[derive(Debug, Error)]
pub enum LoadError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("line {line}: `{token}` is not a vertex ID")]
    BadToken { line: usize, token: String },
    #[error("line {line}: negative vertex ID `{token}`")]
    NegativeId { line: usize, token: String },
    #[error("line {line}: expected two vertex IDs")]
    WrongArity { line: usize },
    #[error("edge list contains no edges")]
    Empty,
    #[error(transparent)]
    Graph(#[from] symmine_core::Error),
}

/// A loaded graph plus what was dropped while building it.
#[derive(Debug)]
pub struct Loaded {
    pub graph: Graph,
    pub stats: BuildStats,
}

fn parse_id(token: &str, line: usize) -> Result<u64, LoadError> {
    token.parse::<u64>().map_err(|_| {
        if token.starts_with('-') && token[1..].parse::<u64>().is_ok() {
            LoadError::NegativeId { line, token: token.to_owned() }
        } else {
            LoadError::BadToken { line, token: token.to_owned() }
        }
    })
}

/// Reads an edge list into a CSR graph.
pub fn load_edge_list<R: BufRead>(reader: R) -> Result<Loaded, LoadError> {
    let mut raw = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(LoadError::WrongArity { line: line_no });
        }
        raw.push((parse_id(tokens[0], line_no)?, parse_id(tokens[1], line_no)?));
    }
    if raw.is_empty() {
        return Err(LoadError::Empty);
    }
    let mut ids: BTreeMap<u64, VertexId> = raw.iter().flat_map(|&(u, v)| [(u, 0), (v, 0)]).collect();
    if ids.len() > VertexId::MAX as usize {
        return Err(symmine_core::Error::GraphTooLarge.into());
    }
    let mut originals = Vec::with_capacity(ids.len());
    for (next, (&source, slot)) in ids.iter_mut().enumerate() {
        *slot = next as VertexId;
        originals.push(source);
    }
    let (graph, stats) = Graph::from_edges(ids.len(), raw.iter().map(|(u, v)| (ids[u], ids[v])))?;
    Ok(Loaded { graph: graph.with_original_ids(originals), stats })
}

/// Writes every edge once as `u v` with `u < v`, using internal IDs.
pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> io::Result<()> {
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    out.flush()
}
