//! Plain-text graph files: a `n m` header line followed by `m` edge lines
//! `u v` with 0-based ids. Blank lines and `#` comment lines are ignored.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphFileError {
    #[error("missing header line")]
    MissingHeader,
    #[error("malformed header {0:?}: expected 'n m'")]
    MalformedHeader(String),
    #[error("bad token {0:?} on line {1}")]
    BadToken(String, usize),
    #[error("malformed edge line {0} (expected 'u v')")]
    MalformedEdge(usize),
    #[error("edge count mismatch: header says {expected}, file has {got}")]
    EdgeCountMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub fn parse_graph_file(text: &str) -> Result<Graph, GraphFileError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'));

    let (header_no, header) = lines.next().ok_or(GraphFileError::MissingHeader)?;
    let mut parts = header.split_whitespace();
    let parse_count = |token: Option<&str>| -> Result<usize, GraphFileError> {
        let token = token.ok_or_else(|| GraphFileError::MalformedHeader(header.to_string()))?;
        token
            .parse::<usize>()
            .map_err(|_| GraphFileError::BadToken(token.to_string(), header_no))
    };
    let n = parse_count(parts.next())?;
    let m = parse_count(parts.next())?;
    if parts.next().is_some() {
        return Err(GraphFileError::MalformedHeader(header.to_string()));
    }

    let mut edges = Vec::with_capacity(m);
    for (line_no, line) in lines {
        let mut parts = line.split_whitespace();
        let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(GraphFileError::MalformedEdge(line_no));
        };
        let u = a
            .parse::<usize>()
            .map_err(|_| GraphFileError::BadToken(a.to_string(), line_no))?;
        let v = b
            .parse::<usize>()
            .map_err(|_| GraphFileError::BadToken(b.to_string(), line_no))?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(GraphFileError::EdgeCountMismatch {
            expected: m,
            got: edges.len(),
        });
    }
    Ok(Graph::new(n, &edges)?)
}

pub fn write_graph_file(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
