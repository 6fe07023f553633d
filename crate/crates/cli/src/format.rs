//! Text formats: the edge-list graph file and the edit script.
//!
//! Graph file: first content line is a header `n m`, followed by exactly
//! `m` lines `u v` with `0 <= u,v < n`, `u != v`, each unordered pair at
//! most once. Lines starting with `#` are comments; blank lines are
//! ignored; CRLF input is accepted.
//!
//! Edit script: a header `k <size>` followed by one `add u v` or `del u v`
//! line per pair, canonical `u < v`, sorted.

use bicluster_core::{EditSet, Graph};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: expected header `n m`")]
    Header { line: usize },

    #[error("line {line}: expected edge line `u v`")]
    EdgeSyntax { line: usize },

    #[error("line {line}: vertex {v} out of range for {n} vertices")]
    VertexRange { line: usize, v: usize, n: usize },

    #[error("line {line}: self-loop at vertex {v}")]
    SelfLoop { line: usize, v: usize },

    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },

    #[error("line {line}: unexpected content after {m} edges")]
    TrailingContent { line: usize, m: usize },

    #[error("expected {m} edge lines, found only {found}")]
    MissingEdges { m: usize, found: usize },
}

/// Parses the edge-list format, reporting the first offending line.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut graph: Option<Graph> = None;
    let mut edges_seen = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match header {
            None => {
                if tokens.len() != 2 {
                    return Err(ParseError::Header { line });
                }
                let n: usize = tokens[0].parse().map_err(|_| ParseError::Header { line })?;
                let m: usize = tokens[1].parse().map_err(|_| ParseError::Header { line })?;
                header = Some((n, m));
                graph = Some(Graph::new(n));
            }
            Some((n, m)) => {
                if edges_seen == m {
                    return Err(ParseError::TrailingContent { line, m });
                }
                if tokens.len() != 2 {
                    return Err(ParseError::EdgeSyntax { line });
                }
                let u: usize = tokens[0]
                    .parse()
                    .map_err(|_| ParseError::EdgeSyntax { line })?;
                let v: usize = tokens[1]
                    .parse()
                    .map_err(|_| ParseError::EdgeSyntax { line })?;
                if u >= n {
                    return Err(ParseError::VertexRange { line, v: u, n });
                }
                if v >= n {
                    return Err(ParseError::VertexRange { line, v, n });
                }
                if u == v {
                    return Err(ParseError::SelfLoop { line, v });
                }
                let g = graph.as_mut().expect("graph exists once header is read");
                if g.has_edge(u, v) {
                    return Err(ParseError::DuplicateEdge {
                        line,
                        u: u.min(v),
                        v: u.max(v),
                    });
                }
                g.add_edge(u, v);
                edges_seen += 1;
            }
        }
    }

    match header {
        None => Err(ParseError::Header { line: 1 }),
        Some((_, m)) if edges_seen < m => Err(ParseError::MissingEdges {
            m,
            found: edges_seen,
        }),
        Some(_) => Ok(graph.expect("graph exists once header is read")),
    }
}

/// Prints a graph in the edge-list format, edges sorted canonically.
pub fn format_graph(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Prints an edit script against `g`: pairs currently present become `del`
/// lines, absent ones `add` lines.
pub fn format_edit_script(g: &Graph, edits: &EditSet) -> String {
    let mut out = format!("k {}\n", edits.len());
    for pair in edits {
        let verb = if g.has_edge(pair.u(), pair.v()) {
            "del"
        } else {
            "add"
        };
        out.push_str(&format!("{verb} {} {}\n", pair.u(), pair.v()));
    }
    out
}
