//! Whitespace edge-list format: a header line `n <count>`, then one
//! `u v` pair per line with 0-indexed endpoints. `#` starts a comment
//! and blank lines are skipped. Duplicate edges collapse.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("missing `n <count>` header before line {line}")]
    MissingHeader { line: usize },
    #[error("line {line}: malformed header `{text}`")]
    BadHeader { line: usize, text: String },
    #[error("line {line}: expected `u v`, got `{text}`")]
    BadEdgeLine { line: usize, text: String },
    #[error("line {line}: vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { line: usize, vertex: usize, order: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("input is not valid UTF-8")]
    InvalidUtf8,
}

/// Parses a whole edge-list document into one graph.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut graph: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace();
        match graph {
            None => {
                if fields.next() != Some("n") {
                    return Err(EdgeListError::MissingHeader { line: line_no });
                }
                let count = fields
                    .next()
                    .and_then(|f| f.parse::<usize>().ok())
                    .filter(|_| fields.next().is_none())
                    .ok_or_else(|| EdgeListError::BadHeader { line: line_no, text: line.to_string() })?;
                graph = Some(Graph::edgeless(count));
            }
            Some(ref mut g) => {
                let endpoints: Option<(usize, usize)> = (|| {
                    let u = fields.next()?.parse().ok()?;
                    let v = fields.next()?.parse().ok()?;
                    if fields.next().is_some() {
                        return None;
                    }
                    Some((u, v))
                })();
                let (u, v) = endpoints
                    .ok_or_else(|| EdgeListError::BadEdgeLine { line: line_no, text: line.to_string() })?;
                g.add_edge(u, v).map_err(|e| match e {
                    crate::graph::GraphError::VertexOutOfRange { vertex, order } => {
                        EdgeListError::VertexOutOfRange { line: line_no, vertex, order }
                    }
                    crate::graph::GraphError::SelfLoop { vertex } => {
                        EdgeListError::SelfLoop { line: line_no, vertex }
                    }
                    other => unreachable!("add_edge cannot fail with {other:?}"),
                })?;
            }
        }
    }
    graph.ok_or(EdgeListError::MissingHeader { line: 1 })
}

/// Writes a graph in the same format `parse_edge_list` reads.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph6::{parse_graph6_record, Strictness};

    #[test]
    fn parses_a_path() {
        let g = parse_edge_list("n 4\n0 1\n1 2\n2 3\n").unwrap();
        assert_eq!(g, families::path(4).unwrap());
    }

    #[test]
    fn header_only_is_edgeless() {
        let g = parse_edge_list("n 2\n").unwrap();
        assert_eq!((g.order(), g.size()), (2, 0));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = parse_edge_list("n 3\n0 1\n0 1\n").unwrap();
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# a path\n\nn 4  # order\n0 1\n# middle\n1 2\n2 3\n";
        assert_eq!(parse_edge_list(text).unwrap(), families::path(4).unwrap());
    }

    #[test]
    fn error_cases() {
        assert_eq!(
            parse_edge_list("0 1\n"),
            Err(EdgeListError::MissingHeader { line: 1 })
        );
        assert_eq!(parse_edge_list(""), Err(EdgeListError::MissingHeader { line: 1 }));
        assert!(matches!(
            parse_edge_list("n x\n"),
            Err(EdgeListError::BadHeader { line: 1, .. })
        ));
        assert_eq!(
            parse_edge_list("n 3\n0 3\n"),
            Err(EdgeListError::VertexOutOfRange { line: 2, vertex: 3, order: 3 })
        );
        assert_eq!(
            parse_edge_list("n 3\n1 1\n"),
            Err(EdgeListError::SelfLoop { line: 2, vertex: 1 })
        );
        assert!(matches!(
            parse_edge_list("n 3\n0 1 2\n"),
            Err(EdgeListError::BadEdgeLine { line: 2, .. })
        ));
    }

    #[test]
    fn round_trip_through_writer() {
        let g = families::circulant(9, &[1, 2]).unwrap();
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn agrees_with_graph6_on_the_same_graph() {
        let from_text = parse_edge_list("n 4\n0 1\n1 2\n2 3\n").unwrap();
        let from_g6 = parse_graph6_record(b"Ch", Strictness::Strict).unwrap();
        assert_eq!(from_text, from_g6);
    }
}
