//! Plain-text edge-list I/O and format-agnostic graph reading.
//!
//! The edge-list dialect: an optional first line `n <N>` pins the vertex
//! count (needed to keep isolated vertices), every other line is `u v`,
//! `#` starts a comment, and blank lines are skipped.  Without an `n` line
//! the order is one plus the largest endpoint (zero for an empty file).

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::graph6::{parse_graph6, Graph6Error};

/// Errors raised by the text readers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    /// An edge-list line is neither `u v`, an `n <N>` first line, a comment,
    /// nor blank.  Lines are counted from 1 including blanks and comments.
    #[error("edge list line {line}: cannot parse {text:?}")]
    BadEdgeLine { line: usize, text: String },
    /// The parsed lines do not form a simple graph.
    #[error(transparent)]
    BadGraph(#[from] GraphError),
    /// The input matches neither supported format.
    #[error("input is neither graph6 ({graph6}) nor an edge list ({edge_list})")]
    Unrecognized {
        graph6: Graph6Error,
        edge_list: String,
    },
}

/// Parses the edge-list dialect described in the module docs.
pub fn parse_edge_list(text: &str) -> Result<Graph, IoError> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut saw_content = false;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = || IoError::BadEdgeLine {
            line: i + 1,
            text: raw.trim().to_string(),
        };
        let mut tokens = line.split_whitespace();
        match (tokens.next(), tokens.next(), tokens.next()) {
            (Some("n"), Some(count), None) if !saw_content => {
                n = Some(count.parse().map_err(|_| bad())?);
            }
            (Some(u), Some(v), None) => {
                edges.push((u.parse().map_err(|_| bad())?, v.parse().map_err(|_| bad())?));
            }
            _ => return Err(bad()),
        }
        saw_content = true;
    }
    let n = n.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Ok(Graph::from_edges(n, &edges)?)
}

/// Writes a graph in the edge-list dialect, always pinning the order with an
/// `n <N>` first line so the round trip keeps isolated vertices.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Reads a graph from text in either supported format: graph6 is tried
/// first, then the edge-list dialect.
///
/// The formats cannot collide — edge-list lines contain whitespace, which
/// graph6 forbids — so the order only decides which error surfaces.
pub fn parse_any(text: &str) -> Result<Graph, IoError> {
    let graph6 = match parse_graph6(text) {
        Ok(g) => return Ok(g),
        Err(e) => e,
    };
    parse_edge_list(text).map_err(|edge_list| IoError::Unrecognized {
        graph6,
        edge_list: edge_list.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_bare_edge_lines() {
        let g = parse_edge_list("0 1\n1 2\n2 3\n").unwrap();
        assert_eq!((g.n(), g.edge_count()), (4, 3));
        assert!(g.has_edge(1, 2));
    }

    #[test]
    fn n_line_pins_order() {
        let g = parse_edge_list("n 5\n0 1\n").unwrap();
        assert_eq!((g.n(), g.edge_count()), (5, 1));
        assert_eq!(g.degree(4), 0);
    }

    #[test]
    fn skips_comments_and_blanks() {
        let g = parse_edge_list("# header\n\n0 1  # trailing note\n\n# bye\n").unwrap();
        assert_eq!((g.n(), g.edge_count()), (2, 1));
    }

    #[test]
    fn empty_text_is_order_zero() {
        assert_eq!(parse_edge_list("").unwrap().n(), 0);
        assert_eq!(parse_edge_list("# only comments\n").unwrap().n(), 0);
    }

    #[test]
    fn rejects_malformed_lines() {
        assert_eq!(
            parse_edge_list("0 1 2\n"),
            Err(IoError::BadEdgeLine {
                line: 1,
                text: "0 1 2".into()
            })
        );
        assert_eq!(
            parse_edge_list("0 1\na b\n"),
            Err(IoError::BadEdgeLine {
                line: 2,
                text: "a b".into()
            })
        );
        // An n line is only recognized first.
        assert!(matches!(
            parse_edge_list("0 1\nn 9\n"),
            Err(IoError::BadEdgeLine { line: 2, .. })
        ));
    }

    #[test]
    fn propagates_graph_errors() {
        assert_eq!(
            parse_edge_list("n 2\n0 2\n"),
            Err(IoError::BadGraph(GraphError::IndexOutOfRange {
                index: 2,
                n: 2
            }))
        );
        assert_eq!(
            parse_edge_list("1 1\n"),
            Err(IoError::BadGraph(GraphError::LoopEdge(1)))
        );
    }

    #[test]
    fn edge_list_round_trip_keeps_isolated_vertices() {
        let g = Graph::from_edges(6, &[(0, 2), (2, 5)]).unwrap();
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
        let empty = Graph::empty(3);
        assert_eq!(to_edge_list(&empty), "n 3\n");
        assert_eq!(parse_edge_list("n 3\n").unwrap(), empty);
    }

    #[test]
    fn parse_any_accepts_both_formats() {
        assert_eq!(parse_any("C~").unwrap().edge_count(), 6);
        assert_eq!(parse_any("0 1\n").unwrap().edge_count(), 1);
        assert!(matches!(
            parse_any("]]]]"),
            Err(IoError::Unrecognized { .. })
        ));
    }
}
