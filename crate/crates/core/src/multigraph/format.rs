//! Graph ingestion: a line-based text format and a JSON alternative.
//!
//! Text: `#` starts a comment, an optional `nodes: a b c` line declares nodes
//! (needed for isolated ones), and every other nonblank line is `u w [label]`.
//! Repeating `u w` creates parallel edges.
//!
//! JSON: `{"nodes": ["a", ...], "edges": [["a", "b"], ["a", "b", "label"], ...]}`.

use serde::{Deserialize, Serialize};

use super::Multigraph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Text,
    Json,
}

/// Parses with the given format, or sniffs it (`{` means JSON) when `None`.
pub fn parse_graph(input: &str, format: Option<GraphFormat>) -> Result<Multigraph> {
    let format = format.unwrap_or_else(|| {
        if input.trim_start().starts_with('{') {
            GraphFormat::Json
        } else {
            GraphFormat::Text
        }
    });
    match format {
        GraphFormat::Text => parse_graph_text(input),
        GraphFormat::Json => parse_graph_json(input),
    }
}

pub fn parse_graph_text(input: &str) -> Result<Multigraph> {
    let mut g = Multigraph::new();
    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("nodes:") {
            for label in rest.split_whitespace() {
                g.ensure_node(label);
            }
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let (u, w, label) = match fields.as_slice() {
            [u, w] => (*u, *w, None),
            [u, w, l] => (*u, *w, Some(*l)),
            _ => {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected `u w [label]`, got `{line}`"),
                })
            }
        };
        g.add_edge_by_labels(u, w, label)
            .map_err(|e| at_line(e, line_no))?;
    }
    Ok(g)
}

fn at_line(err: Error, line: usize) -> Error {
    match err {
        Error::Parse { message, .. } => Error::Parse { line, message },
        other => other,
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct GraphJson {
    #[serde(default)]
    nodes: Vec<String>,
    edges: Vec<Vec<String>>,
}

pub fn parse_graph_json(input: &str) -> Result<Multigraph> {
    let doc: GraphJson = serde_json::from_str(input).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    let mut g = Multigraph::new();
    for label in &doc.nodes {
        g.add_node(label.as_str())?;
    }
    for (i, edge) in doc.edges.iter().enumerate() {
        match edge.as_slice() {
            [u, w] => g.add_edge_by_labels(u, w, None)?,
            [u, w, l] => g.add_edge_by_labels(u, w, Some(l))?,
            _ => {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("edge #{i} must have 2 or 3 entries"),
                })
            }
        };
    }
    Ok(g)
}

impl Multigraph {
    pub fn to_json(&self) -> serde_json::Value {
        let doc = GraphJson {
            nodes: self
                .nodes()
                .map(|v| self.node_label(v).to_string())
                .collect(),
            edges: self
                .edges()
                .map(|e| {
                    let [a, b] = self.endpoints(e);
                    vec![
                        self.node_label(a).to_string(),
                        self.node_label(b).to_string(),
                        self.edge_label(e).to_string(),
                    ]
                })
                .collect(),
        };
        serde_json::to_value(doc).expect("serializable")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_format_with_comments_and_parallels() {
        let g = parse_graph_text("# banana\nnodes: z\nv w\nv w second # trailing\n\n").unwrap();
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.node_label(g.nodes().next().unwrap()), "z");
        assert_eq!(g.isolated_nodes().count(), 1);
        assert!(g.edge_by_label("second").is_ok());
        assert!(g.edge_by_label("e1").is_ok());
    }

    #[test]
    fn text_format_errors_carry_line() {
        let err = parse_graph_text("a b\na\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_graph_text("a a\n").unwrap_err();
        assert!(matches!(err, Error::LoopEdge { .. }));
    }

    #[test]
    fn json_format() {
        let g = parse_graph(
            r#"{"nodes": ["a", "b", "c"], "edges": [["a", "b"], ["a", "b", "x"]]}"#,
            None,
        )
        .unwrap();
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert!(parse_graph_json(r#"{"edges": [["a"]]}"#).is_err());
        let again = parse_graph_json(&g.to_json().to_string()).unwrap();
        assert_eq!(again, g);
    }

    #[test]
    fn display_round_trips_through_text() {
        let mut g = Multigraph::banana(2);
        g.add_node("lonely").unwrap();
        let again = parse_graph_text(&g.to_string()).unwrap();
        assert_eq!(again.edge_count(), 2);
        assert_eq!(again.isolated_nodes().count(), 1);
    }
}
