use std::fmt::Write as _;

use thiserror::Error;

use super::{Graph, GraphError};

/// Failure while reading the `p edge` text format.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error("missing `p edge <n> <m>` header")]
    MissingHeader,
    #[error("header announces {expected} edges but {found} were listed")]
    EdgeCount { expected: usize, found: usize },
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, msg: msg.into() }
}

impl Graph {
    /// Parses the DIMACS-like format: `c` comments, one `p edge <n> <m>`
    /// header, then `e <u> <v> [<weight>]` lines with 1-based vertex ids.
    pub fn parse(text: &str) -> Result<Graph, ParseError> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        // (u, v) pairs are checked here so the error carries a line number.
        let mut seen = std::collections::HashSet::new();

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let mut tok = raw.split_whitespace();
            let Some(kind) = tok.next() else { continue };
            match kind {
                "c" => continue,
                "p" => {
                    if header.is_some() {
                        return Err(syntax(line, "second header"));
                    }
                    if tok.next() != Some("edge") {
                        return Err(syntax(line, "expected `p edge <n> <m>`"));
                    }
                    let n = parse_usize(tok.next(), line, "vertex count")?;
                    let m = parse_usize(tok.next(), line, "edge count")?;
                    if tok.next().is_some() {
                        return Err(syntax(line, "trailing tokens after header"));
                    }
                    header = Some((n, m));
                }
                "e" => {
                    let Some((n, _)) = header else {
                        return Err(syntax(line, "edge before header"));
                    };
                    let a = parse_usize(tok.next(), line, "vertex id")?;
                    let b = parse_usize(tok.next(), line, "vertex id")?;
                    let weight = match tok.next() {
                        None => 1.0,
                        Some(w) => w.parse::<f64>().map_err(|_| syntax(line, format!("bad weight `{w}`")))?,
                    };
                    if tok.next().is_some() {
                        return Err(syntax(line, "trailing tokens after edge"));
                    }
                    for x in [a, b] {
                        if x == 0 || x > n {
                            return Err(ParseError::Graph {
                                line,
                                source: GraphError::VertexOutOfRange { vertex: x, n },
                            });
                        }
                    }
                    let (u, v) = (a - 1, b - 1);
                    let graph_err = |source| ParseError::Graph { line, source };
                    if u == v {
                        return Err(graph_err(GraphError::Loop(a)));
                    }
                    if !weight.is_finite() {
                        return Err(graph_err(GraphError::NonFiniteWeight(a, b)));
                    }
                    if !seen.insert((u.min(v), u.max(v))) {
                        return Err(graph_err(GraphError::DuplicateEdge(a.min(b), a.max(b))));
                    }
                    edges.push((u, v, weight));
                }
                other => return Err(syntax(line, format!("unknown line type `{other}`"))),
            }
        }

        let (n, m) = header.ok_or(ParseError::MissingHeader)?;
        if edges.len() != m {
            return Err(ParseError::EdgeCount { expected: m, found: edges.len() });
        }
        Graph::new(n, edges).map_err(|source| ParseError::Graph { line: 0, source })
    }

    /// Canonical text form: header, then edges sorted by `(u, v)`, 1-based.
    /// Weights equal to 1.0 are omitted.
    pub fn to_dimacs(&self) -> String {
        let mut out = String::new();
        writeln!(out, "p edge {} {}", self.n(), self.m()).unwrap();
        for e in self.edges() {
            if e.weight == 1.0 {
                writeln!(out, "e {} {}", e.u + 1, e.v + 1).unwrap();
            } else {
                writeln!(out, "e {} {} {}", e.u + 1, e.v + 1, e.weight).unwrap();
            }
        }
        out
    }
}

fn parse_usize(tok: Option<&str>, line: usize, what: &str) -> Result<usize, ParseError> {
    let t = tok.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    t.parse().map_err(|_| syntax(line, format!("bad {what} `{t}`")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = Graph::parse("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
        assert!(g.edges().iter().all(|e| e.weight == 1.0));
    }

    #[test]
    fn shield_file() {
        let mut text = String::from("c shield\np edge 12 15\n");
        for i in 1..=12 {
            text += &format!("e {} {}\n", i, i % 12 + 1);
        }
        text += "e 2 4\ne 6 8\ne 10 12\n";
        let g = Graph::parse(&text).unwrap();
        assert_eq!((g.n(), g.m()), (12, 15));
    }

    #[test]
    fn loop_is_rejected_with_line() {
        let err = Graph::parse("p edge 2 1\ne 1 1\n").unwrap_err();
        assert_eq!(err, ParseError::Graph { line: 2, source: GraphError::Loop(1) });
    }

    #[test]
    fn errors() {
        assert!(matches!(
            Graph::parse("p edge 2 2\ne 1 2\ne 2 1\n"),
            Err(ParseError::Graph { line: 3, source: GraphError::DuplicateEdge(1, 2) })
        ));
        assert!(matches!(Graph::parse("p edge 2 1\ne 1 3\n"), Err(ParseError::Graph { line: 2, .. })));
        assert!(matches!(Graph::parse("e 1 2\n"), Err(ParseError::Syntax { line: 1, .. })));
        assert_eq!(Graph::parse("c nothing\n"), Err(ParseError::MissingHeader));
        assert!(matches!(Graph::parse("p edge 3 2\ne 1 2\n"), Err(ParseError::EdgeCount { expected: 2, found: 1 })));
        assert!(matches!(Graph::parse("p edge 3 1\ne 1 x\n"), Err(ParseError::Syntax { line: 2, .. })));
    }

    #[test]
    fn weights_round_trip() {
        let text = "p edge 3 2\ne 1 2 -2.5\ne 2 3\n";
        let g = Graph::parse(text).unwrap();
        assert_eq!(g.weights(), vec![-2.5, 1.0]);
        assert_eq!(g.to_dimacs(), text);
    }
}
