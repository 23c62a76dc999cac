use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

/// Parses the edge-list text format: a header line `n m`, then `m` lines
/// `u v`. Anything after `#` on a line is ignored, as are blank lines.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        msg: "missing `n m` header".into(),
    })?;
    let [n, m] = parse_pair(header_line, header)?;

    let mut pairs = Vec::with_capacity(m);
    for (line, body) in lines {
        if pairs.len() == m {
            return Err(Error::Parse {
                line,
                msg: format!("more than the declared {m} edges"),
            });
        }
        let [u, v] = parse_pair(line, body)?;
        pairs.push((u, v));
    }
    if pairs.len() != m {
        return Err(Error::Parse {
            line: 0,
            msg: format!("header declares {m} edges, found {}", pairs.len()),
        });
    }
    Graph::from_edge_list(n, pairs)
}

fn parse_pair(line: usize, body: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = body.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse {
            line,
            msg: format!("expected two integers, got `{body}`"),
        });
    }
    let parse = |f: &str| {
        f.parse::<usize>().map_err(|e| Error::Parse {
            line,
            msg: format!("`{f}`: {e}"),
        })
    };
    Ok([parse(fields[0])?, parse(fields[1])?])
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Accepts either the JSON form or the edge-list text form.
pub fn parse_graph_text(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            msg: e.to_string(),
        })
    } else {
        parse_edge_list(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphKind;

    #[test]
    fn parses_with_comments() {
        let text = "# a path\n3 2\n0 1 # first\n\n1 2\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g, Graph::generate(GraphKind::Path(3)).unwrap());
    }

    #[test]
    fn edge_count_must_match_header() {
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 1\n1 2\n"),
            Err(Error::Parse { line: 3, .. })
        ));
    }

    #[test]
    fn malformed_lines() {
        assert!(matches!(
            parse_edge_list(""),
            Err(Error::Parse { line: 0, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 x\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 1 2\n"),
            Err(Error::Parse { .. })
        ));
        assert_eq!(parse_edge_list("2 1\n1 1\n"), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn round_trip_text() {
        let g = Graph::generate(GraphKind::CompleteBipartite(2, 3)).unwrap();
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn auto_detects_json() {
        let g = parse_graph_text(r#" {"n": 2, "edges": [[1, 0]]}"#).unwrap();
        assert_eq!(g.edges(), &[(0, 1)]);
    }
}
