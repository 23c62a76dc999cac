//! The `--graph` mini-grammar.
//!
//! ```text
//! spec := family | "file:" PATH | transform ":" spec [":k=" K]
//! family := "cycle:" N | "complete:" N | "path:" N | "star:" N
//!         | "complete_bipartite:" M ":" N
//! transform := "subdivision" | "semitotal_point" | "semitotal_line"
//!            | "splitting" | "shadow"
//! ```
//!
//! `splitting` and `shadow` take their `k=K` suffix at the end of the spec,
//! so `splitting:shadow:cycle:4:k=2:k=3` is `Spl_3(D_2(C_4))`.

use std::fs;

use abs_spectra::graph::parse_graph_text;
use abs_spectra::{Graph, GraphKind, TransformKind};

use crate::CliError;

pub fn family(kind: &str, params: &[&str]) -> Result<GraphKind, CliError> {
    let sizes = params
        .iter()
        .map(|p| {
            p.parse::<usize>()
                .map_err(|_| CliError::Usage(format!("`{p}` is not a vertex count")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let arity = |want: usize| {
        if sizes.len() == want {
            Ok(())
        } else {
            Err(CliError::Usage(format!(
                "`{kind}` takes {want} size parameter(s), got {}",
                sizes.len()
            )))
        }
    };
    match kind {
        "cycle" | "complete" | "path" | "star" => {
            arity(1)?;
            let n = sizes[0];
            Ok(match kind {
                "cycle" => GraphKind::Cycle(n),
                "complete" => GraphKind::Complete(n),
                "path" => GraphKind::Path(n),
                _ => GraphKind::Star(n),
            })
        }
        "complete_bipartite" => {
            arity(2)?;
            Ok(GraphKind::CompleteBipartite(sizes[0], sizes[1]))
        }
        other => Err(CliError::Usage(format!("unknown graph family `{other}`"))),
    }
}

pub fn load_file(path: &str) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(format!("{path}: {e}")))?;
    parse_graph_text(&text).map_err(|e| CliError::Io(format!("{path}: {e}")))
}

pub fn parse(spec: &str) -> Result<Graph, CliError> {
    let (head, rest) = spec.split_once(':').unwrap_or((spec, ""));
    match head {
        "file" => load_file(rest),
        "subdivision" | "semitotal_point" | "semitotal_line" | "splitting" | "shadow" => {
            let needs_k = matches!(head, "splitting" | "shadow");
            let (inner, k) = match rest.rsplit_once(':') {
                Some((inner, last)) if needs_k && last.starts_with("k=") => {
                    let k = last[2..]
                        .parse::<usize>()
                        .map_err(|_| CliError::Usage(format!("bad `{last}` in `{spec}`")))?;
                    (inner, Some(k))
                }
                _ => (rest, None),
            };
            let kind =
                TransformKind::from_name(head, k).map_err(|e| CliError::Usage(e.to_string()))?;
            let base = parse(inner)?;
            kind.apply(&base)
                .map_err(|e| CliError::Usage(e.to_string()))
        }
        _ => {
            let params: Vec<&str> = if rest.is_empty() {
                Vec::new()
            } else {
                rest.split(':').collect()
            };
            let kind = family(head, &params)?;
            Graph::generate(kind).map_err(|e| CliError::Usage(e.to_string()))
        }
    }
}
