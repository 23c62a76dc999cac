//! JSON and CSV renderings. Every float is rounded to 15 significant digits.

use abs_spectra::indices::IndexKind;
use abs_spectra::linalg::{Polynomial, Spectrum, SymMatrix};
use abs_spectra::numfmt::{fmt_sig, round_all, round_sig};
use abs_spectra::{Graph, Indices};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("output serialises") + "\n"
}

fn csv(header: &str, rows: impl IntoIterator<Item = String>) -> String {
    let mut out = format!("{header}\n");
    for row in rows {
        out.push_str(&row);
        out.push('\n');
    }
    out
}

pub fn graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Json => to_json(g),
        Format::Csv => csv("u,v", g.edges().iter().map(|(u, v)| format!("{u},{v}"))),
    }
}

pub fn matrix(m: &SymMatrix, format: Format) -> String {
    let m = m.as_matrix();
    match format {
        Format::Json => {
            let rows: Vec<Vec<f64>> = m.to_rows().iter().map(|r| round_all(r)).collect();
            to_json(&json!({ "order": m.rows(), "rows": rows }))
        }
        Format::Csv => m.to_csv_with(fmt_sig),
    }
}

pub fn spectrum(s: &Spectrum, format: Format) -> String {
    match format {
        Format::Json => to_json(&json!({ "spectrum": round_all(s.values()) })),
        Format::Csv => csv("eigenvalue", s.iter().map(fmt_sig)),
    }
}

/// `trace_sq` is the sum of squared eigenvalues; `harmonic_check` its
/// combinatorial value.
pub fn energy(s: &Spectrum, harmonic_check: f64, format: Format) -> String {
    let (energy, trace_sq) = (s.energy(), s.sum_of_squares());
    match format {
        Format::Json => to_json(&json!({
            "spectrum": round_all(s.values()),
            "energy": round_sig(energy),
            "trace_sq": round_sig(trace_sq),
            "harmonic_check": round_sig(harmonic_check),
        })),
        Format::Csv => csv(
            "energy,trace_sq,harmonic_check",
            [format!(
                "{},{},{}",
                fmt_sig(energy),
                fmt_sig(trace_sq),
                fmt_sig(harmonic_check)
            )],
        ),
    }
}

pub fn indices(ix: &Indices, format: Format) -> String {
    match format {
        Format::Json => {
            let map: serde_json::Map<String, Value> = IndexKind::ALL
                .iter()
                .map(|&k| (k.name().to_string(), json!(round_sig(ix.get(k)))))
                .collect();
            to_json(&map)
        }
        Format::Csv => csv(
            "index,value",
            IndexKind::ALL
                .iter()
                .map(|&k| format!("{},{}", k.name(), fmt_sig(ix.get(k)))),
        ),
    }
}

pub fn charpoly(via: &str, p: &Polynomial, format: Format) -> String {
    match format {
        Format::Json => to_json(&json!({
            "via": via,
            "degree": p.degree(),
            "coefficients": round_all(p.coeffs()),
        })),
        Format::Csv => csv(
            "power,coefficient",
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(i, &c)| format!("{i},{}", fmt_sig(c))),
        ),
    }
}
