//! PGM plots and class summaries.

use std::fmt::Write as _;

use bentgraph_core::equivalence::{ClassDescriptor, MatrixKind};
use bentgraph_core::Classification;

/// Binary greymap (P5) of a square row-major matrix. Values are spread
/// linearly over 0..=255 with 0 mapped to black and the largest value to white.
pub fn pgm(values: &[u32], side: usize) -> Vec<u8> {
    assert_eq!(values.len(), side * side, "matrix is not {side}x{side}");
    let max = values.iter().copied().max().unwrap_or(0);
    let mut out = format!("P5\n{side} {side}\n255\n").into_bytes();
    out.extend(values.iter().map(|&v| {
        if max == 0 {
            0
        } else {
            (u64::from(v) * 255 / u64::from(max)) as u8
        }
    }));
    out
}

pub fn matrix_pgm(cl: &Classification, kind: MatrixKind) -> Vec<u8> {
    pgm(&cl.matrix(kind), cl.side())
}

pub fn parse_matrix_kind(name: &str) -> Option<MatrixKind> {
    match name {
        "bent" => Some(MatrixKind::Bent),
        "dual" => Some(MatrixKind::Dual),
        "wc" => Some(MatrixKind::WeightClass),
        _ => None,
    }
}

fn params_columns(d: &ClassDescriptor) -> [String; 4] {
    match d.params {
        Some(p) => [p.v, p.k, p.lambda, p.mu].map(|x| x.to_string()),
        None if d.complete => [
            d.vertices.to_string(),
            (d.vertices - 1).to_string(),
            String::new(),
            String::new(),
        ],
        None => [d.vertices.to_string(), String::new(), String::new(), String::new()],
    }
}

pub const CSV_HEADER: &str = "class,v,k,lambda,mu,rank2,clique_poly,frequency";

/// CSV rows; the clique polynomial is its coefficient list, constant first.
pub fn csv(descriptors: &[ClassDescriptor]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for d in descriptors {
        let [v, k, l, m] = params_columns(d);
        let coeffs: Vec<String> = d.clique.coeffs.iter().map(u64::to_string).collect();
        writeln!(
            out,
            "{},{v},{k},{l},{m},{},{},{}",
            d.class,
            d.rank2,
            coeffs.join(" "),
            d.frequency
        )
        .unwrap();
    }
    out
}

/// Human-readable table with the same columns.
pub fn table(descriptors: &[ClassDescriptor]) -> String {
    let rows: Vec<[String; 5]> = descriptors
        .iter()
        .map(|d| {
            let params = match d.params {
                Some(p) => p.to_string(),
                None if d.complete => format!("K{}", d.vertices),
                None => format!("not SRG ({} vertices)", d.vertices),
            };
            [
                d.class.to_string(),
                params,
                d.rank2.to_string(),
                d.clique.to_string(),
                d.frequency.to_string(),
            ]
        })
        .collect();
    let header = ["class", "parameters", "2-rank", "clique polynomial", "frequency"];
    let mut widths = header.map(str::len);
    for r in &rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let mut line = |cells: [&str; 5]| {
        let parts: Vec<String> = cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        writeln!(out, "{}", parts.join("  ").trim_end()).unwrap();
    };
    line(header);
    for r in &rows {
        line([&r[0], &r[1], &r[2], &r[3], &r[4]].map(String::as_str));
    }
    out
}
