//! Text formats.
//!
//! Edge list: a header line `n m`, then `m` lines `u v`.
//! Labeled graph: a header line `n m`, then `m` lines `u v lu lv` where `lu`
//! is the label of the edge at `u` and `lv` the label at `v`.
//!
//! Writers emit edges with `u < v`, sorted lexicographically. Readers accept
//! either endpoint order and ignore trailing blank lines.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, PortLabeling};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// A data line: its 1-based line number and parsed fields.
type Record = (usize, Vec<usize>);

/// Splits `text` into numbered lines of whitespace-separated integers with
/// exactly `width` fields, after an `n m` header.
fn parse_records(text: &str, width: usize) -> Result<(usize, Vec<Record>)> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let (hline, header) = lines
        .next()
        .filter(|(_, l)| !l.is_empty())
        .ok_or_else(|| parse_err(1, "missing header line \"n m\""))?;
    let head = parse_fields(hline, header)?;
    let [n, m] = head[..] else {
        return Err(parse_err(hline, "header must be \"n m\""));
    };
    let mut records = Vec::with_capacity(m);
    let mut trailing_blank = None;
    for (lineno, line) in lines {
        if line.is_empty() {
            trailing_blank.get_or_insert(lineno);
            continue;
        }
        if let Some(blank) = trailing_blank {
            return Err(parse_err(blank, "blank line inside edge list"));
        }
        let fields = parse_fields(lineno, line)?;
        if fields.len() != width {
            return Err(parse_err(
                lineno,
                format!("expected {width} fields, found {}", fields.len()),
            ));
        }
        if records.len() == m {
            return Err(parse_err(
                lineno,
                format!("more than the declared {m} edges"),
            ));
        }
        records.push((lineno, fields));
    }
    if records.len() != m {
        return Err(parse_err(
            hline,
            format!("header declares {m} edges, found {}", records.len()),
        ));
    }
    Ok((n, records))
}

fn parse_fields(lineno: usize, line: &str) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| parse_err(lineno, format!("not a non-negative integer: {tok:?}")))
        })
        .collect()
}

fn build_edges(n: usize, records: &[(usize, Vec<usize>)]) -> Result<Graph> {
    if n == 0 {
        return Err(parse_err(1, "n must be at least 1"));
    }
    // Validate edge by edge so errors carry the offending line.
    let mut seen = std::collections::BTreeSet::new();
    for (lineno, f) in records {
        let (u, v) = (f[0], f[1]);
        let err = if u >= n || v >= n {
            Some(Error::InvalidVertex {
                vertex: u.max(v),
                n,
            })
        } else if u == v {
            Some(Error::InvalidEdge(u, v))
        } else if !seen.insert((u.min(v), u.max(v))) {
            Some(Error::DuplicateEdge(u, v))
        } else {
            None
        };
        if let Some(e) = err {
            return Err(parse_err(*lineno, e.to_string()));
        }
    }
    let edges: Vec<_> = records.iter().map(|(_, f)| (f[0], f[1])).collect();
    Graph::new(n, &edges)
}

pub fn read_graph(text: &str) -> Result<Graph> {
    let (n, records) = parse_records(text, 2)?;
    build_edges(n, &records)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn read_labeled(text: &str) -> Result<(Graph, PortLabeling)> {
    let (n, records) = parse_records(text, 4)?;
    let g = build_edges(n, &records)?;
    let mut ports = Vec::with_capacity(2 * records.len());
    for (lineno, f) in &records {
        for label in [f[2], f[3]] {
            if label == 0 || label >= n {
                return Err(parse_err(
                    *lineno,
                    Error::InvalidLabel { n, label }.to_string(),
                ));
            }
        }
        ports.push((f[0], f[1], f[2]));
        ports.push((f[1], f[0], f[3]));
    }
    let lab = PortLabeling::new(n, ports)?;
    Ok((g, lab))
}

/// Serializes a labeled graph. Every edge of `g` must be labeled at both ends.
pub fn write_labeled(g: &Graph, lab: &PortLabeling) -> Result<String> {
    lab.check_against(g)?;
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let lu = lab.label(u, v).expect("checked");
        let lv = lab.label(v, u).expect("checked");
        let _ = writeln!(out, "{u} {v} {lu} {lv}");
    }
    Ok(out)
}
