//! Text and JSON encodings of complexes, graphs, point configurations,
//! cuts and reports.
//!
//! JSON output always has sorted keys and no whitespace, so equal values
//! give byte-identical files.

use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::complex::{BoundaryComplex, ComplexError};
use crate::cuts::{Cut, CutError, Graph};
use crate::hull::{HullError, PointConfiguration};
use crate::verify::VerificationReport;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: invalid JSON: {message}")]
    Json { line: usize, message: String },
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Graph(#[from] CutError),
    #[error(transparent)]
    Points(#[from] HullError),
    #[error("CSV output: {0}")]
    Csv(#[from] csv::Error),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, message: message.into() }
}

/// Compact JSON with object keys in sorted order.
pub fn canonical_json<T: Serialize>(value: &T) -> String {
    // serde_json's Map is a BTreeMap, so going through Value sorts keys.
    let value = serde_json::to_value(value).expect("serializable");
    serde_json::to_string(&value).expect("Value serializes")
}

/// Indented variant of [`canonical_json`].
pub fn canonical_json_pretty<T: Serialize>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("serializable");
    serde_json::to_string_pretty(&value).expect("Value serializes")
}

/// Non-empty lines with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty())
}

fn parse_numbers<T: FromStr>(line: usize, text: &str) -> Result<Vec<T>, FormatError> {
    text.split_whitespace()
        .map(|tok| tok.parse().map_err(|_| syntax(line, format!("expected a non-negative integer, found `{tok}`"))))
        .collect()
}

fn header(line: usize, text: &str, what: &str) -> Result<(usize, usize), FormatError> {
    match parse_numbers::<usize>(line, text)?.as_slice() {
        &[a, b] => Ok((a, b)),
        _ => Err(syntax(line, format!("header must be `{what}`"))),
    }
}

// ---- complexes ----

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawComplex {
    dim: usize,
    n: usize,
    facets: Vec<Vec<usize>>,
}

/// `{"dim":d,"facets":[[...],...],"n":n}`.
pub fn complex_to_json(c: &BoundaryComplex) -> String {
    canonical_json(c)
}

pub fn complex_from_json(text: &str) -> Result<BoundaryComplex, FormatError> {
    let raw: RawComplex = serde_json::from_str(text)
        .map_err(|e| FormatError::Json { line: e.line(), message: e.to_string() })?;
    if let Some(f) = raw.facets.iter().find(|f| f.len() != raw.dim) {
        return Err(syntax(1, format!("facet {f:?} has {} vertices, expected {}", f.len(), raw.dim)));
    }
    Ok(BoundaryComplex::new(raw.dim, raw.n, raw.facets)?)
}

/// First line `d n`, then one facet per line.
pub fn complex_to_text(c: &BoundaryComplex) -> String {
    let mut out = format!("{} {}\n", c.dim(), c.vertex_count());
    for f in c.facets() {
        let line: Vec<String> = f.vertices().iter().map(ToString::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn complex_from_text(text: &str) -> Result<BoundaryComplex, FormatError> {
    let mut lines = content_lines(text);
    let (line, first) = lines.next().ok_or_else(|| syntax(1, "empty input"))?;
    let (dim, n) = header(line, first, "d n")?;
    let mut facets = Vec::new();
    for (line, text) in lines {
        let facet: Vec<usize> = parse_numbers(line, text)?;
        if facet.len() != dim {
            return Err(syntax(line, format!("facet has {} vertices, expected {dim}", facet.len())));
        }
        if let Some(&v) = facet.iter().find(|&&v| v >= n) {
            return Err(syntax(line, format!("vertex {v} out of range 0..{n}")));
        }
        if facet.iter().collect::<std::collections::BTreeSet<_>>().len() != dim {
            return Err(syntax(line, "facet repeats a vertex"));
        }
        facets.push(facet);
    }
    Ok(BoundaryComplex::new(dim, n, facets)?)
}

/// JSON when the input starts with `{`, text otherwise.
pub fn parse_complex(text: &str) -> Result<BoundaryComplex, FormatError> {
    if text.trim_start().starts_with('{') {
        complex_from_json(text)
    } else {
        complex_from_text(text)
    }
}

// ---- graphs ----

/// First line `n m`, then `m` lines `u v` with `u < v`, sorted.
pub fn graph_to_text(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.vertex_count(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn graph_from_text(text: &str) -> Result<Graph, FormatError> {
    let mut lines = content_lines(text);
    let (line, first) = lines.next().ok_or_else(|| syntax(1, "empty input"))?;
    let (n, m) = header(line, first, "n m")?;
    let mut edges = Vec::with_capacity(m);
    let mut last_line = line;
    for (line, text) in lines {
        last_line = line;
        let (u, v) = match parse_numbers::<usize>(line, text)?.as_slice() {
            &[u, v] => (u, v),
            _ => return Err(syntax(line, "edge line must be `u v`")),
        };
        if u >= n || v >= n {
            return Err(syntax(line, format!("vertex out of range 0..{n}")));
        }
        if u == v {
            return Err(syntax(line, format!("self-loop at {u}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(syntax(last_line, format!("header promises {m} edges, found {}", edges.len())));
    }
    let mut seen = std::collections::BTreeSet::new();
    for (i, &(u, v)) in edges.iter().enumerate() {
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(syntax(edge_line(text, i), format!("repeated edge {{{u}, {v}}}")));
        }
    }
    Ok(Graph::from_edges(n, edges)?)
}

fn edge_line(text: &str, index: usize) -> usize {
    content_lines(text).nth(index + 1).map_or(0, |(line, _)| line)
}

// ---- points ----

/// First line `d n`, then `n` lines of `d` rationals (`p/q` or integers).
pub fn points_to_text(c: &PointConfiguration) -> String {
    let mut out = format!("{} {}\n", c.dim(), c.len());
    for p in c.points() {
        let line: Vec<String> = p.iter().map(ToString::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn points_from_text(text: &str) -> Result<PointConfiguration, FormatError> {
    let mut lines = content_lines(text);
    let (line, first) = lines.next().ok_or_else(|| syntax(1, "empty input"))?;
    let (dim, n) = header(line, first, "d n")?;
    let mut points = Vec::with_capacity(n);
    let mut last_line = line;
    for (line, text) in lines {
        last_line = line;
        let coords = text
            .split_whitespace()
            .map(|tok| {
                BigRational::from_str(tok).map_err(|e| syntax(line, format!("bad rational `{tok}`: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if coords.len() != dim {
            return Err(syntax(line, format!("point has {} coordinates, expected {dim}", coords.len())));
        }
        points.push(coords);
    }
    if points.len() != n {
        return Err(syntax(last_line, format!("header promises {n} points, found {}", points.len())));
    }
    Ok(PointConfiguration::new(dim, points)?)
}

// ---- cuts and reports ----

/// `{"crossing":[[u,v],...],"side":[...],"size":s,"trivial":b}`.
pub fn cut_to_json(cut: &Cut) -> String {
    canonical_json(cut)
}

/// One row per report: claim, instances, failures, min observed, passed.
pub fn reports_to_csv(reports: &[VerificationReport]) -> Result<String, FormatError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["claim", "instances", "failures", "min_observed", "passed"])?;
    for r in reports {
        w.write_record([
            r.claim.clone(),
            r.instances.to_string(),
            r.failures.len().to_string(),
            r.min_observed.map_or_else(String::new, |m| m.to_string()),
            r.passed.to_string(),
        ])?;
    }
    let bytes = w.into_inner().map_err(|e| csv::Error::from(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("CSV of ASCII fields"))
}

/// `{"passed":b,"reports":[...]}`.
pub fn reports_to_json(reports: &[VerificationReport], pretty: bool) -> String {
    let value = serde_json::json!({
        "passed": reports.iter().all(|r| r.passed),
        "reports": reports,
    });
    if pretty {
        canonical_json_pretty(&value)
    } else {
        canonical_json::<Value>(&value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cyclic, ladder_stacked, simplex};
    use proptest::prelude::*;

    #[test]
    fn complex_json_layout() {
        let c = simplex(2).unwrap();
        assert_eq!(complex_to_json(&c), r#"{"dim":2,"facets":[[0,1],[0,2],[1,2]],"n":3}"#);
        assert_eq!(complex_to_text(&c), "2 3\n0 1\n0 2\n1 2\n");
    }

    #[test]
    fn complex_round_trips() {
        for c in [simplex(4).unwrap(), cyclic(4, 8).unwrap(), ladder_stacked(3).unwrap().complex] {
            assert_eq!(complex_from_json(&complex_to_json(&c)).unwrap(), c);
            assert_eq!(complex_from_text(&complex_to_text(&c)).unwrap(), c);
            assert_eq!(complex_to_json(&parse_complex(&complex_to_json(&c)).unwrap()), complex_to_json(&c));
        }
    }

    #[test]
    fn complex_errors_name_lines() {
        let err = complex_from_text("3 4\n0 1 2\n0 1\n").unwrap_err();
        assert!(err.to_string().starts_with("line 3:"), "{err}");
        let err = complex_from_text("3 4\n0 1 2\n\n0 1 9\n").unwrap_err();
        assert!(err.to_string().starts_with("line 4:"), "{err}");
        let err = complex_from_text("3 4\n0 x 2\n").unwrap_err();
        assert!(err.to_string().starts_with("line 2:"), "{err}");
        let err = complex_from_json("{\"dim\": 3,\n \"n\": 4,\n \"facets\": [[0,1,2],]}").unwrap_err();
        assert!(err.to_string().starts_with("line 3:"), "{err}");
    }

    #[test]
    fn graph_text() {
        let g = Graph::cycle(4);
        let text = graph_to_text(&g);
        assert_eq!(text, "4 4\n0 1\n0 3\n1 2\n2 3\n");
        assert_eq!(graph_from_text(&text).unwrap(), g);
        assert!(graph_from_text("3 2\n0 1\n").unwrap_err().to_string().contains("promises 2"));
        let err = graph_from_text("3 2\n0 1\n1 0\n").unwrap_err();
        assert!(err.to_string().starts_with("line 3:"), "{err}");
        assert!(graph_from_text("3 1\n1 1\n").is_err());
    }

    #[test]
    fn points_text() {
        let c = points_from_text("2 3\n0 0\n1/2 -3\n4/6 7\n").unwrap();
        assert_eq!(points_to_text(&c), "2 3\n0 0\n1/2 -3\n2/3 7\n");
        let err = points_from_text("2 2\n0 0\n1/0 1\n").unwrap_err();
        assert!(err.to_string().starts_with("line 3:"), "{err}");
        assert!(points_from_text("2 2\n0 0 0\n1 1\n").is_err());
    }

    #[test]
    fn cut_json_layout() {
        let cut = crate::cuts::crossing_edges(&Graph::path(3), &[0]).unwrap();
        assert_eq!(cut_to_json(&cut), r#"{"crossing":[[0,1]],"side":[0],"size":1,"trivial":true}"#);
    }

    proptest! {
        #[test]
        fn random_complexes_round_trip(d in 2usize..6, extra in 0usize..10, seed in any::<u64>()) {
            let c = crate::generators::random_stacked(d, d + 1 + extra, seed).unwrap();
            let json = complex_to_json(&c);
            prop_assert_eq!(complex_to_json(&complex_from_json(&json).unwrap()), json);
            let text = complex_to_text(&c);
            prop_assert_eq!(complex_to_text(&complex_from_text(&text).unwrap()), text);
            let g = c.skeleton_graph().unwrap();
            let gt = graph_to_text(&g);
            prop_assert_eq!(graph_to_text(&graph_from_text(&gt).unwrap()), gt);
        }

        #[test]
        fn points_round_trip(coords in proptest::collection::vec((-50i64..50, 1i64..20), 3..30)) {
            let d = 3;
            let n = coords.len() / d;
            prop_assume!(n >= 1);
            let points: Vec<Vec<BigRational>> = coords
                .chunks(d)
                .take(n)
                .map(|ch| ch.iter().map(|&(p, q)| BigRational::new(p.into(), q.into())).collect())
                .collect();
            let c = PointConfiguration::new(d, points).unwrap();
            let text = points_to_text(&c);
            let back = points_from_text(&text).unwrap();
            prop_assert_eq!(&back, &c);
            prop_assert_eq!(points_to_text(&back), text);
        }
    }
}
