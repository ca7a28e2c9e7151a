//! Text and JSON formats for graphs and complexes.
//!
//! ```text
//! graph 3            complex 3
//! v 2 x              v 2 x
//! e 0 1              f 0 1
//! e 1 2              f 2
//! ```
//!
//! Indices are 0-based; a vertex without a `v` line is labelled by its index. Blank
//! lines and lines starting with `#` are ignored. Emitted text is canonical: edges as
//! `u < v` in sorted order, facets as sorted index lists in sorted order, and `v` lines
//! only where the label differs from the index.

use std::collections::HashSet;

use crate::bitset::VSet;
use crate::complex::{ComplexJson, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphJson};

fn perr(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Non-blank, non-comment lines with 1-based line numbers.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, t)| !t.is_empty() && !t[0].starts_with('#'))
}

fn index(tok: &str, n: usize, line: usize) -> Result<usize> {
    if tok.starts_with('-') {
        return Err(perr(line, format!("negative index `{tok}`")));
    }
    let i: usize = tok
        .parse()
        .map_err(|_| perr(line, format!("`{tok}` is not an index")))?;
    if i >= n {
        return Err(perr(
            line,
            format!("index {i} out of range for {n} vertices"),
        ));
    }
    Ok(i)
}

type Lines<'a> = Vec<(usize, Vec<&'a str>)>;

/// Parse the header `<kind> <n>` and the `v` lines; returns the labels and the remaining lines.
fn header<'a>(
    kind: &str,
    mut it: impl Iterator<Item = (usize, Vec<&'a str>)>,
) -> Result<(Vec<String>, Lines<'a>)> {
    let (line, head) = it
        .next()
        .ok_or_else(|| perr(1, format!("missing `{kind} <n>` header")))?;
    if head.len() != 2 || head[0] != kind {
        return Err(perr(line, format!("expected `{kind} <n>`")));
    }
    let n: usize = head[1]
        .parse()
        .map_err(|_| perr(line, format!("`{}` is not a vertex count", head[1])))?;
    if n > VSet::CAPACITY {
        return Err(perr(
            line,
            format!("{n} vertices exceed the capacity of {}", VSet::CAPACITY),
        ));
    }
    let mut labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let mut relabeled = vec![false; n];
    let mut body = Vec::new();
    for (line, t) in it {
        if t[0] == "v" {
            if t.len() != 3 {
                return Err(perr(line, "expected `v <index> <label>`"));
            }
            let i = index(t[1], n, line)?;
            if std::mem::replace(&mut relabeled[i], true) {
                return Err(perr(line, format!("vertex {i} relabelled twice")));
            }
            labels[i] = t[2].to_string();
        } else {
            body.push((line, t));
        }
    }
    let mut seen = HashSet::new();
    if let Some(l) = labels.iter().find(|l| !seen.insert(l.as_str())) {
        return Err(perr(line, format!("duplicate label `{l}`")));
    }
    Ok((labels, body))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let (labels, body) = header("graph", lines(text))?;
    let n = labels.len();
    let mut g = Graph::edgeless(labels).map_err(|e| perr(1, e.to_string()))?;
    for (line, t) in body {
        if t[0] != "e" || t.len() != 3 {
            return Err(perr(line, "expected `e <u> <v>`"));
        }
        let (u, v) = (index(t[1], n, line)?, index(t[2], n, line)?);
        g.add_edge_idx(u, v)
            .map_err(|e| perr(line, e.to_string()))?;
    }
    Ok(g)
}

fn vertex_lines(labels: &[String]) -> String {
    labels
        .iter()
        .enumerate()
        .filter(|(i, l)| **l != i.to_string())
        .map(|(i, l)| format!("v {i} {l}\n"))
        .collect()
}

pub fn emit_graph(g: &Graph) -> String {
    let mut s = format!("graph {}\n", g.n());
    s.push_str(&vertex_lines(g.labels()));
    for (u, v) in g.edges() {
        s.push_str(&format!("e {u} {v}\n"));
    }
    s
}

/// Every declared vertex must lie in a facet; non-maximal facets are dropped.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let (labels, body) = header("complex", lines(text))?;
    let n = labels.len();
    let mut facets = Vec::new();
    let mut used = VSet::empty();
    for (line, t) in body {
        if t[0] != "f" {
            return Err(perr(line, "expected `f <i1> <i2> ...`"));
        }
        let mut f = VSet::empty();
        for tok in &t[1..] {
            let i = index(tok, n, line)?;
            if f.contains(i) {
                return Err(perr(line, format!("vertex {i} repeated in a facet")));
            }
            f.insert(i);
        }
        used = used.union(f);
        facets.push(f);
    }
    if let Some(v) = VSet::full(n).difference(used).first() {
        return Err(perr(1, format!("vertex {v} lies in no facet")));
    }
    SimplicialComplex::from_facets(labels, facets).map_err(|e| perr(1, e.to_string()))
}

pub fn emit_complex(c: &SimplicialComplex) -> String {
    let mut s = format!("complex {}\n", c.n());
    s.push_str(&vertex_lines(c.labels()));
    let mut facets: Vec<Vec<usize>> = c.facets().iter().map(|f| f.iter().collect()).collect();
    facets.sort();
    for f in facets {
        let idx: Vec<String> = f.iter().map(ToString::to_string).collect();
        s.push_str(&if idx.is_empty() {
            "f\n".to_string()
        } else {
            format!("f {}\n", idx.join(" "))
        });
    }
    s
}

fn json_err(e: serde_json::Error) -> Error {
    perr(e.line(), e.to_string())
}

pub fn parse_graph_json(text: &str) -> Result<Graph> {
    Graph::try_from(serde_json::from_str::<GraphJson>(text).map_err(json_err)?)
}

pub fn emit_graph_json(g: &Graph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("plain data serializes")
}

pub fn parse_complex_json(text: &str) -> Result<SimplicialComplex> {
    SimplicialComplex::try_from(serde_json::from_str::<ComplexJson>(text).map_err(json_err)?)
}

pub fn emit_complex_json(c: &SimplicialComplex) -> String {
    let mut j = ComplexJson::from(c);
    j.facets.sort();
    serde_json::to_string(&j).expect("plain data serializes")
}

/// Either kind of input, told apart by the header or the JSON keys.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    Graph(Graph),
    Complex(SimplicialComplex),
}

pub fn parse_any(text: &str) -> Result<Input> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let v: serde_json::Value = serde_json::from_str(text).map_err(json_err)?;
        return if v.get("facets").is_some() {
            parse_complex_json(text).map(Input::Complex)
        } else {
            parse_graph_json(text).map(Input::Graph)
        };
    }
    match lines(text).next() {
        Some((_, t)) if t[0] == "complex" => parse_complex(text).map(Input::Complex),
        _ => parse_graph(text).map(Input::Graph),
    }
}
