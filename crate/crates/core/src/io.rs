//! File formats: labeled JSON (native), coloring JSON, graph6 and DOT.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{Color, ColorAssignment, ColoringError};
use crate::graph::{Edge, Graph, GraphError, Vertex, VertexLabel};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("i/o error on {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error("graph file declares n={declared} but lists {actual} labels")]
    CountMismatch { declared: usize, actual: usize },
    #[error("label {0} is not a vertex of the graph")]
    UnknownLabel(String),
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    pub labels: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringFile {
    pub k: Color,
    pub colors: BTreeMap<String, Color>,
}

impl GraphFile {
    pub fn from_graph(g: &Graph) -> Self {
        GraphFile {
            n: g.n(),
            labels: g.labels().iter().map(ToString::to_string).collect(),
            edges: g.labeled_edges().into_iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph, IoError> {
        if self.n != self.labels.len() {
            return Err(IoError::CountMismatch { declared: self.n, actual: self.labels.len() });
        }
        let labels = self.labels.iter().map(|s| s.parse::<VertexLabel>()).collect::<Result<Vec<_>, _>>()?;
        let edges =
            self.edges.iter().map(|[a, b]| Ok((a.parse()?, b.parse()?))).collect::<Result<Vec<_>, GraphError>>()?;
        Ok(Graph::from_labels(labels, &edges)?)
    }
}

impl ColoringFile {
    pub fn from_assignment(g: &Graph, c: &ColorAssignment) -> Self {
        ColoringFile { k: c.k(), colors: c.iter().map(|(v, col)| (g.label(v).to_string(), col)).collect() }
    }

    pub fn to_assignment(&self, g: &Graph) -> Result<ColorAssignment, IoError> {
        let mut c = ColorAssignment::new(self.k);
        for (name, &col) in &self.colors {
            let label: VertexLabel = name.parse()?;
            let v = g.id(&label).ok_or_else(|| IoError::UnknownLabel(name.clone()))?;
            c.set(v, col)?;
        }
        Ok(c)
    }
}

fn read(path: &Path) -> Result<String, IoError> {
    fs::read_to_string(path).map_err(|source| IoError::Io { path: path.to_path_buf(), source })
}

fn write(path: &Path, text: &str) -> Result<(), IoError> {
    fs::write(path, text).map_err(|source| IoError::Io { path: path.to_path_buf(), source })
}

pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string_pretty(&GraphFile::from_graph(g)).expect("graph file serializes")
}

pub fn graph_from_json(text: &str) -> Result<Graph, IoError> {
    serde_json::from_str::<GraphFile>(text)?.to_graph()
}

pub fn write_graph(path: &Path, g: &Graph) -> Result<(), IoError> {
    write(path, &graph_to_json(g))
}

pub fn read_graph(path: &Path) -> Result<Graph, IoError> {
    graph_from_json(&read(path)?)
}

pub fn coloring_to_json(g: &Graph, c: &ColorAssignment) -> String {
    serde_json::to_string_pretty(&ColoringFile::from_assignment(g, c)).expect("coloring serializes")
}

pub fn coloring_from_json(g: &Graph, text: &str) -> Result<ColorAssignment, IoError> {
    serde_json::from_str::<ColoringFile>(text)?.to_assignment(g)
}

pub fn write_coloring(path: &Path, g: &Graph, c: &ColorAssignment) -> Result<(), IoError> {
    write(path, &coloring_to_json(g, c))
}

pub fn read_coloring(path: &Path, g: &Graph) -> Result<ColorAssignment, IoError> {
    coloring_from_json(g, &read(path)?)
}

// graph6: header N(n), then the upper triangle column by column
// (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed six bits per byte, +63.

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
}

pub fn encode_graph6(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let mut out = Vec::new();
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    out
}

/// Decodes adjacency only; vertices are labeled `u1..un`.
pub fn decode_graph6(bytes: &[u8]) -> Result<Graph, IoError> {
    let bad = |m: &str| IoError::MalformedGraph6(m.to_string());
    let mut bytes = bytes;
    while let Some((&last, rest)) = bytes.split_last() {
        if last == b'\n' || last == b'\r' {
            bytes = rest;
        } else {
            break;
        }
    }
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(bad("byte outside 63..=126"));
    }
    let six = |b: &[u8]| b.iter().fold(0usize, |acc, &x| (acc << 6) | (x - 63) as usize);
    let (n, body) = match bytes {
        [] => return Err(bad("empty input")),
        [126, 126, rest @ ..] if rest.len() >= 6 => (six(&rest[..6]), &rest[6..]),
        [126, rest @ ..] if rest.len() >= 3 && rest[0] != 126 => (six(&rest[..3]), &rest[3..]),
        [126, ..] => return Err(bad("truncated size header")),
        [b, rest @ ..] => ((*b - 63) as usize, rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(bad(&format!("expected {} data bytes for n={n}, got {}", bits.div_ceil(6), body.len())));
    }
    let mut edges: Vec<Edge> = Vec::new();
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[pos / 6] - 63;
            if byte >> (5 - pos % 6) & 1 == 1 {
                edges.push((i, j));
            }
            pos += 1;
        }
    }
    if pos % 6 != 0 && (body[pos / 6] - 63) & ((1 << (6 - pos % 6)) - 1) != 0 {
        return Err(bad("nonzero padding bits"));
    }
    Ok(Graph::from_edges(n, &edges)?)
}

fn labels_sidecar(path: &Path) -> PathBuf {
    path.with_extension("labels.json")
}

/// Writes `path` (graph6) plus a `.labels.json` sidecar with the vertex names.
pub fn write_graph6(path: &Path, g: &Graph) -> Result<(), IoError> {
    let mut text = String::from_utf8(encode_graph6(g)).expect("graph6 is ascii");
    text.push('\n');
    write(path, &text)?;
    let labels: Vec<String> = g.labels().iter().map(ToString::to_string).collect();
    write(&labels_sidecar(path), &serde_json::to_string(&labels)?)
}

/// Reads a graph6 file, restoring labels from the sidecar when present.
pub fn read_graph6(path: &Path) -> Result<Graph, IoError> {
    let g = decode_graph6(read(path)?.as_bytes())?;
    let sidecar = labels_sidecar(path);
    if !sidecar.exists() {
        return Ok(g);
    }
    let names: Vec<String> = serde_json::from_str(&read(&sidecar)?)?;
    if names.len() != g.n() {
        return Err(IoError::CountMismatch { declared: g.n(), actual: names.len() });
    }
    let labels = names.iter().map(|s| s.parse()).collect::<Result<Vec<VertexLabel>, _>>()?;
    let edges: Vec<_> = g.edges().into_iter().map(|(a, b)| (labels[a], labels[b])).collect();
    Ok(Graph::from_labels(labels, &edges)?)
}

/// DOT rendering: highlighted vertices are filled, colored vertices carry `c=<color>`.
pub fn export_dot(g: &Graph, coloring: &ColorAssignment, highlight: &BTreeSet<Vertex>) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in 0..g.n() {
        let name = g.label(v).to_string();
        let label = match coloring.get(v) {
            Some(c) => format!("{name}\\nc={c}"),
            None => name.clone(),
        };
        let style = if highlight.contains(&v) { ", style=filled, fillcolor=black, fontcolor=white" } else { "" };
        let _ = writeln!(out, "  \"{name}\" [label=\"{label}\"{style}];");
    }
    for (a, b) in g.labeled_edges() {
        let _ = writeln!(out, "  \"{a}\" -- \"{b}\";");
    }
    out.push_str("}\n");
    out
}
