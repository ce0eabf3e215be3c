//! Labeled simple graphs backed by adjacency bitrows.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Vertex id: position in [`Graph::labels`].
pub type Vertex = usize;

/// Undirected edge stored with `0 < 1`.
pub type Edge = (Vertex, Vertex);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("duplicate vertex label {0}")]
    DuplicateLabel(VertexLabel),
    #[error("edge endpoint {0} is not a vertex of the graph")]
    UnknownEndpoint(String),
    #[error("loop edge at {0}")]
    LoopEdge(VertexLabel),
    #[error("malformed vertex label {0:?}")]
    MalformedLabel(String),
    #[error("edge {0}{1} is not present")]
    MissingEdge(VertexLabel, VertexLabel),
    #[error("edge {0}{1} is already present")]
    DuplicateEdge(VertexLabel, VertexLabel),
    #[error("adjacency audit failed: {0}")]
    Corrupt(String),
}

/// The five vertex families used by the constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    U,
    V,
    W,
    X,
    Y,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::U, Family::V, Family::W, Family::X, Family::Y];

    pub fn letter(self) -> char {
        match self {
            Family::U => 'u',
            Family::V => 'v',
            Family::W => 'w',
            Family::X => 'x',
            Family::Y => 'y',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.letter() == c)
    }
}

/// A structured vertex name such as `u3`, `v2'` or `x1`.
///
/// A primed label `i'` is a display form: the construction that created it
/// decides which absolute index it stands for (see [`Naming`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexLabel {
    pub family: Family,
    pub index: usize,
    pub primed: bool,
}

impl VertexLabel {
    pub fn new(family: Family, index: usize) -> Self {
        VertexLabel { family, index, primed: false }
    }

    pub fn primed(family: Family, index: usize) -> Self {
        VertexLabel { family, index, primed: true }
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.index)?;
        if self.primed {
            write!(f, "'")?;
        }
        Ok(())
    }
}

impl FromStr for VertexLabel {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GraphError::MalformedLabel(s.to_string());
        let mut chars = s.chars();
        let family = chars.next().and_then(Family::from_letter).ok_or_else(bad)?;
        let rest = chars.as_str();
        let (digits, primed) = match rest.strip_suffix('\'') {
            Some(d) => (d, true),
            None => (rest, false),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0') {
            return Err(bad());
        }
        let index = digits.parse().map_err(|_| bad())?;
        Ok(VertexLabel { family, index, primed })
    }
}

impl Serialize for VertexLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for VertexLabel {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Maps absolute layer indices `1..=k` to labels.
///
/// With a half-offset `h`, indices `h+1..=2h` render as primed `1'..=h'`;
/// everything else renders unprimed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Naming {
    pub half: Option<usize>,
}

impl Naming {
    pub const PLAIN: Naming = Naming { half: None };

    pub fn with_half(h: usize) -> Self {
        Naming { half: Some(h) }
    }

    pub fn label(&self, family: Family, index: usize) -> VertexLabel {
        match self.half {
            Some(h) if index > h && index <= 2 * h => VertexLabel::primed(family, index - h),
            _ => VertexLabel::new(family, index),
        }
    }

    /// Inverse of [`Naming::label`].
    pub fn absolute(&self, label: &VertexLabel) -> usize {
        match (label.primed, self.half) {
            (true, Some(h)) => label.index + h,
            _ => label.index,
        }
    }
}

pub(crate) fn norm(a: Vertex, b: Vertex) -> Edge {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Undirected simple graph with labeled vertices.
#[derive(Clone)]
pub struct Graph {
    labels: Vec<VertexLabel>,
    ids: HashMap<VertexLabel, Vertex>,
    adj: Vec<FixedBitSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n()).field("m", &self.edge_count()).finish()
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from distinct labels and an edge list given by label.
    pub fn from_labels(labels: Vec<VertexLabel>, edges: &[(VertexLabel, VertexLabel)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty();
        for l in labels {
            g.add_vertex(l)?;
        }
        for (a, b) in edges {
            let ia = g.id(a).ok_or_else(|| GraphError::UnknownEndpoint(a.to_string()))?;
            let ib = g.id(b).ok_or_else(|| GraphError::UnknownEndpoint(b.to_string()))?;
            if ia == ib {
                return Err(GraphError::LoopEdge(*a));
            }
            // repeated input edges collapse onto one
            g.set(ia, ib, true);
        }
        Ok(g)
    }

    /// Graph on `n` vertices labeled `u1..un` with edges given by id.
    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<Self, GraphError> {
        let mut g = Graph::empty();
        for i in 1..=n {
            g.add_vertex(VertexLabel::new(Family::U, i))?;
        }
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(GraphError::UnknownEndpoint(format!("#{}", a.max(b))));
            }
            if a == b {
                return Err(GraphError::LoopEdge(g.labels[a]));
            }
            g.set(a, b, true);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<Edge> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        Graph::from_edges(n, &edges).expect("complete graph is simple")
    }

    pub fn cycle(n: usize) -> Self {
        let edges: Vec<Edge> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("cycle of length >= 3 is simple")
    }

    pub(crate) fn empty() -> Self {
        Graph { labels: Vec::new(), ids: HashMap::new(), adj: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn label(&self, v: Vertex) -> VertexLabel {
        self.labels[v]
    }

    pub fn id(&self, label: &VertexLabel) -> Option<Vertex> {
        self.ids.get(label).copied()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.adj[a].contains(b)
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].ones()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.degrees().iter().sum::<usize>() / 2
    }

    /// All edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        (0..self.n()).flat_map(|a| self.adj[a].ones().filter(move |&b| b > a).map(move |b| (a, b))).collect()
    }

    pub fn is_regular(&self, r: usize) -> bool {
        (0..self.n()).all(|v| self.degree(v) == r)
    }

    /// Neighbour masks as `u64` words; `None` when `n > 64`.
    pub fn masks(&self) -> Option<Vec<u64>> {
        if self.n() > 64 {
            return None;
        }
        Some((0..self.n()).map(|v| self.adj[v].ones().fold(0u64, |m, b| m | (1u64 << b))).collect())
    }

    /// Checks symmetry and loop-freeness of the adjacency relation.
    pub fn audit(&self) -> Result<(), GraphError> {
        if self.adj.len() != self.n() || self.ids.len() != self.n() {
            return Err(GraphError::Corrupt("label/row count mismatch".into()));
        }
        for v in 0..self.n() {
            if self.adj[v].len() != self.n() {
                return Err(GraphError::Corrupt(format!("row {v} has wrong width")));
            }
            if self.adj[v].contains(v) {
                return Err(GraphError::LoopEdge(self.labels[v]));
            }
            for w in self.adj[v].ones() {
                if !self.adj[w].contains(v) {
                    return Err(GraphError::Corrupt(format!("asymmetric pair {}{}", self.labels[v], self.labels[w])));
                }
            }
        }
        Ok(())
    }

    /// Copy of the graph with the given edges removed.
    pub fn without_edges(&self, edges: &[Edge]) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        for &(a, b) in edges {
            g.remove_edge(a, b)?;
        }
        Ok(g)
    }

    /// Label pairs of every edge, in [`Graph::edges`] order.
    pub fn labeled_edges(&self) -> Vec<(VertexLabel, VertexLabel)> {
        self.edges().into_iter().map(|(a, b)| (self.labels[a], self.labels[b])).collect()
    }

    fn set(&mut self, a: Vertex, b: Vertex, on: bool) {
        self.adj[a].set(b, on);
        self.adj[b].set(a, on);
    }

    pub(crate) fn add_vertex(&mut self, label: VertexLabel) -> Result<Vertex, GraphError> {
        if self.ids.contains_key(&label) {
            return Err(GraphError::DuplicateLabel(label));
        }
        let v = self.n();
        self.labels.push(label);
        self.ids.insert(label, v);
        for row in &mut self.adj {
            row.grow(v + 1);
        }
        self.adj.push(FixedBitSet::with_capacity(v + 1));
        Ok(v)
    }

    pub(crate) fn add_edge(&mut self, a: Vertex, b: Vertex) -> Result<(), GraphError> {
        if a == b {
            return Err(GraphError::LoopEdge(self.labels[a]));
        }
        if self.has_edge(a, b) {
            return Err(GraphError::DuplicateEdge(self.labels[a], self.labels[b]));
        }
        self.set(a, b, true);
        Ok(())
    }

    pub(crate) fn remove_edge(&mut self, a: Vertex, b: Vertex) -> Result<(), GraphError> {
        if a == b || !self.has_edge(a, b) {
            return Err(GraphError::MissingEdge(self.labels[a], self.labels[b]));
        }
        self.set(a, b, false);
        Ok(())
    }

    /// Removes an isolated vertex; later ids shift down by one.
    pub(crate) fn remove_isolated_vertex(&mut self, v: Vertex) -> Result<(), GraphError> {
        if self.degree(v) != 0 {
            return Err(GraphError::Corrupt(format!("{} still has edges", self.labels[v])));
        }
        let keep: Vec<Vertex> = (0..self.n()).filter(|&w| w != v).collect();
        let mut g = Graph::empty();
        for &w in &keep {
            g.add_vertex(self.labels[w])?;
        }
        for (i, &a) in keep.iter().enumerate() {
            for (j, &b) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.set(i, j, true);
                }
            }
        }
        *self = g;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(i: usize) -> VertexLabel {
        VertexLabel::new(Family::U, i)
    }

    #[test]
    fn k2_from_labels() {
        let g = Graph::from_labels(vec![u(1), u(2)], &[(u(1), u(2))]).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges(), vec![(0, 1)]);
        assert!(g.is_regular(1));
    }

    #[test]
    fn empty_graph_on_three() {
        let g = Graph::from_labels(vec![u(1), u(2), u(3)], &[]).unwrap();
        assert_eq!(g.degrees(), vec![0, 0, 0]);
        assert!(g.is_regular(0));
    }

    #[test]
    fn k5_regular() {
        let labels: Vec<_> = (1..=5).map(u).collect();
        let edges: Vec<_> = (1..=5).flat_map(|a| (a + 1..=5).map(move |b| (u(a), u(b)))).collect();
        let g = Graph::from_labels(labels, &edges).unwrap();
        assert_eq!(g.edge_count(), 10);
        assert!(g.is_regular(4));
        let minus = g.without_edges(&[(0, 1)]).unwrap();
        assert!(!minus.is_regular(4));
    }

    #[test]
    fn make_graph_errors() {
        assert_eq!(Graph::from_labels(vec![u(1), u(1)], &[]), Err(GraphError::DuplicateLabel(u(1))));
        assert!(matches!(Graph::from_labels(vec![u(1)], &[(u(1), u(2))]), Err(GraphError::UnknownEndpoint(_))));
        assert_eq!(Graph::from_labels(vec![u(1)], &[(u(1), u(1))]), Err(GraphError::LoopEdge(u(1))));
    }

    #[test]
    fn label_rendering() {
        let l = VertexLabel::primed(Family::V, 2);
        assert_eq!(l.to_string(), "v2'");
        assert_eq!("v2'".parse::<VertexLabel>().unwrap(), l);
        assert_eq!("x1".parse::<VertexLabel>().unwrap(), VertexLabel::new(Family::X, 1));
        for bad in ["", "z1", "u", "u0", "u1''", "u-1", "U1", "u01"] {
            assert!(bad.parse::<VertexLabel>().is_err(), "{bad}");
        }
    }

    #[test]
    fn naming_half_offset() {
        let n = Naming::with_half(3);
        assert_eq!(n.label(Family::U, 3).to_string(), "u3");
        assert_eq!(n.label(Family::U, 4).to_string(), "u1'");
        assert_eq!(n.label(Family::U, 6).to_string(), "u3'");
        assert_eq!(n.label(Family::U, 7).to_string(), "u7");
        for i in 1..=7 {
            assert_eq!(n.absolute(&n.label(Family::V, i)), i);
        }
    }

    #[test]
    fn remove_isolated_vertex_shifts_ids() {
        let mut g = Graph::from_edges(3, &[(0, 2)]).unwrap();
        g.remove_edge(0, 2).unwrap();
        g.add_edge(0, 1).unwrap();
        g.remove_isolated_vertex(2).unwrap();
        assert_eq!(g.n(), 2);
        assert!(g.has_edge(0, 1));
        g.audit().unwrap();
    }
}
