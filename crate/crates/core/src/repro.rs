//! Reference tables of the edges deleted when the `x` and `y` vertices of
//! the `k = 7` and `k = 8` fixed-degree constructions are added, and a
//! comparison against the edges this crate deletes.

use std::fmt::Write as _;

use crate::construct::{build_theorem2, build_theorem3, ConstructError};
use crate::graph::{Graph, VertexLabel};
use crate::trace::ConstructionTrace;

type Column = (&'static str, &'static [&'static str]);

/// `k = 7`, `s = 5`.
pub const TABLE_1: &[Column] = &[
    ("x1", &["u1 u1'", "u2 u2'", "u3 u3'", "v1 v1'", "v2 v2'", "v3 v3'"]),
    ("x2", &["u1 u2'", "u2 u3'", "u3 u1'", "v1 v2'", "v2 v3'", "v3 v1'"]),
    ("x3", &["u1 u3'", "u2 u1'", "u3 u2'", "v1 v3'", "v2 v1'", "v3 v2'"]),
    ("y1", &["u2' u3'", "v2 v3", "x1 v1", "x2 u2", "x3 u3", "v7 u1"]),
    ("y2", &["u1' u3'", "v1 v3", "x1 v2", "x2 u3", "x3 u1", "v7 u2"]),
];

/// `k = 8`, `s = 6`.
pub const TABLE_2: &[Column] = &[
    ("x1", &["u1 u2'", "u2 u3'", "u4 u1'", "v1 v1'", "v2 v2'", "v3 v3'", "u3 v4"]),
    ("x2", &["u1 u3'", "u3 u1'", "u4 u2'", "v1 v2'", "v2 v3'", "v4 v1'", "u2 v3"]),
    ("x3", &["u2 u1'", "u3 u2'", "u4 u3'", "v1 v3'", "v3 v1'", "v4 v2'", "u1 v2"]),
    ("y1", &["u2' u3'", "v1 v4", "v2' v3", "v2 v4'", "x1 u2", "x2 u3", "x3 u4"]),
    ("y2", &["u1' u3'", "v2 v4", "v1 v3", "v3' v4'", "x1 u3", "x2 u4", "x3 u1"]),
    ("y3", &["u1' u2'", "v3' v4", "v1' v2", "v1 v4'", "x1 u4", "x2 u1", "x3 u2"]),
];

/// One column of a reproduced table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnDiff {
    pub vertex: String,
    pub expected: String,
    pub actual: String,
}

impl ColumnDiff {
    pub fn matches(&self) -> bool {
        self.expected == self.actual
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReproReport {
    pub table: usize,
    pub columns: Vec<ColumnDiff>,
}

impl ReproReport {
    pub fn matches(&self) -> bool {
        self.columns.iter().all(ColumnDiff::matches)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.columns {
            let mark = if c.matches() { "ok" } else { "DIFF" };
            let _ = writeln!(out, "{:<3} {mark:<4} {}", c.vertex, c.actual);
            if !c.matches() {
                let _ = writeln!(out, "         expected {}", c.expected);
            }
        }
        let _ = writeln!(out, "table {}: {}", self.table, if self.matches() { "MATCH" } else { "MISMATCH" });
        out
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ReproError {
    #[error("no reference table {0}; choose 1 or 2")]
    UnknownTable(usize),
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error("reference table names unknown vertex {0}")]
    BadReference(String),
}

/// Canonical text for a set of edges: endpoints ordered by vertex id in `g`,
/// edges sorted, written `ab` and separated by single spaces.
fn canonical(g: &Graph, edges: &[(VertexLabel, VertexLabel)]) -> Result<String, ReproError> {
    let id = |l: &VertexLabel| g.id(l).ok_or_else(|| ReproError::BadReference(l.to_string()));
    let mut pairs = edges
        .iter()
        .map(|(a, b)| {
            let (ia, ib) = (id(a)?, id(b)?);
            Ok(if ia <= ib { (ia, ib) } else { (ib, ia) })
        })
        .collect::<Result<Vec<_>, ReproError>>()?;
    pairs.sort_unstable();
    Ok(pairs.iter().map(|&(a, b)| format!("{}{}", g.label(a), g.label(b))).collect::<Vec<_>>().join(" "))
}

fn parse_edge(text: &str) -> Result<(VertexLabel, VertexLabel), ReproError> {
    let bad = || ReproError::BadReference(text.to_string());
    let (a, b) = text.split_once(' ').ok_or_else(bad)?;
    Ok((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?))
}

fn compare(
    table: usize,
    reference: &[Column],
    g: &Graph,
    trace: &ConstructionTrace,
) -> Result<ReproReport, ReproError> {
    let mut columns = Vec::with_capacity(reference.len());
    for &(name, edges) in reference {
        let vertex: VertexLabel = name.parse().map_err(|_| ReproError::BadReference(name.into()))?;
        let expected: Vec<_> = edges.iter().map(|e| parse_edge(e)).collect::<Result<_, _>>()?;
        let actual = trace.step_for(&vertex).map(|s| s.deleted_edges.clone()).unwrap_or_default();
        columns.push(ColumnDiff {
            vertex: name.to_string(),
            expected: canonical(g, &expected)?,
            actual: canonical(g, &actual)?,
        });
    }
    Ok(ReproReport { table, columns })
}

/// Rebuilds the construction behind `table` and compares deletions column by column.
pub fn reproduce(table: usize) -> Result<ReproReport, ReproError> {
    let (reference, res) = match table {
        1 => (TABLE_1, build_theorem2(7, 5)?),
        2 => (TABLE_2, build_theorem3(8, 6)?),
        n => return Err(ReproError::UnknownTable(n)),
    };
    compare(table, reference, &res.graph, &res.trace)
}
