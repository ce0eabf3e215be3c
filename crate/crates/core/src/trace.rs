//! Step-by-step record of how a construction edits its base graph.

use serde::{Deserialize, Serialize};

use crate::graph::{Family, Graph, GraphError, Naming, VertexLabel};

pub type LabeledEdge = (VertexLabel, VertexLabel);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BaseFamily {
    Glk,
    T1,
    T2,
    T3,
    T4,
}

/// Family parameters; unused slots are `None`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceParams {
    pub k: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
}

/// One edit, applied as: delete edges, remove the (now isolated) vertex, add vertex, add edges.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct TraceStep {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub removed_vertex: Option<VertexLabel>,
    pub new_vertex: Option<VertexLabel>,
    pub deleted_edges: Vec<LabeledEdge>,
    pub added_edges: Vec<LabeledEdge>,
}

/// The base is the layered graph `G_{layers(k)}` under `naming`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionTrace {
    pub base_family: BaseFamily,
    pub params: TraceParams,
    pub base_layers: usize,
    pub naming: Naming,
    pub steps: Vec<TraceStep>,
}

/// Layered chain: first and last layer complete, inner layers independent,
/// consecutive layers joined between differently colored vertices.
/// Layer `i` uses family `Family::ALL[i]`, vertex `j` of every layer has color `j`.
pub fn layered_base(layers: usize, k: usize, naming: Naming) -> Result<Graph, GraphError> {
    let mut g = Graph::empty();
    let mut ids = Vec::with_capacity(layers);
    for &family in &Family::ALL[..layers] {
        let layer: Vec<_> = (1..=k).map(|j| g.add_vertex(naming.label(family, j))).collect::<Result<_, _>>()?;
        ids.push(layer);
    }
    for a in 0..k {
        for b in a + 1..k {
            g.add_edge(ids[0][a], ids[0][b])?;
            if layers > 1 {
                g.add_edge(ids[layers - 1][a], ids[layers - 1][b])?;
            }
        }
    }
    for pair in ids.windows(2) {
        for a in 0..k {
            for b in 0..k {
                if a != b {
                    g.add_edge(pair[0][a], pair[1][b])?;
                }
            }
        }
    }
    Ok(g)
}

fn lookup(g: &Graph, l: &VertexLabel) -> Result<usize, GraphError> {
    g.id(l).ok_or_else(|| GraphError::UnknownEndpoint(l.to_string()))
}

/// Applies one step to `g` strictly: deleted edges must exist, added edges must not.
pub fn apply_step(g: &mut Graph, step: &TraceStep) -> Result<(), GraphError> {
    if step.deleted_edges.iter().any(|e| step.added_edges.contains(e) || step.added_edges.contains(&(e.1, e.0))) {
        return Err(GraphError::Corrupt("step deletes and adds the same edge".into()));
    }
    for (a, b) in &step.deleted_edges {
        let (ia, ib) = (lookup(g, a)?, lookup(g, b)?);
        g.remove_edge(ia, ib)?;
    }
    if let Some(v) = &step.removed_vertex {
        let id = lookup(g, v)?;
        g.remove_isolated_vertex(id)?;
    }
    if let Some(v) = step.new_vertex {
        g.add_vertex(v)?;
    }
    for (a, b) in &step.added_edges {
        let (ia, ib) = (lookup(g, a)?, lookup(g, b)?);
        g.add_edge(ia, ib)?;
    }
    Ok(())
}

impl ConstructionTrace {
    pub fn base(&self) -> Result<Graph, GraphError> {
        layered_base(self.base_layers, self.params.k, self.naming)
    }

    /// Rebuilds the final graph from the base.
    pub fn replay(&self) -> Result<Graph, GraphError> {
        let mut g = self.base()?;
        for step in &self.steps {
            apply_step(&mut g, step)?;
        }
        g.audit()?;
        Ok(g)
    }

    /// The step that introduced `v`, if any.
    pub fn step_for(&self, v: &VertexLabel) -> Option<&TraceStep> {
        self.steps.iter().find(|s| s.new_vertex.as_ref() == Some(v))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("trace serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}
