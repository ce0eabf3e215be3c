//! Graph families with small defining number, each certified before it is returned.
//!
//! Every builder starts from a layered chromatic-join graph, records its edits
//! in a [`ConstructionTrace`], and runs [`audit`] on the result: regularity,
//! exact chromatic number, a complete subgraph on `k` vertices, and a unique
//! extension of the claimed defining set. A recipe that fails any check is
//! reported as [`ConstructError::InternalRecipeInconsistency`].

mod glk;
mod theorem1;
mod theorem2;
mod theorem3;
mod theorem4;

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::coloring::{Color, ColorAssignment};
use crate::engine::{self, EngineError, SearchBudget};
use crate::factor::{self, FactorError};
use crate::graph::{norm, Edge, Family, Graph, GraphError, Naming, Vertex, VertexLabel};
use crate::trace::{layered_base, BaseFamily, ConstructionTrace, LabeledEdge, TraceParams, TraceStep};

pub use glk::build_glk;
pub use theorem1::build_theorem1;
pub use theorem2::build_theorem2;
pub use theorem3::build_theorem3;
pub use theorem4::build_theorem4;

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("parameters out of range: {0}")]
    ParamOutOfRange(String),
    #[error("parity violation: {0}")]
    ParityViolation(String),
    #[error("no {r}-regular {k}-chromatic graph on {n} vertices exists (t = k - 2)", n = 3 * k - 1, r = 3 * k - 4)]
    TEqualsKMinus2 { k: usize },
    #[error("label {0} occurs in both graphs")]
    LabelCollision(VertexLabel),
    #[error("input coloring is not a proper total coloring: {0}")]
    ImproperInputColoring(String),
    #[error("edge {0}{1} is not in the graph")]
    EdgeNotInGraph(VertexLabel, VertexLabel),
    #[error("recipe inconsistency: {detail}")]
    InternalRecipeInconsistency { detail: String, trace: Box<ConstructionTrace> },
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A built graph together with everything it claims about itself.
#[derive(Debug, Clone)]
pub struct ConstructionResult {
    pub graph: Graph,
    pub canonical_coloring: ColorAssignment,
    pub defining_set: ColorAssignment,
    pub trace: ConstructionTrace,
    pub claimed_r: usize,
    pub claimed_k: usize,
    /// Vertices of a complete subgraph on `claimed_k` vertices.
    pub clique: Vec<Vertex>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FeasibilityReason {
    OK,
    RatioViolated,
    BothOdd,
    TEqualsKMinus2,
    TooFewVertices,
    ParamOutOfRange,
}

impl fmt::Display for FeasibilityReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FeasibilityVerdict {
    pub feasible: bool,
    pub reason: FeasibilityReason,
}

impl FeasibilityVerdict {
    fn from_reason(reason: FeasibilityReason) -> Self {
        FeasibilityVerdict { feasible: reason == FeasibilityReason::OK, reason }
    }
}

/// Necessary conditions for an `r`-regular `k`-chromatic graph on `n` vertices.
///
/// Each color class of such a graph has at most `n - r` vertices, so
/// `n <= k (n - r)`, i.e. `r / (k - 1) <= n / k`.
pub fn feasibility(n: usize, r: usize, k: usize) -> FeasibilityVerdict {
    use FeasibilityReason::*;
    let reason = if n == 0 || r == 0 || k == 0 || (k == 1 && r > 0) {
        ParamOutOfRange
    } else if r >= 2 * (k - 1) && n < 2 * k {
        TooFewVertices
    } else if r * k > n * (k - 1) {
        RatioViolated
    } else if n % 2 == 1 && r % 2 == 1 {
        BothOdd
    } else if n + 1 == 3 * k && r + 4 == 3 * k {
        TEqualsKMinus2
    } else {
        OK
    };
    FeasibilityVerdict::from_reason(reason)
}

/// Chromatic join: disjoint union plus every edge between differently colored vertices.
pub fn chromatic_join(
    g: &Graph,
    cg: &ColorAssignment,
    h: &Graph,
    ch: &ColorAssignment,
) -> Result<Graph, ConstructError> {
    for (name, graph, c) in [("first", g, cg), ("second", h, ch)] {
        if !c.is_total(graph.n()) || !c.is_proper(graph) {
            return Err(ConstructError::ImproperInputColoring(format!("{name} graph")));
        }
    }
    if let Some(l) = h.labels().iter().find(|l| g.id(l).is_some()) {
        return Err(ConstructError::LabelCollision(*l));
    }
    let labels: Vec<VertexLabel> = g.labels().iter().chain(h.labels()).copied().collect();
    let mut edges = g.labeled_edges();
    edges.extend(h.labeled_edges());
    for x in 0..g.n() {
        for y in 0..h.n() {
            if cg.get(x) != ch.get(y) {
                edges.push((g.label(x), h.label(y)));
            }
        }
    }
    Ok(Graph::from_labels(labels, &edges)?)
}

/// `chi(g - f) = chi(g)` and `s` still defines a coloring of `g - f`.
pub fn nonessential_check(
    g: &Graph,
    s: &ColorAssignment,
    f: &[Edge],
    budget: &SearchBudget,
) -> Result<bool, ConstructError> {
    if let Some(&(a, b)) = f.iter().find(|&&(a, b)| a >= g.n() || b >= g.n() || !g.has_edge(a, b)) {
        let name = |v: Vertex| if v < g.n() { g.label(v) } else { VertexLabel::new(Family::U, v + 1) };
        return Err(ConstructError::EdgeNotInGraph(name(a), name(b)));
    }
    let chi = engine::chromatic_number(g, budget)?;
    let reduced = g.without_edges(f)?;
    if engine::chromatic_number(&reduced, budget)? != chi {
        return Ok(false);
    }
    Ok(engine::is_defining_set(&reduced, s, chi)?)
}

/// What [`audit`] established.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub n: usize,
    pub r: usize,
    pub chi: usize,
    pub defining_size: usize,
}

/// Full check of every claim carried by `res`.
pub fn audit(res: &ConstructionResult, budget: &SearchBudget) -> Result<AuditReport, ConstructError> {
    let fail =
        |detail: String| ConstructError::InternalRecipeInconsistency { detail, trace: Box::new(res.trace.clone()) };
    let g = &res.graph;
    let k = res.claimed_k;
    g.audit()?;
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) != res.claimed_r) {
        return Err(fail(format!("{} has degree {}, expected {}", g.label(v), g.degree(v), res.claimed_r)));
    }
    let canon = &res.canonical_coloring;
    if canon.k() as usize != k || !canon.is_total(g.n()) {
        return Err(fail("canonical coloring is not a total k-coloring".into()));
    }
    if let Some((a, b)) = canon.monochromatic_edge(g) {
        return Err(fail(format!("canonical coloring is improper on {}{}", g.label(a), g.label(b))));
    }
    if !res.defining_set.is_subset_of(canon) || res.defining_set.len() + 1 != k {
        return Err(fail("defining set is not a (k-1)-subset of the canonical coloring".into()));
    }
    if res.clique.len() != k {
        return Err(fail(format!("clique witness has {} vertices", res.clique.len())));
    }
    for (i, &a) in res.clique.iter().enumerate() {
        for &b in &res.clique[i + 1..] {
            if !g.has_edge(a, b) {
                return Err(fail(format!("clique witness misses edge {}{}", g.label(a), g.label(b))));
            }
        }
    }
    if canon.restrict(res.clique.iter().copied()).palette_used().len() != k {
        return Err(fail("clique does not carry all k colors".into()));
    }
    match res.trace.replay() {
        Ok(replayed) if replayed == *g => {}
        Ok(_) => return Err(fail("trace replay differs from the built graph".into())),
        Err(e) => return Err(fail(format!("trace replay failed: {e}"))),
    }
    let chi = engine::chromatic_number(g, budget)?;
    if chi != k {
        return Err(fail(format!("chromatic number is {chi}, expected {k}")));
    }
    match engine::count_extensions(g, &res.defining_set, k, 2)? {
        1 => {}
        0 => return Err(fail("defining set has no extension".into())),
        _ => return Err(fail("defining set extends in more than one way".into())),
    }
    Ok(AuditReport { n: g.n(), r: res.claimed_r, chi, defining_size: res.defining_set.len() })
}

/// A family member by parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Construction {
    Glk { l: usize, k: usize },
    T1 { k: usize, t: usize },
    T2 { k: usize, s: usize },
    T3 { k: usize, s: usize },
    T4 { k: usize, s: usize, t: usize },
}

impl Construction {
    pub fn build(&self) -> Result<ConstructionResult, ConstructError> {
        match *self {
            Construction::Glk { l, k } => build_glk(l, k),
            Construction::T1 { k, t } => build_theorem1(k, t),
            Construction::T2 { k, s } => build_theorem2(k, s),
            Construction::T3 { k, s } => build_theorem3(k, s),
            Construction::T4 { k, s, t } => build_theorem4(k, s, t),
        }
    }

    /// `(n, r, k)` the member would have.
    pub fn target(&self) -> (usize, usize, usize) {
        match *self {
            Construction::Glk { l, k } => (l * k, 2 * k.saturating_sub(1), k),
            Construction::T1 { k, t } => ((3 * k).saturating_sub(1), 2 * k.saturating_sub(1) + t, k),
            Construction::T2 { k, s } | Construction::T3 { k, s } => (2 * k + s, 2 * k.saturating_sub(1), k),
            Construction::T4 { k, s, t } => (2 * k + s, 2 * k.saturating_sub(1) + t, k),
        }
    }

    pub fn k(&self) -> usize {
        self.target().2
    }

    /// Every valid member with `k <= kmax`, in a fixed order.
    pub fn sweep(kmax: usize) -> Vec<Construction> {
        let mut out = Vec::new();
        for k in 2..=kmax {
            for l in 2..=5 {
                out.push(Construction::Glk { l, k });
            }
        }
        for k in 3..=kmax {
            for t in (0..=k - 3).filter(|t| k % 2 == 1 || t % 2 == 0) {
                out.push(Construction::T1 { k, t });
            }
        }
        for k in 3..=kmax {
            for s in 1..=k - 2 {
                out.push(if k % 2 == 1 { Construction::T2 { k, s } } else { Construction::T3 { k, s } });
            }
        }
        for k in 4..=kmax {
            for s in 2..=k - 2 {
                for t in (1..s).filter(|t| s % 2 == 0 || t % 2 == 0) {
                    out.push(Construction::T4 { k, s, t });
                }
            }
        }
        out
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Construction::Glk { l, k } => write!(f, "glk(l={l},k={k})"),
            Construction::T1 { k, t } => write!(f, "t1(k={k},t={t})"),
            Construction::T2 { k, s } => write!(f, "t2(k={k},s={s})"),
            Construction::T3 { k, s } => write!(f, "t3(k={k},s={s})"),
            Construction::T4 { k, s, t } => write!(f, "t4(k={k},s={s},t={t})"),
        }
    }
}

/// Mutable graph plus trace, shared by all builders.
pub(crate) struct Builder {
    g: Graph,
    colors: HashMap<VertexLabel, Color>,
    trace: ConstructionTrace,
}

pub(crate) fn x(i: usize) -> VertexLabel {
    VertexLabel::new(Family::X, i)
}

pub(crate) fn y(i: usize) -> VertexLabel {
    VertexLabel::new(Family::Y, i)
}

impl Builder {
    pub(crate) fn new(
        family: BaseFamily,
        params: TraceParams,
        layers: usize,
        naming: Naming,
    ) -> Result<Self, ConstructError> {
        let g = layered_base(layers, params.k, naming)?;
        let colors = g.labels().iter().map(|l| (*l, naming.absolute(l) as Color)).collect();
        let trace = ConstructionTrace { base_family: family, params, base_layers: layers, naming, steps: Vec::new() };
        Ok(Builder { g, colors, trace })
    }

    pub(crate) fn k(&self) -> usize {
        self.trace.params.k
    }

    pub(crate) fn u(&self, i: usize) -> VertexLabel {
        self.trace.naming.label(Family::U, i)
    }

    pub(crate) fn v(&self, i: usize) -> VertexLabel {
        self.trace.naming.label(Family::V, i)
    }

    pub(crate) fn w(&self, i: usize) -> VertexLabel {
        self.trace.naming.label(Family::W, i)
    }

    pub(crate) fn fail(&self, detail: impl Into<String>) -> ConstructError {
        ConstructError::InternalRecipeInconsistency { detail: detail.into(), trace: Box::new(self.trace.clone()) }
    }

    fn id(&self, l: &VertexLabel) -> Result<Vertex, ConstructError> {
        self.g.id(l).ok_or_else(|| self.fail(format!("vertex {l} does not exist")))
    }

    /// Opens a new trace step, optionally introducing a vertex of the given color.
    pub(crate) fn step(&mut self, new_vertex: Option<(VertexLabel, Color)>) -> Result<(), ConstructError> {
        let mut step = TraceStep::default();
        if let Some((l, c)) = new_vertex {
            self.g.add_vertex(l).map_err(|e| self.fail(e.to_string()))?;
            self.colors.insert(l, c);
            step.new_vertex = Some(l);
        }
        self.trace.steps.push(step);
        Ok(())
    }

    fn current(&mut self) -> &mut TraceStep {
        if self.trace.steps.is_empty() {
            self.trace.steps.push(TraceStep::default());
        }
        self.trace.steps.last_mut().expect("non-empty")
    }

    pub(crate) fn delete(&mut self, a: VertexLabel, b: VertexLabel) -> Result<(), ConstructError> {
        let (ia, ib) = (self.id(&a)?, self.id(&b)?);
        self.g.remove_edge(ia, ib).map_err(|e| self.fail(e.to_string()))?;
        self.current().deleted_edges.push((a, b));
        Ok(())
    }

    pub(crate) fn join(&mut self, a: VertexLabel, b: VertexLabel) -> Result<(), ConstructError> {
        let (ia, ib) = (self.id(&a)?, self.id(&b)?);
        self.g.add_edge(ia, ib).map_err(|e| self.fail(e.to_string()))?;
        self.current().added_edges.push((a, b));
        Ok(())
    }

    /// Deletes all edges at `l` and then the vertex itself, in the current step.
    pub(crate) fn remove_vertex(&mut self, l: VertexLabel) -> Result<(), ConstructError> {
        let id = self.id(&l)?;
        let nbrs: Vec<VertexLabel> = self.g.neighbors(id).map(|w| self.g.label(w)).collect();
        for w in nbrs {
            self.delete(l, w)?;
        }
        let id = self.id(&l)?;
        self.g.remove_isolated_vertex(id).map_err(|e| self.fail(e.to_string()))?;
        self.colors.remove(&l);
        self.current().removed_vertex = Some(l);
        Ok(())
    }

    /// New vertex `l` replaces the edges `deleted`: they are removed and `l`
    /// is joined to each of their endpoints.
    pub(crate) fn absorb(
        &mut self,
        l: VertexLabel,
        color: usize,
        deleted: &[LabeledEdge],
    ) -> Result<(), ConstructError> {
        self.step(Some((l, color as Color)))?;
        for &(a, b) in deleted {
            self.delete(a, b)?;
        }
        for &(a, b) in deleted {
            self.join(l, a)?;
            self.join(l, b)?;
        }
        Ok(())
    }

    pub(crate) fn finish(
        self,
        claimed_r: usize,
        defining: &[VertexLabel],
        clique: &[VertexLabel],
    ) -> Result<ConstructionResult, ConstructError> {
        let k = self.k();
        let lookup = |l: &VertexLabel| self.id(l);
        let canonical_coloring = ColorAssignment::from_pairs(
            k as Color,
            self.g.labels().iter().map(|l| (self.g.id(l).expect("own label"), self.colors[l])),
        )
        .map_err(|e| self.fail(e.to_string()))?;
        let s_ids = defining.iter().map(lookup).collect::<Result<Vec<_>, _>>()?;
        let clique = clique.iter().map(lookup).collect::<Result<Vec<_>, _>>()?;
        let defining_set = canonical_coloring.restrict(s_ids);
        let res = ConstructionResult {
            graph: self.g,
            canonical_coloring,
            defining_set,
            trace: self.trace,
            claimed_r,
            claimed_k: k,
            clique,
        };
        audit(&res, &SearchBudget::default())?;
        Ok(res)
    }
}

/// Factorization of the complete graph on `host` (last vertex fixed), then
/// reordered so requirement `(t, e)` puts edge `e` in factor `t`.
pub(crate) fn labeled_factorization(
    b: &Builder,
    host: &[VertexLabel],
    requirements: &[(usize, LabeledEdge)],
) -> Result<Vec<Vec<LabeledEdge>>, ConstructError> {
    let pos = |l: &VertexLabel| host.iter().position(|h| h == l).expect("requirement endpoint in host");
    let ids: Vec<usize> = (0..host.len()).collect();
    let wrap = |e: FactorError| b.fail(e.to_string());
    let f = factor::one_factorization(&ids).map_err(wrap)?;
    let reqs: Vec<(usize, Edge)> = requirements.iter().map(|&(t, (a, c))| (t, norm(pos(&a), pos(&c)))).collect();
    let f = factor::reindex_factorization(&f, &reqs).map_err(wrap)?;
    Ok(f.factors.iter().map(|fac| fac.iter().map(|&(a, c)| (host[a], host[c])).collect()).collect())
}

/// Removes `keep` (either orientation) from `edges`.
pub(crate) fn without(edges: &[LabeledEdge], keep: &[LabeledEdge]) -> Vec<LabeledEdge> {
    edges.iter().copied().filter(|&(a, b)| !keep.iter().any(|&(c, d)| (a, b) == (c, d) || (a, b) == (d, c))).collect()
}
