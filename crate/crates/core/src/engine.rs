//! Exact coloring search: chromatic number, extension counting, defining sets.
//!
//! The search works on `u64` neighbour masks, so graphs are limited to 64
//! vertices and palettes to 64 colors. Branching picks the uncolored vertex
//! with the fewest remaining colors (ties: higher degree, then lower id), and
//! every assignment is followed by unit propagation of singleton domains.

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::coloring::{Color, ColorAssignment, ColoringError};
use crate::graph::{Graph, VertexLabel};

const MAX_N: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("search budget exhausted; proven bounds [{lo}, {hi}]")]
    BudgetExhausted { lo: usize, hi: usize },
    #[error("partial coloring is improper on edge {0}{1}")]
    ImproperPartial(VertexLabel, VertexLabel),
    #[error("claimed chromatic number {claimed} but the graph has {actual}")]
    ChiMismatch { claimed: usize, actual: usize },
    #[error("graph has {0} vertices; the engine handles at most 64")]
    TooLarge(usize),
    #[error("palette of {0} colors exceeds 64")]
    PaletteTooLarge(usize),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("cap must be at least 1")]
    ZeroCap,
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

/// Limits on a search; both must be positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub node_limit: u64,
    pub time_limit: Duration,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { node_limit: 500_000_000, time_limit: Duration::from_secs(600) }
    }
}

impl SearchBudget {
    pub fn new(node_limit: u64, time_limit: Duration) -> Self {
        assert!(node_limit > 0 && !time_limit.is_zero(), "budget limits must be positive");
        SearchBudget { node_limit, time_limit }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extension {
    None,
    Unique,
    Multiple,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionVerdict {
    pub outcome: Extension,
    /// A proper total coloring extending the query, present unless `outcome` is `None`.
    pub witness: Option<ColorAssignment>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefiningNumber {
    pub value: usize,
    pub chi: usize,
    pub witness: ColorAssignment,
}

struct OutOfBudget;

#[derive(Clone)]
struct State {
    color: [u8; MAX_N],
    domain: [u64; MAX_N],
    uncolored: u64,
    used: u64,
}

struct Search<'a> {
    adj: &'a [u64],
    degree: Vec<u32>,
    full: u64,
    nodes: u64,
    node_limit: u64,
    deadline: Option<Instant>,
    witness: Option<[u8; MAX_N]>,
}

fn bit(i: usize) -> u64 {
    1u64 << i
}

fn ones(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

fn palette(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        bit(k) - 1
    }
}

impl<'a> Search<'a> {
    fn new(adj: &'a [u64], budget: Option<&SearchBudget>) -> Self {
        let n = adj.len();
        Search {
            adj,
            degree: adj.iter().map(|m| m.count_ones()).collect(),
            full: if n == 64 { u64::MAX } else { bit(n) - 1 },
            nodes: 0,
            node_limit: budget.map_or(u64::MAX, |b| b.node_limit),
            deadline: budget.map(|b| Instant::now() + b.time_limit),
            witness: None,
        }
    }

    fn tick(&mut self) -> Result<(), OutOfBudget> {
        self.nodes += 1;
        if self.nodes > self.node_limit {
            return Err(OutOfBudget);
        }
        if self.nodes & 0x3ff == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() > d {
                    return Err(OutOfBudget);
                }
            }
        }
        Ok(())
    }

    fn initial(&self, k: usize) -> State {
        State { color: [0; MAX_N], domain: [palette(k); MAX_N], uncolored: self.full, used: 0 }
    }

    /// Colors `v` with color index `c` (0-based) and propagates forced vertices.
    fn assign(&self, st: &mut State, v: usize, c: usize) -> bool {
        let mut stack = vec![(v, c)];
        while let Some((v, c)) = stack.pop() {
            if st.uncolored & bit(v) == 0 {
                if st.color[v] as usize == c + 1 {
                    continue;
                }
                return false;
            }
            if st.domain[v] & bit(c) == 0 {
                return false;
            }
            st.color[v] = (c + 1) as u8;
            st.uncolored &= !bit(v);
            st.domain[v] = bit(c);
            st.used |= bit(c);
            for w in ones(self.adj[v] & st.uncolored) {
                if st.domain[w] & bit(c) != 0 {
                    st.domain[w] &= !bit(c);
                    match st.domain[w].count_ones() {
                        0 => return false,
                        1 => stack.push((w, st.domain[w].trailing_zeros() as usize)),
                        _ => {}
                    }
                }
            }
        }
        true
    }

    fn pick(&self, st: &State) -> usize {
        ones(st.uncolored)
            .min_by_key(|&v| (st.domain[v].count_ones(), std::cmp::Reverse(self.degree[v]), v))
            .expect("called with uncolored vertices")
    }

    /// Number of total colorings below `st`, stopping at `cap`. With
    /// `symmetric`, only one unused color is tried per branch.
    fn count(&mut self, st: &State, cap: u64, symmetric: bool) -> Result<u64, OutOfBudget> {
        self.tick()?;
        if st.uncolored == 0 {
            if self.witness.is_none() {
                self.witness = Some(st.color);
            }
            return Ok(1);
        }
        let v = self.pick(st);
        let mut choices = st.domain[v];
        if symmetric {
            let fresh = choices & !st.used;
            if fresh != 0 {
                choices = (choices & st.used) | (fresh & fresh.wrapping_neg());
            }
        }
        let mut total = 0;
        for c in ones(choices) {
            let mut next = st.clone();
            if self.assign(&mut next, v, c) {
                total += self.count(&next, cap - total, symmetric)?;
                if total >= cap {
                    return Ok(total);
                }
            }
        }
        Ok(total)
    }
}

fn masks(g: &Graph) -> Result<Vec<u64>, EngineError> {
    g.masks().ok_or(EngineError::TooLarge(g.n()))
}

fn check_partial(g: &Graph, partial: &ColorAssignment, k: usize) -> Result<(), EngineError> {
    partial.check_in(g)?;
    if partial.max_color() as usize > k {
        return Err(ColoringError::ColorOutOfRange { color: partial.max_color(), k: k as Color }.into());
    }
    if let Some((a, b)) = partial.monochromatic_edge(g) {
        return Err(EngineError::ImproperPartial(g.label(a), g.label(b)));
    }
    Ok(())
}

/// Seeds a state with `partial`; `None` if propagation already fails.
fn seeded(search: &Search<'_>, partial: &ColorAssignment, k: usize) -> Option<State> {
    let mut st = search.initial(k);
    for (v, c) in partial.iter() {
        if !search.assign(&mut st, v, c as usize - 1) {
            return None;
        }
    }
    Some(st)
}

fn witness_assignment(k: usize, colors: &[u8; MAX_N], n: usize) -> ColorAssignment {
    ColorAssignment::from_pairs(k as Color, (0..n).map(|v| (v, colors[v] as Color)))
        .expect("search colors lie in the palette")
}

/// Greedy saturation-degree coloring; returns the coloring (1-based colors).
pub fn dsatur_coloring(g: &Graph) -> Vec<Color> {
    let n = g.n();
    let mut color = vec![0 as Color; n];
    let mut seen: Vec<std::collections::BTreeSet<Color>> = vec![Default::default(); n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == 0)
            .min_by_key(|&v| (std::cmp::Reverse(seen[v].len()), std::cmp::Reverse(g.degree(v)), v))
            .expect("uncolored vertex remains");
        let c = (1..).find(|c| !seen[v].contains(c)).expect("some color is free");
        color[v] = c;
        for w in g.neighbors(v) {
            seen[w].insert(c);
        }
    }
    color
}

/// Largest clique found by branch and bound within `node_limit` nodes.
pub fn max_clique(g: &Graph, node_limit: u64) -> Result<Vec<usize>, EngineError> {
    let adj = masks(g)?;
    let mut best: Vec<usize> = Vec::new();
    let mut nodes = 0u64;
    fn grow(adj: &[u64], cur: &mut Vec<usize>, cand: u64, best: &mut Vec<usize>, nodes: &mut u64, limit: u64) {
        *nodes += 1;
        if cur.len() > best.len() {
            *best = cur.clone();
        }
        if *nodes > limit {
            return;
        }
        let mut cand = cand;
        while cand != 0 {
            if cur.len() + cand.count_ones() as usize <= best.len() {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            cur.push(v);
            grow(adj, cur, cand & adj[v], best, nodes, limit);
            cur.pop();
        }
    }
    let all = if g.n() == 64 { u64::MAX } else { bit(g.n()) - 1 };
    grow(&adj, &mut Vec::new(), all, &mut best, &mut nodes, node_limit);
    Ok(best)
}

/// Exact chromatic number, with an optimal coloring as witness.
pub fn chromatic_number_with_witness(
    g: &Graph,
    budget: &SearchBudget,
) -> Result<(usize, ColorAssignment), EngineError> {
    if g.n() == 0 {
        return Err(EngineError::EmptyGraph);
    }
    let adj = masks(g)?;
    let greedy = dsatur_coloring(g);
    let hi = *greedy.iter().max().expect("non-empty") as usize;
    let clique = max_clique(g, budget.node_limit.min(2_000_000))?;
    let mut lo = clique.len().max(1);
    let mut search = Search::new(&adj, Some(budget));
    while lo < hi {
        let st = search.initial(lo);
        search.witness = None;
        match search.count(&st, 1, true) {
            Err(OutOfBudget) => return Err(EngineError::BudgetExhausted { lo, hi }),
            Ok(0) => lo += 1,
            Ok(_) => {
                let w = search.witness.expect("a coloring was found");
                return Ok((lo, witness_assignment(lo, &w, g.n())));
            }
        }
    }
    Ok((hi, ColorAssignment::from_slice(hi as Color, &greedy)?))
}

pub fn chromatic_number(g: &Graph, budget: &SearchBudget) -> Result<usize, EngineError> {
    chromatic_number_with_witness(g, budget).map(|(chi, _)| chi)
}

/// `min(cap, #proper k-colorings of g extending partial)`, counting labeled colorings.
pub fn count_extensions(g: &Graph, partial: &ColorAssignment, k: usize, cap: u64) -> Result<u64, EngineError> {
    count_extensions_within(g, partial, k, cap, None)
}

pub fn count_extensions_within(
    g: &Graph,
    partial: &ColorAssignment,
    k: usize,
    cap: u64,
    budget: Option<&SearchBudget>,
) -> Result<u64, EngineError> {
    if cap == 0 {
        return Err(EngineError::ZeroCap);
    }
    if k > 64 {
        return Err(EngineError::PaletteTooLarge(k));
    }
    let adj = masks(g)?;
    check_partial(g, partial, k)?;
    let mut search = Search::new(&adj, budget);
    let Some(st) = seeded(&search, partial, k) else { return Ok(0) };
    search.count(&st, cap, false).map_err(|_| EngineError::BudgetExhausted { lo: 0, hi: cap as usize })
}

/// Classifies the extensions of `partial` to proper `k`-colorings.
pub fn extend(g: &Graph, partial: &ColorAssignment, k: usize) -> Result<ExtensionVerdict, EngineError> {
    if k > 64 {
        return Err(EngineError::PaletteTooLarge(k));
    }
    let adj = masks(g)?;
    check_partial(g, partial, k)?;
    let mut search = Search::new(&adj, None);
    let count = match seeded(&search, partial, k) {
        Some(st) => search.count(&st, 2, false).unwrap_or_else(|_| unreachable!("unbounded search")),
        None => 0,
    };
    let witness = search.witness.map(|w| witness_assignment(k, &w, g.n()));
    let outcome = match count {
        0 => Extension::None,
        1 => Extension::Unique,
        _ => Extension::Multiple,
    };
    Ok(ExtensionVerdict { outcome, witness })
}

/// `s` extends uniquely to a proper `chi`-coloring. `chi` is trusted.
pub fn is_defining_set(g: &Graph, s: &ColorAssignment, chi: usize) -> Result<bool, EngineError> {
    Ok(count_extensions(g, s, chi, 2)? == 1)
}

/// Like [`is_defining_set`] but first recomputes the chromatic number.
pub fn is_defining_set_verified(
    g: &Graph,
    s: &ColorAssignment,
    chi: usize,
    budget: &SearchBudget,
) -> Result<bool, EngineError> {
    let actual = chromatic_number(g, budget)?;
    if actual != chi {
        return Err(EngineError::ChiMismatch { claimed: chi, actual });
    }
    is_defining_set(g, s, chi)
}

/// `|s| >= chi - 1`.
pub fn lower_bound_check(_g: &Graph, s: &ColorAssignment, chi: usize) -> bool {
    s.len() + 1 >= chi
}

/// Next k-subset of `0..n` in lexicographic order.
fn next_subset(sub: &mut [usize], n: usize) -> bool {
    let m = sub.len();
    for i in (0..m).rev() {
        if sub[i] < n - m + i {
            sub[i] += 1;
            for j in i + 1..m {
                sub[j] = sub[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Restricted-growth colorings of `sub` (colors introduced in ascending
/// order), proper on the induced subgraph; returns the first one whose
/// extension to a `k`-coloring is unique.
fn first_defining(
    search: &mut Search<'_>,
    sub: &[usize],
    k: usize,
    cols: &mut Vec<usize>,
) -> Result<Option<ColorAssignment>, OutOfBudget> {
    let pos = cols.len();
    if pos == sub.len() {
        search.tick()?;
        let partial =
            ColorAssignment::from_pairs(k as Color, sub.iter().zip(cols.iter()).map(|(&v, &c)| (v, c as Color + 1)))
                .expect("colors below k");
        let Some(st) = seeded(search, &partial, k) else { return Ok(None) };
        return Ok((search.count(&st, 2, false)? == 1).then_some(partial));
    }
    let v = sub[pos];
    let limit = cols.iter().map(|&c| c + 1).max().unwrap_or(0).min(k - 1);
    for c in 0..=limit {
        if (0..pos).all(|i| cols[i] != c || search.adj[v] & bit(sub[i]) == 0) {
            cols.push(c);
            let found = first_defining(search, sub, k, cols)?;
            cols.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
    }
    Ok(None)
}

/// Exact defining number by ascending search from `chi - 1`.
///
/// Subsets are visited by size, then lexicographically. Each subset's
/// partial colorings are enumerated up to palette relabeling; uniqueness is
/// tested on the labeled representative, which is enough because
/// relabeling maps the extensions of one class member bijectively onto
/// those of another.
pub fn defining_number(g: &Graph, budget: &SearchBudget) -> Result<DefiningNumber, EngineError> {
    let (chi, _) = chromatic_number_with_witness(g, budget)?;
    let n = g.n();
    let adj = masks(g)?;
    let mut search = Search::new(&adj, Some(budget));
    for m in chi.saturating_sub(1)..=n {
        let mut sub: Vec<usize> = (0..m).collect();
        loop {
            match first_defining(&mut search, &sub, chi, &mut Vec::with_capacity(m)) {
                Err(OutOfBudget) => return Err(EngineError::BudgetExhausted { lo: m, hi: n }),
                Ok(Some(witness)) => return Ok(DefiningNumber { value: m, chi, witness }),
                Ok(None) => {}
            }
            if m == 0 || !next_subset(&mut sub, n) {
                break;
            }
        }
    }
    unreachable!("a full proper coloring is always defining")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn octahedron() -> Graph {
        // K6 minus the perfect matching {03, 14, 25}
        let mut edges = Vec::new();
        for a in 0..6 {
            for b in a + 1..6 {
                if b != a + 3 {
                    edges.push((a, b));
                }
            }
        }
        Graph::from_edges(6, &edges).unwrap()
    }

    #[test]
    fn chromatic_small() {
        let b = SearchBudget::default();
        assert_eq!(chromatic_number(&Graph::complete(6), &b).unwrap(), 6);
        assert_eq!(chromatic_number(&Graph::cycle(5), &b).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::cycle(6), &b).unwrap(), 2);
        assert_eq!(chromatic_number(&Graph::from_edges(3, &[]).unwrap(), &b).unwrap(), 1);
        assert_eq!(chromatic_number(&Graph::from_edges(0, &[]).unwrap(), &b), Err(EngineError::EmptyGraph));
    }

    #[test]
    fn count_examples() {
        let k5 = Graph::complete(5);
        let s = ColorAssignment::from_slice(5, &[1, 2, 3, 4]).unwrap();
        assert_eq!(count_extensions(&k5, &s, 5, 2).unwrap(), 1);
        let c6 = Graph::cycle(6);
        let s = ColorAssignment::from_pairs(2, [(0, 1)]).unwrap();
        assert_eq!(count_extensions(&c6, &s, 2, 2).unwrap(), 1);
        let oct = octahedron();
        let s = ColorAssignment::from_pairs(3, [(0, 1)]).unwrap();
        assert_eq!(count_extensions(&oct, &s, 3, 2).unwrap(), 2);
        // uncapped: u1 fixed, u2/u3 take {2,3} in either order; each v is forced to its twin's color
        assert_eq!(count_extensions(&oct, &s, 3, u64::MAX).unwrap(), 2);
        assert_eq!(count_extensions(&oct, &ColorAssignment::new(3), 3, u64::MAX).unwrap(), 6);
    }

    #[test]
    fn improper_partial_rejected() {
        let g = Graph::complete(3);
        let s = ColorAssignment::from_pairs(3, [(0, 1), (1, 1)]).unwrap();
        assert!(matches!(count_extensions(&g, &s, 3, 2), Err(EngineError::ImproperPartial(..))));
        assert_eq!(count_extensions(&g, &ColorAssignment::new(3), 3, 0), Err(EngineError::ZeroCap));
    }

    #[test]
    fn defining_set_examples() {
        let k5 = Graph::complete(5);
        let s = ColorAssignment::from_slice(5, &[1, 2, 3, 4]).unwrap();
        assert!(is_defining_set(&k5, &s, 5).unwrap());
        let oct = octahedron();
        let s = ColorAssignment::from_pairs(3, [(0, 1)]).unwrap();
        assert!(!is_defining_set(&oct, &s, 3).unwrap());
        let b = SearchBudget::default();
        assert_eq!(is_defining_set_verified(&oct, &s, 4, &b), Err(EngineError::ChiMismatch { claimed: 4, actual: 3 }));
    }

    #[test]
    fn extension_verdicts() {
        let oct = octahedron();
        let v = extend(&oct, &ColorAssignment::from_pairs(3, [(0, 1), (1, 2)]).unwrap(), 3).unwrap();
        assert_eq!(v.outcome, Extension::Unique);
        let w = v.witness.unwrap();
        assert!(w.is_total(6) && w.is_proper(&oct));
        // triangles rule out 2-colorings
        let v = extend(&oct, &ColorAssignment::from_pairs(2, [(0, 1)]).unwrap(), 2).unwrap();
        assert_eq!(v.outcome, Extension::None);
        assert!(v.witness.is_none());
    }

    #[test]
    fn defining_numbers_small() {
        let b = SearchBudget::default();
        let d = defining_number(&Graph::complete(7), &b).unwrap();
        assert_eq!((d.value, d.chi), (6, 7));
        let d = defining_number(&octahedron(), &b).unwrap();
        assert_eq!(d.value, 2);
        assert!(is_defining_set(&octahedron(), &d.witness, 3).unwrap());
        assert_eq!(defining_number(&Graph::from_edges(2, &[]).unwrap(), &b).unwrap().value, 0);
    }

    #[test]
    fn tiny_budget_exhausts() {
        let g = Graph::complete(12);
        let b = SearchBudget::new(3, Duration::from_secs(5));
        assert!(matches!(defining_number(&g, &b), Err(EngineError::BudgetExhausted { .. })));
    }

    #[test]
    fn lower_bound() {
        let g = Graph::complete(5);
        let s4 = ColorAssignment::from_slice(5, &[1, 2, 3, 4]).unwrap();
        let s3 = ColorAssignment::from_slice(5, &[1, 2, 3]).unwrap();
        assert!(lower_bound_check(&g, &s4, 5));
        assert!(!lower_bound_check(&g, &s3, 5));
    }

    #[test]
    fn subsets_in_lex_order() {
        let mut s = vec![0, 1];
        let mut all = vec![s.clone()];
        while next_subset(&mut s, 4) {
            all.push(s.clone());
        }
        assert_eq!(all, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
    }
}
