//! Matchings and factorizations of complete and complete bipartite graphs.
//!
//! Everything here works on plain vertex ids chosen by the caller; edges are
//! normalized to `(min, max)`.

use std::collections::{BTreeSet, HashSet};

use thiserror::Error;

use crate::graph::{norm, Edge, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FactorError {
    #[error("1-factorization needs an even number (>= 2) of vertices, got {0}")]
    OddOrder(usize),
    #[error("2-factorization needs an odd number (>= 3) of vertices, got {0}")]
    EvenOrder(usize),
    #[error("asked for {count} 2-factors, at most {max} exist")]
    CountTooLarge { count: usize, max: usize },
    #[error("unsatisfiable factor requirements: {0}")]
    UnsatisfiableRequirements(String),
    #[error("no matching with the requested unsaturated set avoids the used edges")]
    NoSuchMatching,
}

/// Ordered edge-disjoint factors of the complete graph on `host`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub host: Vec<Vertex>,
    pub factors: Vec<Vec<Edge>>,
}

impl Factorization {
    /// Index of the factor containing `e`.
    pub fn position(&self, e: Edge) -> Option<usize> {
        let e = norm(e.0, e.1);
        self.factors.iter().position(|f| f.contains(&e))
    }

    pub fn is_edge_disjoint(&self) -> bool {
        let mut seen = HashSet::new();
        self.factors.iter().flatten().all(|&e| seen.insert(e))
    }

    /// Every factor is `r`-regular and spanning on the host.
    pub fn factors_are_regular(&self, r: usize) -> bool {
        self.factors
            .iter()
            .all(|f| self.host.iter().all(|&v| f.iter().filter(|&&(a, b)| a == v || b == v).count() == r))
    }
}

/// `m` cyclic perfect matchings between `a_1..a_m` and `b_1..b_m`, as 1-based
/// index pairs. Matching `i` pairs `a_t` with `b_((i + t - 2) mod m) + 1`.
pub fn cyclic_bipartite_matchings(m: usize) -> Vec<Vec<(usize, usize)>> {
    (1..=m).map(|i| (1..=m).map(|t| (t, (i + t - 2) % m + 1)).collect()).collect()
}

/// Round-robin 1-factorization of the complete graph on `vertices`; the last
/// vertex stays fixed while the others rotate.
pub fn one_factorization(vertices: &[Vertex]) -> Result<Factorization, FactorError> {
    let n = vertices.len();
    if n < 2 || n % 2 == 1 {
        return Err(FactorError::OddOrder(n));
    }
    let fixed = vertices[n - 1];
    let ring = &vertices[..n - 1];
    let m = ring.len();
    let factors = (0..m)
        .map(|r| {
            let mut f = vec![norm(fixed, ring[r])];
            for i in 1..=(m - 1) / 2 {
                f.push(norm(ring[(r + i) % m], ring[(r + m - i) % m]));
            }
            f
        })
        .collect();
    Ok(Factorization { host: vertices.to_vec(), factors })
}

/// Permutes factors so each required edge lies in its required slot (1-based).
/// Factors without a requirement keep their relative order.
pub fn reindex_factorization(f: &Factorization, requirements: &[(usize, Edge)]) -> Result<Factorization, FactorError> {
    let slots = f.factors.len();
    let mut target_of_source: Vec<Option<usize>> = vec![None; slots];
    let mut source_of_target: Vec<Option<usize>> = vec![None; slots];
    for &(slot, edge) in requirements {
        if slot == 0 || slot > slots {
            return Err(FactorError::UnsatisfiableRequirements(format!("slot {slot} out of 1..={slots}")));
        }
        let src = f
            .position(edge)
            .ok_or_else(|| FactorError::UnsatisfiableRequirements(format!("edge {edge:?} in no factor")))?;
        let dst = slot - 1;
        match (target_of_source[src], source_of_target[dst]) {
            (Some(t), _) if t != dst => {
                return Err(FactorError::UnsatisfiableRequirements(format!(
                    "factor {} needed in slots {} and {}",
                    src + 1,
                    t + 1,
                    slot
                )))
            }
            (_, Some(s)) if s != src => {
                return Err(FactorError::UnsatisfiableRequirements(format!(
                    "slot {slot} claimed by factors {} and {}",
                    s + 1,
                    src + 1
                )))
            }
            _ => {
                target_of_source[src] = Some(dst);
                source_of_target[dst] = Some(src);
            }
        }
    }
    let mut free = (0..slots).filter(|&s| target_of_source[s].is_none());
    let factors = source_of_target
        .iter()
        .map(|src| {
            let s = src.unwrap_or_else(|| free.next().expect("free factors fill free slots"));
            f.factors[s].clone()
        })
        .collect();
    Ok(Factorization { host: f.host.clone(), factors })
}

/// First `count` Hamiltonian cycles of the Walecki decomposition of the
/// complete graph on an odd number of `vertices` (last vertex is the hub).
pub fn two_factorization(vertices: &[Vertex], count: usize) -> Result<Factorization, FactorError> {
    let n = vertices.len();
    if n < 3 || n.is_multiple_of(2) {
        return Err(FactorError::EvenOrder(n));
    }
    let max = (n - 1) / 2;
    if count > max {
        return Err(FactorError::CountTooLarge { count, max });
    }
    let hub = vertices[n - 1];
    let ring = &vertices[..n - 1];
    let m = ring.len();
    let factors = (0..count)
        .map(|i| {
            // zigzag path i, i+1, i-1, i+2, i-2, ... closed through the hub
            let mut path = vec![i];
            for step in 1..m {
                let d = step.div_ceil(2);
                let p = if step % 2 == 1 { (i + d) % m } else { (i + m - d) % m };
                path.push(p);
            }
            let mut cycle: Vec<Edge> = path.windows(2).map(|w| norm(ring[w[0]], ring[w[1]])).collect();
            cycle.push(norm(hub, ring[path[0]]));
            cycle.push(norm(hub, ring[path[m - 1]]));
            cycle
        })
        .collect();
    Ok(Factorization { host: vertices.to_vec(), factors })
}

/// A matching of the complete bipartite graph on `(part_a, part_b)` that
/// saturates exactly the vertices outside `unsaturated` and uses no edge of
/// `used`. Cyclic shifts of the reduced vertex lists are tried first; if
/// every shift hits a used edge an augmenting-path search takes over.
pub fn maximal_bipartite_matching(
    part_a: &[Vertex],
    part_b: &[Vertex],
    unsaturated: &BTreeSet<Vertex>,
    used: &HashSet<Edge>,
) -> Result<Vec<Edge>, FactorError> {
    let a: Vec<Vertex> = part_a.iter().copied().filter(|v| !unsaturated.contains(v)).collect();
    let b: Vec<Vertex> = part_b.iter().copied().filter(|v| !unsaturated.contains(v)).collect();
    if a.len() != b.len() {
        return Err(FactorError::NoSuchMatching);
    }
    let m = a.len();
    let allowed = |i: usize, j: usize| !used.contains(&norm(a[i], b[j]));
    for shift in 0..m.max(1) {
        if (0..m).all(|i| allowed(i, (i + shift) % m)) {
            return Ok((0..m).map(|i| norm(a[i], b[(i + shift) % m])).collect());
        }
    }
    // Kuhn's augmenting paths, vertices visited in list order
    let mut match_b: Vec<Option<usize>> = vec![None; m];
    fn augment(i: usize, seen: &mut [bool], match_b: &mut [Option<usize>], ok: &dyn Fn(usize, usize) -> bool) -> bool {
        for j in 0..seen.len() {
            if ok(i, j) && !seen[j] {
                seen[j] = true;
                if match_b[j].is_none_or(|i2| augment(i2, seen, match_b, ok)) {
                    match_b[j] = Some(i);
                    return true;
                }
            }
        }
        false
    }
    for i in 0..m {
        let mut seen = vec![false; m];
        if !augment(i, &mut seen, &mut match_b, &allowed) {
            return Err(FactorError::NoSuchMatching);
        }
    }
    let mut out: Vec<Edge> = match_b.iter().enumerate().map(|(j, i)| norm(a[i.expect("perfect")], b[j])).collect();
    out.sort_unstable();
    Ok(out)
}
