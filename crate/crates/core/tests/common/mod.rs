//! Independent reference implementations used to cross-check the engine.
#![allow(dead_code)]

use defset::{ColorAssignment, Graph};
use rand::Rng;

/// Number of proper colorings in `1..=k` agreeing with `fixed` (None = free),
/// by plain enumeration of all `k^n` assignments.
pub fn naive_count(n: usize, edges: &[(usize, usize)], k: u32, fixed: &[Option<u32>]) -> u64 {
    if n == 0 {
        return 1;
    }
    let mut col = vec![1u32; n];
    for v in 0..n {
        if let Some(c) = fixed[v] {
            col[v] = c;
        }
    }
    let free: Vec<usize> = (0..n).filter(|&v| fixed[v].is_none()).collect();
    let mut count = 0;
    loop {
        if edges.iter().all(|&(a, b)| col[a] != col[b]) {
            count += 1;
        }
        // odometer over the free vertices
        let mut i = 0;
        loop {
            if i == free.len() {
                return count;
            }
            let v = free[i];
            if col[v] < k {
                col[v] += 1;
                break;
            }
            col[v] = 1;
            i += 1;
        }
    }
}

/// Smallest `k` with a proper `k`-coloring, by enumeration.
pub fn naive_chi(n: usize, edges: &[(usize, usize)]) -> usize {
    let free = vec![None; n];
    (1..=n as u32).find(|&k| naive_count(n, edges, k, &free) > 0).unwrap_or(0) as usize
}

/// Exhaustive backtracking count without propagation or ordering heuristics.
pub fn backtrack_count(g: &Graph, partial: &ColorAssignment, k: u32, cap: u64) -> u64 {
    fn go(g: &Graph, v: usize, col: &mut Vec<u32>, k: u32, cap: u64, acc: &mut u64) {
        if *acc >= cap {
            return;
        }
        if v == g.n() {
            *acc += 1;
            return;
        }
        if col[v] != 0 {
            // free vertices already compared against every fixed neighbour
            if g.neighbors(v).filter(|&w| w < v).all(|w| col[w] != col[v]) {
                go(g, v + 1, col, k, cap, acc);
            }
            return;
        }
        for c in 1..=k {
            if g.neighbors(v).all(|w| col[w] != c) {
                col[v] = c;
                go(g, v + 1, col, k, cap, acc);
                col[v] = 0;
            }
        }
    }
    let mut col = vec![0u32; g.n()];
    for (v, c) in partial.iter() {
        col[v] = c;
    }
    let mut acc = 0;
    go(g, 0, &mut col, k, cap, &mut acc);
    acc
}

pub fn random_edges(rng: &mut impl Rng, n: usize, p: f64) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    edges
}

pub fn octahedron() -> Graph {
    let edges: Vec<(usize, usize)> =
        (0..6).flat_map(|a| (a + 1..6).map(move |b| (a, b))).filter(|&(a, b)| b != a + 3).collect();
    Graph::from_edges(6, &edges).unwrap()
}

/// Some partial coloring on at most `max` vertices with exactly one
/// extension, by trying every subset and every coloring of it.
pub fn smallest_defining_at_most(g: &Graph, k: u32, max: usize) -> Option<ColorAssignment> {
    let n = g.n();
    for mask in 0u64..(1 << n) {
        if mask.count_ones() as usize > max {
            continue;
        }
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let mut cols = vec![1u32; vs.len()];
        loop {
            let s = ColorAssignment::from_pairs(k, vs.iter().copied().zip(cols.iter().copied())).unwrap();
            if s.is_proper(g) && backtrack_count(g, &s, k, 2) == 1 {
                return Some(s);
            }
            let mut i = 0;
            while i < cols.len() && cols[i] == k {
                cols[i] = 1;
                i += 1;
            }
            if i == cols.len() {
                break;
            }
            cols[i] += 1;
        }
    }
    None
}
