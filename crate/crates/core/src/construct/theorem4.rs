use std::collections::{BTreeSet, HashSet};

use super::{x, Builder, ConstructError, ConstructionResult};
use crate::factor;
use crate::graph::{Edge, Naming};
use crate::trace::{BaseFamily, TraceParams};

/// `(2(k-1) + t)`-regular `k`-chromatic graph on `2k + s` vertices.
///
/// Vertices `x_1..x_s` are added to `G_{2(k)}`, `x_i` adjacent to every
/// `u_j, v_j` with `j != i`, and `t` regular factors are laid on the `x`
/// clique. The surplus degree on the `u` and `v` layers is then removed by
/// deleting matchings between the blocks
/// `A = 1..=s/2`, `C = s/2+1..=s`, `D = s+1..=s+(k-s)/2` and `B` (the rest).
pub fn build_theorem4(k: usize, s: usize, t: usize) -> Result<ConstructionResult, ConstructError> {
    if k < 4 || s < 2 || s > k - 2 || t == 0 || t >= s {
        return Err(ConstructError::ParamOutOfRange(format!(
            "need k >= 4, 2 <= s <= k - 2, 1 <= t < s, got k={k}, s={s}, t={t}"
        )));
    }
    if s % 2 == 1 && t % 2 == 1 {
        return Err(ConstructError::ParityViolation(format!("s={s} and t={t} are both odd")));
    }
    let params = TraceParams { k, l: None, s: Some(s), t: Some(t) };
    let mut b = Builder::new(BaseFamily::T4, params, 2, Naming::PLAIN)?;

    for i in 1..=s {
        b.step(Some((x(i), i as u32)))?;
        for j in (1..=k).filter(|&j| j != i) {
            b.join(x(i), b.u(j))?;
            b.join(x(i), b.v(j))?;
        }
    }
    let xs: Vec<usize> = (1..=s).collect();
    let xf = if s.is_multiple_of(2) {
        let mut f = factor::one_factorization(&xs).map_err(|e| b.fail(e.to_string()))?;
        f.factors.truncate(t);
        f
    } else {
        factor::two_factorization(&xs, t / 2).map_err(|e| b.fail(e.to_string()))?
    };
    b.step(None)?;
    for fac in &xf.factors {
        for &(p, q) in fac {
            b.join(x(p), x(q))?;
        }
    }

    let a = s / 2;
    let dsz = (k - s) / 2;
    let b0 = s + dsz + 1;
    let part_a: Vec<usize> = (1..=a).collect();
    let part_c: Vec<usize> = (a + 1..=s).collect();
    let part_d: Vec<usize> = (s + 1..b0).collect();
    let part_b: Vec<usize> = (b0..=k).collect();
    let mut used_u: HashSet<Edge> = HashSet::new();
    let mut used_v: HashSet<Edge> = HashSet::new();

    // Step 1: B-D matchings on both layers.
    let odd_rest = (k - s) % 2 == 1;
    b.step(None)?;
    let unsat_u: BTreeSet<usize> = if odd_rest { [k - 1].into() } else { BTreeSet::new() };
    let unsat_v: BTreeSet<usize> = if odd_rest { [k].into() } else { BTreeSet::new() };
    for (p, q) in
        factor::maximal_bipartite_matching(&part_b, &part_d, &unsat_u, &used_u).map_err(|e| b.fail(e.to_string()))?
    {
        b.delete(b.u(p), b.u(q))?;
        used_u.insert((p, q));
    }
    for (p, q) in
        factor::maximal_bipartite_matching(&part_b, &part_d, &unsat_v, &used_v).map_err(|e| b.fail(e.to_string()))?
    {
        b.delete(b.v(p), b.v(q))?;
        used_v.insert((p, q));
    }
    if odd_rest {
        b.delete(b.u(k - 1), b.v(k))?;
    }

    // Step 2: matchings between A+B and C+D.
    let ab: Vec<usize> = part_a.iter().chain(&part_b).copied().collect();
    let cd: Vec<usize> = part_c.iter().chain(&part_d).copied().collect();
    let m2 = (s - t - 1).min(k / 2 - 1);
    let (left_out_u, left_out_v): (Vec<usize>, Vec<usize>) = if s.is_multiple_of(2) {
        ((1..=a).chain(b0..).take(m2).collect(), (2..=a).chain([1]).chain(b0 + 1..).take(m2).collect())
    } else {
        ((a + 1..).take(m2).collect(), (a + 2..=s).chain([a + 1]).chain(s + 2..).take(m2).collect())
    };
    for j in 0..m2 {
        b.step(None)?;
        let (unsat_u, unsat_v): (BTreeSet<usize>, BTreeSet<usize>) =
            if k % 2 == 1 { ([left_out_u[j]].into(), [left_out_v[j]].into()) } else { Default::default() };
        for (p, q) in
            factor::maximal_bipartite_matching(&ab, &cd, &unsat_u, &used_u).map_err(|e| b.fail(e.to_string()))?
        {
            b.delete(b.u(p), b.u(q))?;
            used_u.insert((p, q));
        }
        for (p, q) in
            factor::maximal_bipartite_matching(&ab, &cd, &unsat_v, &used_v).map_err(|e| b.fail(e.to_string()))?
        {
            b.delete(b.v(p), b.v(q))?;
            used_v.insert((p, q));
        }
        if k % 2 == 1 {
            b.delete(b.u(left_out_u[j]), b.v(left_out_v[j]))?;
        }
    }

    // Step 3: shifted perfect matchings between the layers.
    if s - t > k / 2 {
        for j in 1..=s - t - k / 2 {
            b.step(None)?;
            for part in [&cd, &ab] {
                let len = part.len();
                for i in 0..len {
                    b.delete(b.u(part[i]), b.v(part[(i + j + 1) % len]))?;
                }
            }
        }
    }

    let defining: Vec<_> = (2..=s).map(x).chain((s + 1..=k).map(|i| b.v(i))).collect();
    let clique: Vec<_> = ab.iter().map(|&i| b.u(i)).chain(cd.iter().map(|&i| b.v(i))).collect();
    b.finish(2 * (k - 1) + t, &defining, &clique)
}
