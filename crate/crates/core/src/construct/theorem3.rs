use super::{labeled_factorization, without, x, y, Builder, ConstructError, ConstructionResult};
use crate::factor::cyclic_bipartite_matchings;
use crate::graph::{Naming, VertexLabel};
use crate::trace::{BaseFamily, LabeledEdge, TraceParams};

/// `2(k-1)`-regular `k`-chromatic graph on `2k + s` vertices for even `k`.
///
/// With `h = k/2`, layer indices `h+1..=k` are written `1'..=h'`.
pub fn build_theorem3(k: usize, s: usize) -> Result<ConstructionResult, ConstructError> {
    if k < 4 || k % 2 == 1 {
        return Err(ConstructError::ParamOutOfRange(format!("k must be even and at least 4, got {k}")));
    }
    if s == 0 || s > k - 2 {
        return Err(ConstructError::ParamOutOfRange(format!("s must be in 1..={}, got {s}", k - 2)));
    }
    let h = k / 2;
    let params = TraceParams { k, l: None, s: Some(s), t: None };
    let mut b = Builder::new(BaseFamily::T3, params, 2, Naming::with_half(h))?;
    let matchings = cyclic_bipartite_matchings(h);

    for i in 1..=s.min(h - 1) {
        let mut del: Vec<LabeledEdge> = matchings[i].iter().map(|&(p, q)| (b.u(p), b.u(h + q))).collect();
        del = without(&del, &[(b.u(h - i), b.u(k))]);
        let mirror: Vec<LabeledEdge> = matchings[i - 1].iter().map(|&(p, q)| (b.v(p), b.v(h + q))).collect();
        del.extend(without(&mirror, &[(b.v(h - i + 1), b.v(k))]));
        del.push((b.u(h - i), b.v(h - i + 1)));
        b.absorb(x(i), k, &del)?;
    }

    if s >= h {
        let case1 = k.is_multiple_of(4);
        let (a_host, b_host, a_req, b_req) = if case1 {
            let a: Vec<_> = (h + 1..=k).map(|i| b.u(i)).collect();
            let bb: Vec<_> = (1..=h).map(|i| b.v(i)).collect();
            let ar: Vec<_> = (1..h).map(|t| (t, (b.u(h + t), b.u(k)))).collect();
            let br: Vec<_> = (1..h).map(|t| (t, (b.v(t), b.v(h)))).collect();
            (a, bb, ar, br)
        } else {
            let a: Vec<_> = (h + 1..=k).chain([1]).map(|i| b.u(i)).collect();
            let bb: Vec<_> = (1..=h).chain([k]).map(|i| b.v(i)).collect();
            let ar: Vec<_> = (1..=h).map(|t| (t, (b.u(1), b.u(h + t)))).collect();
            let br: Vec<_> = (1..=h).map(|t| (t, (b.v(t), b.v(k)))).collect();
            (a, bb, ar, br)
        };
        let fa = labeled_factorization(&b, &a_host, &a_req)?;
        let fb = labeled_factorization(&b, &b_host, &b_req)?;

        for t in 1..=s - h + 1 {
            let (mut del, shift) = if case1 {
                (without(&fa[t - 1], &[a_req[t - 1].1]), t)
            } else {
                let partner = fa[t - 1]
                    .iter()
                    .find_map(|&(p, q)| match (p == b.u(k), q == b.u(k)) {
                        (true, _) => Some(q),
                        (_, true) => Some(p),
                        _ => None,
                    })
                    .ok_or_else(|| b.fail("u_h' unmatched in factor"))?;
                let j = partner.index;
                let mut del = without(&fa[t - 1], &[a_req[t - 1].1, (b.u(h + j), b.u(k))]);
                del.push((b.u(j), b.u(h + j)));
                (del, j)
            };
            let consecutive = replace_consecutive(&b, &fb[t - 1], h, &mut del);
            if case1 {
                let i = consecutive.unwrap_or(h + t % (h - 1) + 1);
                del.push((b.v(i), b.v(k)));
            }
            for i in 1..h {
                del.push((x(i), b.u((shift + i - 1) % h + 1)));
            }
            let color = if case1 && t == h - 1 { h - 1 } else { t + h };
            b.absorb(y(t), color, &del)?;
        }
    }

    let defining: Vec<_> = (1..k).map(|i| b.u(i)).collect();
    let clique: Vec<_> = (1..=h).chain([k]).map(|i| b.u(i)).chain((h + 1..k).map(|i| b.v(i))).collect();
    b.finish(2 * (k - 1), &defining, &clique)
}

/// Pushes the edges of `factor` onto `del`, except that each `v_i v_{i+1}`
/// with both ends unprimed becomes `v_i' v_{i+1}`. Returns the smallest such
/// `i`, whose `v_i` is left uncovered.
fn replace_consecutive(b: &Builder, factor: &[LabeledEdge], h: usize, del: &mut Vec<LabeledEdge>) -> Option<usize> {
    let unprimed = |l: &VertexLabel| (!l.primed).then_some(l.index);
    let mut smallest = None;
    for &(p, q) in factor {
        let pair = match (unprimed(&p), unprimed(&q)) {
            (Some(i), Some(j)) if i.abs_diff(j) == 1 => Some(i.min(j)),
            _ => None,
        };
        match pair {
            Some(i) => {
                del.push((b.v(h + i), b.v(i + 1)));
                smallest = Some(smallest.map_or(i, |m: usize| m.min(i)));
            }
            None => del.push((p, q)),
        }
    }
    smallest
}
