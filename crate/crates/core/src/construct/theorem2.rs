use super::{labeled_factorization, without, x, y, Builder, ConstructError, ConstructionResult};
use crate::factor::cyclic_bipartite_matchings;
use crate::graph::Naming;
use crate::trace::{BaseFamily, LabeledEdge, TraceParams};

/// `2(k-1)`-regular `k`-chromatic graph on `2k + s` vertices for odd `k`.
///
/// With `h = (k-1)/2`, layer indices `h+1..=2h` are written `1'..=h'`.
/// Vertex `x_i` takes over the `i`-th cyclic matching between `u_1..u_h`
/// and `u_1'..u_h'` and its mirror on the `v` side; vertices `y_t` take
/// over 1-factors inside the primed `u` block and the unprimed `v` block.
pub fn build_theorem2(k: usize, s: usize) -> Result<ConstructionResult, ConstructError> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(ConstructError::ParamOutOfRange(format!("k must be odd and at least 3, got {k}")));
    }
    if s == 0 || s > k - 2 {
        return Err(ConstructError::ParamOutOfRange(format!("s must be in 1..={}, got {s}", k - 2)));
    }
    let h = (k - 1) / 2;
    let params = TraceParams { k, l: None, s: Some(s), t: None };
    let mut b = Builder::new(BaseFamily::T2, params, 2, Naming::with_half(h))?;
    let matchings = cyclic_bipartite_matchings(h);

    for i in 1..=s.min(h) {
        let mut del: Vec<LabeledEdge> = matchings[i - 1].iter().map(|&(p, q)| (b.u(p), b.u(h + q))).collect();
        del.extend(matchings[i - 1].iter().map(|&(p, q)| (b.v(p), b.v(h + q))));
        b.absorb(x(i), k, &del)?;
    }

    if s > h {
        let case1 = k % 4 == 1;
        let (a_host, b_host, a_fixed, b_fixed, slots) = if case1 {
            let a: Vec<_> = (h + 1..=2 * h).map(|i| b.u(i)).collect();
            let bb: Vec<_> = (1..=h).map(|i| b.v(i)).collect();
            (a, bb, b.u(2 * h), b.v(h), h - 1)
        } else {
            let a: Vec<_> = (h + 1..=2 * h).chain([k]).map(|i| b.u(i)).collect();
            let bb: Vec<_> = (1..=h).chain([k]).map(|i| b.v(i)).collect();
            (a, bb, b.u(k), b.v(k), h)
        };
        let a_req: Vec<_> = (1..=slots).map(|t| (t, (b.u(h + t), a_fixed))).collect();
        let b_req: Vec<_> = (1..=slots).map(|t| (t, (b.v(t), b_fixed))).collect();
        let fa = labeled_factorization(&b, &a_host, &a_req)?;
        let fb = labeled_factorization(&b, &b_host, &b_req)?;

        for t in 1..=s - h {
            let mut del = without(&fa[t - 1], &[a_req[t - 1].1]);
            del.extend(without(&fb[t - 1], &[b_req[t - 1].1]));
            if case1 {
                del.push((b.u(t), b.v(h)));
                del.push((b.u(h + t), b.v(k)));
            } else {
                del.push((b.v(k), b.u(t)));
            }
            del.push((x(1), b.v(t)));
            for i in 2..=h {
                del.push((x(i), b.u((t + i - 2) % h + 1)));
            }
            let color = if case1 { k - 1 } else { t + h };
            b.absorb(y(t), color, &del)?;
        }
    }

    let defining: Vec<_> = (1..k).map(|i| b.u(i)).collect();
    let mut clique: Vec<_> = (1..=h).map(|i| b.u(i)).chain((h + 1..=2 * h).map(|i| b.v(i))).collect();
    clique.push(x(1));
    b.finish(2 * (k - 1), &defining, &clique)
}
