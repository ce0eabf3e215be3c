use super::{Builder, ConstructError, ConstructionResult};
use crate::factor;
use crate::graph::Naming;
use crate::trace::{BaseFamily, TraceParams};

/// `(2(k-1) + t)`-regular `k`-chromatic graph on `3k - 1` vertices, built
/// from `G_{3(k)}` by deleting `v_k` and adding edges between the outer
/// layers and inside the middle one.
pub fn build_theorem1(k: usize, t: usize) -> Result<ConstructionResult, ConstructError> {
    if k < 3 {
        return Err(ConstructError::ParamOutOfRange(format!("k must be at least 3, got {k}")));
    }
    if t == k - 2 {
        return Err(ConstructError::TEqualsKMinus2 { k });
    }
    if t > k - 2 {
        return Err(ConstructError::ParamOutOfRange(format!("t must be at most k - 3, got t={t}, k={k}")));
    }
    if k.is_multiple_of(2) && t % 2 == 1 {
        return Err(ConstructError::ParityViolation(format!("k={k} is even, so t must be even, got {t}")));
    }
    let params = TraceParams { k, l: None, s: None, t: Some(t) };
    let mut b = Builder::new(BaseFamily::T1, params, 3, Naming::PLAIN)?;

    b.step(None)?;
    b.remove_vertex(b.v(k))?;
    for i in 1..=k - 2 {
        b.join(b.u(i), b.w(i + 1))?;
    }
    b.join(b.u(k - 1), b.w(1))?;

    if t > 0 {
        b.step(None)?;
        for i in 1..=k {
            for j in 1..=t {
                b.join(b.u(i), b.w((i + j + 1) % k + 1))?;
            }
        }
        let vs: Vec<usize> = (1..k).collect();
        let f = if k % 2 == 1 {
            let mut f = factor::one_factorization(&vs).map_err(|e| b.fail(e.to_string()))?;
            f.factors.truncate(t);
            f
        } else {
            factor::two_factorization(&vs, t / 2).map_err(|e| b.fail(e.to_string()))?
        };
        for fac in &f.factors {
            for &(p, q) in fac {
                b.join(b.v(p), b.v(q))?;
            }
        }
    }

    let defining: Vec<_> = (1..k).map(|i| b.u(i)).collect();
    let clique: Vec<_> = (1..=k).map(|i| b.u(i)).collect();
    b.finish(2 * (k - 1) + t, &defining, &clique)
}
