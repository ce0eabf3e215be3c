use super::{Builder, ConstructError, ConstructionResult};
use crate::graph::{Family, Naming};
use crate::trace::{BaseFamily, TraceParams};

/// The layered graph `G_{l(k)}`: `K_k`, then `l - 2` independent layers,
/// then `K_k`, consecutive layers chromatically joined.
pub fn build_glk(l: usize, k: usize) -> Result<ConstructionResult, ConstructError> {
    if l < 2 || l > Family::ALL.len() || k < 2 {
        return Err(ConstructError::ParamOutOfRange(format!(
            "glk needs 2 <= l <= {} and k >= 2, got l={l}, k={k}",
            Family::ALL.len()
        )));
    }
    let params = TraceParams { k, l: Some(l), s: None, t: None };
    let b = Builder::new(BaseFamily::Glk, params, l, Naming::PLAIN)?;
    let defining: Vec<_> = (1..k).map(|i| b.u(i)).collect();
    let clique: Vec<_> = (1..=k).map(|i| b.u(i)).collect();
    b.finish(2 * (k - 1), &defining, &clique)
}
