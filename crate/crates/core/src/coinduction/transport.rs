use crate::action::{certify_filtered, FilteredAction, GroupAction, ScfAction};
use crate::error::{Error, Result};
use crate::filtration::{validate_scf, Filtration, ScfCertificate};
use crate::group::Subgroup;

/// One application of the transport operator:
/// `t_i = {g ∈ G_i : [B_j, g] ⊆ G_{i+j} for every j ≥ 1}`.
///
/// Only `j ≤ J = max(N_B, N_G)` is checked: for `j ≥ J` both `B_j = B_J` and
/// `G_{i+j} = G_{i+J}` (`= G_N`), so larger `j` repeat the `j = J` condition.
/// Likewise `t_i` is constant for `i ≥ N_G`, so `N_G` levels suffice.
///
/// The result is re-verified to be strongly central, stable under `B_1`, and
/// contained in `G_*`; a failure there is reported as an internal fault.
pub fn t_step(a: &FilteredAction) -> Result<FilteredAction> {
    let action = a.action();
    let (b_f, g_f) = (a.actor_filtration(), a.target_filtration());
    let group = action.target();
    let bound = a.bound();
    let mut levels = Vec::with_capacity(g_f.len());
    for i in 1..=g_f.len() {
        let members = g_f.level(i).members().ones().filter(|&g| {
            (1..=bound).all(|j| {
                let dest = g_f.level(i + j);
                b_f.level(j)
                    .members()
                    .ones()
                    .all(|b| dest.contains(action.bracket(b, g)))
            })
        });
        let level = Subgroup::from_elements(group, members)
            .map_err(|e| Error::fault(format!("transport level {i} is not a subgroup: {e}")))?;
        levels.push(level);
    }
    let t = Filtration::new(levels).map_err(|e| Error::fault(format!("transport levels: {e}")))?;
    if !t.is_within(g_f) {
        return Err(Error::fault("transport left the input filtration"));
    }
    let cert = validate_scf(&t).map_err(|e| Error::fault(format!("transport output: {e}")))?;
    FilteredAction::new(action.clone(), b_f.clone(), cert)
        .map_err(|e| Error::fault(format!("transport output is not stable: {e}")))
}

/// Convenience wrapper taking the pieces separately.
pub fn transport(
    action: &GroupAction,
    actor_f: &ScfCertificate,
    target_f: &ScfCertificate,
) -> Result<ScfCertificate> {
    let a = FilteredAction::new(action.clone(), actor_f.clone(), target_f.clone())?;
    Ok(t_step(&a)?.target_filtration().clone())
}

/// The descending sequence `t⁰ = G_*, t¹, …` up to its first repetition.
#[derive(Clone, Debug)]
pub struct TransportTower {
    levels: Vec<ScfCertificate>,
    limit: ScfAction,
}

impl TransportTower {
    /// Every stage, starting with the input filtration and ending with the limit.
    pub fn levels(&self) -> &[ScfCertificate] {
        &self.levels
    }

    /// Number of stages computed, the input included.
    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// Applications of `t_step` that changed the filtration.
    pub fn iterations(&self) -> usize {
        self.levels.len() - 1
    }

    /// The stable filtration with its certified action.
    pub fn limit(&self) -> &ScfAction {
        &self.limit
    }

    pub fn into_limit(self) -> ScfAction {
        self.limit
    }
}

/// Iterates [`t_step`] to its fixed point, the largest sub-filtration of
/// `G_*` on which the action of `B_*` is strongly central.
pub fn t_infinity(a: &FilteredAction) -> Result<TransportTower> {
    let mut current = a.clone();
    let mut levels = vec![current.target_filtration().clone()];
    loop {
        let next = t_step(&current)?;
        if next.target_filtration() == current.target_filtration() {
            break;
        }
        levels.push(next.target_filtration().clone());
        current = next;
    }
    let limit = certify_filtered(current)
        .map_err(|e| Error::fault(format!("transport fixed point is not certified: {e}")))?;
    Ok(TransportTower { levels, limit })
}
