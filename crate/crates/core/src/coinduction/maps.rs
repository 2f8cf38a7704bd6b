use crate::action::GroupAction;
use crate::budget::{saturating_pow, Budget};
use crate::error::{Error, Result};
use crate::group::{Elem, FunctionGroup, GroupRef, Homomorphism};

/// How the carrier of an [`EquivariantMapGroup`] was enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapConstruction {
    /// All `|Y|^|B|` maps, filtered by the equivariance law.
    Exhaustive,
    /// Free values in the kernel-fixed points on right-coset representatives of `α(E)`.
    Transversal,
}

/// `hom_E(B, Y)`: the `E`-equivariant maps `u: B → Y`, `u(α(e)b) = e·u(b)`,
/// under pointwise product, with `B` acting by `(b·u)(x) = u(xb)`.
#[derive(Clone, Debug)]
pub struct EquivariantMapGroup {
    alpha: Homomorphism,
    y_action: GroupAction,
    functions: FunctionGroup,
    b_action: GroupAction,
    construction: MapConstruction,
}

impl EquivariantMapGroup {
    pub fn alpha(&self) -> &Homomorphism {
        &self.alpha
    }

    /// The action of `E` on `Y`.
    pub fn y_action(&self) -> &GroupAction {
        &self.y_action
    }

    pub fn functions(&self) -> &FunctionGroup {
        &self.functions
    }

    pub fn carrier(&self) -> &GroupRef {
        self.functions.group()
    }

    pub fn b_action(&self) -> &GroupAction {
        &self.b_action
    }

    pub fn construction(&self) -> MapConstruction {
        self.construction
    }

    /// `u(b)` for carrier element `u`.
    pub fn evaluate(&self, u: Elem, b: Elem) -> Elem {
        self.functions.map(u)[b]
    }
}

fn check_inputs(alpha: &Homomorphism, y_action: &GroupAction) -> Result<()> {
    if alpha.source().id() != y_action.actor().id() {
        return Err(Error::ParentMismatch);
    }
    Ok(())
}

fn is_equivariant_map(
    alpha: &Homomorphism,
    y_action: &GroupAction,
    u: &[Elem],
    every: bool,
) -> bool {
    let (e_grp, b_grp) = (alpha.source(), alpha.target());
    let all: Vec<Elem>;
    let actors: &[Elem] = if every {
        all = e_grp.elements().collect();
        &all
    } else {
        e_grp.generators()
    };
    actors.iter().all(|&e| {
        let a = alpha.apply(e);
        b_grp
            .elements()
            .all(|b| u[b_grp.mul(a, b)] == y_action.apply(e, u[b]))
    })
}

/// Filters every set map `B → Y`; checks the law for every `e ∈ E`.
pub fn equivariant_maps_exhaustive(
    alpha: &Homomorphism,
    y_action: &GroupAction,
    budget: &Budget,
) -> Result<Vec<Vec<Elem>>> {
    check_inputs(alpha, y_action)?;
    let (nb, ny) = (alpha.target().order(), y_action.target().order());
    Budget::check("set maps B → Y", saturating_pow(ny, nb), budget.map_space)?;
    let mut out = Vec::new();
    let mut u = vec![0; nb];
    loop {
        if is_equivariant_map(alpha, y_action, &u, true) {
            out.push(u.clone());
        }
        // odometer, last coordinate fastest, so output is lexicographic
        let Some(k) = (0..nb).rev().find(|&k| u[k] + 1 < ny) else {
            break;
        };
        u[k] += 1;
        u[k + 1..].iter_mut().for_each(|v| *v = 0);
    }
    Ok(out)
}

/// Builds each map from a free choice of value in `Fix(ker α)` on every
/// right coset `α(E)·r`, extended by `u(α(e)r) = e·u(r)`.
pub fn equivariant_maps_transversal(
    alpha: &Homomorphism,
    y_action: &GroupAction,
    budget: &Budget,
) -> Result<Vec<Vec<Elem>>> {
    check_inputs(alpha, y_action)?;
    let (e_grp, b_grp, y_grp) = (alpha.source(), alpha.target(), y_action.target());
    let kernel = alpha.kernel();
    let fixed: Vec<Elem> = y_grp
        .elements()
        .filter(|&y| kernel.members().ones().all(|k| y_action.apply(k, y) == y))
        .collect();
    // one preimage per element of α(E)
    let mut preimage = vec![usize::MAX; b_grp.order()];
    for e in e_grp.elements() {
        let a = alpha.apply(e);
        if preimage[a] == usize::MAX {
            preimage[a] = e;
        }
    }
    // coset[b] = (index of representative, e with α(e)·r = b)
    let mut reps = Vec::new();
    let mut coset = vec![(usize::MAX, 0); b_grp.order()];
    for b in b_grp.elements() {
        if coset[b].0 != usize::MAX {
            continue;
        }
        for a in b_grp.elements().filter(|&a| preimage[a] != usize::MAX) {
            coset[b_grp.mul(a, b)] = (reps.len(), preimage[a]);
        }
        reps.push(b);
    }
    let count = saturating_pow(fixed.len(), reps.len());
    Budget::check("equivariant maps", count, budget.carrier_order as u128)?;
    let mut out = Vec::with_capacity(count as usize);
    let mut choice = vec![0; reps.len()];
    loop {
        let u: Vec<Elem> = b_grp
            .elements()
            .map(|b| {
                let (r, e) = coset[b];
                y_action.apply(e, fixed[choice[r]])
            })
            .collect();
        if !is_equivariant_map(alpha, y_action, &u, false) {
            return Err(Error::fault("transversal extension is not equivariant"));
        }
        out.push(u);
        let Some(k) = (0..reps.len()).rev().find(|&k| choice[k] + 1 < fixed.len()) else {
            break;
        };
        choice[k] += 1;
        choice[k + 1..].iter_mut().for_each(|v| *v = 0);
    }
    out.sort_unstable();
    Ok(out)
}

/// The group `hom_E(B, Y)` with its `B`-action, both certified.
///
/// Uses exhaustive filtering when `|Y|^|B|` fits the map-space budget and the
/// coset-transversal construction otherwise.
pub fn equivariant_maps(
    alpha: &Homomorphism,
    y_action: &GroupAction,
    budget: &Budget,
) -> Result<EquivariantMapGroup> {
    check_inputs(alpha, y_action)?;
    let (b_grp, y_grp) = (alpha.target(), y_action.target());
    let exhaustive = saturating_pow(y_grp.order(), b_grp.order()) <= budget.map_space;
    let (maps, construction) = if exhaustive {
        (
            equivariant_maps_exhaustive(alpha, y_action, budget)?,
            MapConstruction::Exhaustive,
        )
    } else {
        (
            equivariant_maps_transversal(alpha, y_action, budget)?,
            MapConstruction::Transversal,
        )
    };
    let functions = FunctionGroup::pointwise(b_grp.order(), y_grp, maps, budget)?;
    let b_action = GroupAction::from_fn(b_grp, functions.group(), |b, u| {
        let shifted: Vec<Elem> = b_grp
            .elements()
            .map(|x| functions.map(u)[b_grp.mul(x, b)])
            .collect();
        functions.lookup(&shifted).unwrap_or(usize::MAX)
    })
    .map_err(|e| Error::fault(format!("precomposition action on maps: {e}")))?;
    Ok(EquivariantMapGroup {
        alpha: alpha.clone(),
        y_action: y_action.clone(),
        functions,
        b_action,
        construction,
    })
}
