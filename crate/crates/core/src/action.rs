//! Actions by automorphisms, the filtered-action condition, semidirect
//! products and restriction along a morphism.
//!
//! The bracket of an actor element `b` with a target element `g` is
//! `[b, g] = (b·g)g⁻¹`. In [`semidirect_product`] the product is
//! `(b, g)(b', g') = (bb', (b'⁻¹·g)g')`, under which `[b, g]` is literally the
//! group commutator of `(b, 1)` and `(1, g)`.

use std::fmt;
use std::ops::Deref;

use fixedbitset::FixedBitSet;

use crate::budget::Budget;
use crate::error::{ActionViolation, Error, Result, ScfActionViolation};
use crate::filtration::{validate_scf, Filtration, ScfCertificate};
use crate::group::{Elem, FiniteGroup, GroupRef, HomConstraints, HomSearch, Homomorphism};

/// An action of `actor` on `target` by automorphisms; `table[b·|G| + g] = b·g`.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupAction {
    actor: GroupRef,
    target: GroupRef,
    table: Vec<Elem>,
}

impl fmt::Debug for GroupAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupAction")
            .field("actor", &self.actor.order())
            .field("target", &self.target.order())
            .finish()
    }
}

/// Certifies an action given as one row (a permutation of target indices)
/// per actor element: unit law, automorphy, then composition.
pub fn validate_group_action(
    rows: &[Vec<Elem>],
    actor: &GroupRef,
    target: &GroupRef,
) -> Result<GroupAction> {
    let n = target.order();
    if rows.len() != actor.order() {
        return Err(Error::InvalidAction(ActionViolation::Malformed(format!(
            "{} rows for an actor of order {}",
            rows.len(),
            actor.order()
        ))));
    }
    let mut table = Vec::with_capacity(actor.order() * n);
    for (b, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::InvalidAction(ActionViolation::Malformed(format!(
                "row {b} has {} entries",
                row.len()
            ))));
        }
        if let Some(&v) = row.iter().find(|&&v| v >= n) {
            return Err(Error::InvalidAction(ActionViolation::Malformed(format!(
                "row {b} contains {v}"
            ))));
        }
        table.extend_from_slice(row);
    }
    let action = GroupAction {
        actor: actor.clone(),
        target: target.clone(),
        table,
    };
    action.certify()?;
    Ok(action)
}

impl GroupAction {
    pub fn from_fn(
        actor: &GroupRef,
        target: &GroupRef,
        f: impl Fn(Elem, Elem) -> Elem,
    ) -> Result<Self> {
        let rows: Vec<Vec<Elem>> = actor
            .elements()
            .map(|b| target.elements().map(|g| f(b, g)).collect())
            .collect();
        validate_group_action(&rows, actor, target)
    }

    pub fn trivial(actor: &GroupRef, target: &GroupRef) -> Self {
        let table = actor.elements().flat_map(|_| target.elements()).collect();
        Self {
            actor: actor.clone(),
            target: target.clone(),
            table,
        }
    }

    /// `g` acting on its own group by `x ↦ g x g⁻¹`.
    pub fn conjugation(group: &GroupRef) -> Self {
        let table = group
            .elements()
            .flat_map(|g| group.elements().map(move |x| (g, x)))
            .map(|(g, x)| group.conjugate(g, x))
            .collect();
        Self {
            actor: group.clone(),
            target: group.clone(),
            table,
        }
    }

    fn certify(&self) -> Result<()> {
        let (b_grp, g_grp) = (&self.actor, &self.target);
        for g in g_grp.elements() {
            if self.apply(b_grp.identity(), g) != g {
                return Err(Error::InvalidAction(ActionViolation::Unit { g }));
            }
        }
        for b in b_grp.elements() {
            for x in g_grp.elements() {
                for y in g_grp.elements() {
                    if self.apply(b, g_grp.mul(x, y))
                        != g_grp.mul(self.apply(b, x), self.apply(b, y))
                    {
                        return Err(Error::InvalidAction(ActionViolation::NotAutomorphism {
                            b,
                            x,
                            y,
                        }));
                    }
                }
            }
            let mut hit = FixedBitSet::with_capacity(g_grp.order());
            for g in g_grp.elements() {
                hit.insert(self.apply(b, g));
            }
            if hit.count_ones(..) != g_grp.order() {
                return Err(Error::InvalidAction(ActionViolation::NotBijective { b }));
            }
        }
        for b in b_grp.elements() {
            for c in b_grp.elements() {
                let bc = b_grp.mul(b, c);
                for g in g_grp.elements() {
                    if self.apply(bc, g) != self.apply(b, self.apply(c, g)) {
                        return Err(Error::InvalidAction(ActionViolation::Composition {
                            b,
                            c,
                            g,
                        }));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn actor(&self) -> &GroupRef {
        &self.actor
    }

    pub fn target(&self) -> &GroupRef {
        &self.target
    }

    #[inline]
    pub fn apply(&self, b: Elem, g: Elem) -> Elem {
        self.table[b * self.target.order() + g]
    }

    /// The automorphism `g ↦ b·g` as a permutation table.
    pub fn permutation(&self, b: Elem) -> &[Elem] {
        let n = self.target.order();
        &self.table[b * n..(b + 1) * n]
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        self.actor
            .elements()
            .map(|b| self.permutation(b).to_vec())
            .collect()
    }

    /// `[b, g] = (b·g)g⁻¹`.
    #[inline]
    pub fn bracket(&self, b: Elem, g: Elem) -> Elem {
        self.target.mul(self.apply(b, g), self.target.inv(g))
    }

    pub fn is_trivial(&self) -> bool {
        self.actor
            .elements()
            .all(|b| self.target.elements().all(|g| self.apply(b, g) == g))
    }

    /// `e·g := α(e)·g`.
    pub fn pull_back(&self, alpha: &Homomorphism) -> Result<GroupAction> {
        if alpha.target().id() != self.actor.id() {
            return Err(Error::ParentMismatch);
        }
        let source = alpha.source();
        let table = source
            .elements()
            .flat_map(|e| self.permutation(alpha.apply(e)).to_vec())
            .collect();
        let action = GroupAction {
            actor: source.clone(),
            target: self.target.clone(),
            table,
        };
        Ok(action)
    }

    /// The action on a stable subgroup `h`, as an action on the standalone group.
    pub fn restrict_target(&self, h: &crate::group::Subgroup) -> Result<(GroupAction, Vec<Elem>)> {
        let (sub, embedding) = self.target.restrict(h)?;
        let mut position = vec![usize::MAX; self.target.order()];
        for (i, &g) in embedding.iter().enumerate() {
            position[g] = i;
        }
        let mut table = Vec::with_capacity(self.actor.order() * sub.order());
        for b in self.actor.elements() {
            for &g in &embedding {
                let p = position[self.apply(b, g)];
                if p == usize::MAX {
                    return Err(Error::NotSubgroup(format!(
                        "subgroup is not stable under actor element {b}"
                    )));
                }
                table.push(p);
            }
        }
        Ok((
            GroupAction {
                actor: self.actor.clone(),
                target: sub,
                table,
            },
            embedding,
        ))
    }
}

/// An action of `B` on `G` by automorphisms preserving a strongly central
/// `G_*`, with a strongly central `B_*` attached; no bracket condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilteredAction {
    action: GroupAction,
    actor_f: ScfCertificate,
    target_f: ScfCertificate,
}

impl FilteredAction {
    pub fn new(
        action: GroupAction,
        actor_f: ScfCertificate,
        target_f: ScfCertificate,
    ) -> Result<Self> {
        if actor_f.group().id() != action.actor.id() || target_f.group().id() != action.target.id()
        {
            return Err(Error::ParentMismatch);
        }
        if let Some(v) = level_violation(&action, &actor_f, &target_f) {
            return Err(Error::NotScfAction(v));
        }
        Ok(Self {
            action,
            actor_f,
            target_f,
        })
    }

    pub fn action(&self) -> &GroupAction {
        &self.action
    }

    pub fn actor_filtration(&self) -> &ScfCertificate {
        &self.actor_f
    }

    pub fn target_filtration(&self) -> &ScfCertificate {
        &self.target_f
    }

    /// Index bound beyond which both filtrations are constant.
    pub fn bound(&self) -> usize {
        self.actor_f.len().max(self.target_f.len())
    }
}

fn level_violation(
    action: &GroupAction,
    actor_f: &Filtration,
    target_f: &Filtration,
) -> Option<ScfActionViolation> {
    let actors = actor_f.level(1);
    for (k, level) in target_f.levels().iter().enumerate() {
        for b in actors.members().ones() {
            for g in level.members().ones() {
                if !level.contains(action.apply(b, g)) {
                    return Some(ScfActionViolation::LevelNotPreserved { level: k + 1, b, g });
                }
            }
        }
    }
    None
}

pub(crate) fn bracket_violation(
    action: &GroupAction,
    actor_f: &Filtration,
    target_f: &Filtration,
    bound: usize,
) -> Option<ScfActionViolation> {
    for i in 1..=bound {
        for j in 1..=bound {
            let dest = target_f.level(i + j);
            for b in actor_f.level(i).members().ones() {
                for g in target_f.level(j).members().ones() {
                    let c = action.bracket(b, g);
                    if !dest.contains(c) {
                        return Some(ScfActionViolation::Bracket {
                            i,
                            j,
                            b,
                            g,
                            bracket: c,
                        });
                    }
                }
            }
        }
    }
    None
}

/// A [`FilteredAction`] certified to satisfy `[B_i, G_j] ⊆ G_{i+j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScfAction {
    inner: FilteredAction,
}

impl Deref for ScfAction {
    type Target = FilteredAction;

    fn deref(&self) -> &FilteredAction {
        &self.inner
    }
}

impl ScfAction {
    pub fn into_inner(self) -> FilteredAction {
        self.inner
    }
}

/// Checks level preservation, then the bracket condition for
/// `1 ≤ i, j ≤ max(N_B, N_G)`; past that bound every term is constant.
pub fn validate_scf_action(
    action: &GroupAction,
    actor_f: &ScfCertificate,
    target_f: &ScfCertificate,
) -> Result<ScfAction> {
    let filtered = FilteredAction::new(action.clone(), actor_f.clone(), target_f.clone())?;
    certify_filtered(filtered)
}

pub fn certify_filtered(filtered: FilteredAction) -> Result<ScfAction> {
    let bound = filtered.bound();
    match bracket_violation(
        &filtered.action,
        &filtered.actor_f,
        &filtered.target_f,
        bound,
    ) {
        Some(v) => Err(Error::NotScfAction(v)),
        None => Ok(ScfAction { inner: filtered }),
    }
}

/// `B_1 ⋉ G_1` with level `i` equal to `B_i × G_i`, plus its structure maps.
#[derive(Clone, Debug)]
pub struct SemidirectProduct {
    pub group: GroupRef,
    pub filtration: Filtration,
    /// `B_1` as a standalone group (index `k` is the `k`-th member of `B_1`).
    pub base: GroupRef,
    /// `(b, g) ↦ b`.
    pub projection: Homomorphism,
    /// `b ↦ (b, 1)`.
    pub section: Homomorphism,
    /// `G_1` as a standalone group and `g ↦ (1, g)`.
    pub kernel: GroupRef,
    pub inclusion: Homomorphism,
}

impl SemidirectProduct {
    /// Element index of the pair `(b, g)`, given as actor/target indices.
    pub fn pair(&self, b: Elem, g: Elem, action: &FilteredAction) -> Option<Elem> {
        let bi = action
            .actor_f
            .level(1)
            .elements()
            .iter()
            .position(|&x| x == b)?;
        let gi = action
            .target_f
            .level(1)
            .elements()
            .iter()
            .position(|&x| x == g)?;
        Some(bi * self.kernel.order() + gi)
    }
}

/// Builds the product and its level filtration without certifying it.
pub fn semidirect_filtration(a: &FilteredAction) -> Result<SemidirectProduct> {
    let act = &a.action;
    let (b_grp, g_grp) = (act.actor(), act.target());
    let (base, b_emb) = b_grp.restrict(a.actor_f.level(1))?;
    let (kernel, g_emb) = g_grp.restrict(a.target_f.level(1))?;
    let mut g_pos = vec![usize::MAX; g_grp.order()];
    for (i, &g) in g_emb.iter().enumerate() {
        g_pos[g] = i;
    }
    let m = g_emb.len();
    let names = (0..b_emb.len() * m)
        .map(|x| {
            format!(
                "({},{})",
                b_grp.name(b_emb[x / m]),
                g_grp.name(g_emb[x % m])
            )
        })
        .collect();
    let identity = base.identity() * m + kernel.identity();
    let group = FiniteGroup::from_fn(names, identity, |x, y| {
        let (b, g) = (x / m, x % m);
        let (b2, g2) = (y / m, y % m);
        let b2_inv = b_emb[base.inv(b2)];
        let moved = g_grp.mul(act.apply(b2_inv, g_emb[g]), g_emb[g2]);
        base.mul(b, b2) * m + g_pos[moved]
    })?;
    let bound = a.bound();
    let mut levels = Vec::with_capacity(bound);
    for i in 1..=bound {
        let (bi, gi) = (a.actor_f.level(i), a.target_f.level(i));
        let elems = group
            .elements()
            .filter(|&x| bi.contains(b_emb[x / m]) && gi.contains(g_emb[x % m]));
        levels.push(crate::group::Subgroup::from_elements(&group, elems)?);
    }
    let filtration = Filtration::new(levels)?;
    let projection = Homomorphism::new(&group, &base, group.elements().map(|x| x / m).collect())?;
    let section = Homomorphism::new(
        &base,
        &group,
        base.elements().map(|b| b * m + kernel.identity()).collect(),
    )?;
    let inclusion = Homomorphism::new(
        &kernel,
        &group,
        kernel.elements().map(|g| base.identity() * m + g).collect(),
    )?;
    Ok(SemidirectProduct {
        group,
        filtration,
        base,
        projection,
        section,
        kernel,
        inclusion,
    })
}

/// The semidirect product of a certified action, its filtration certified
/// strongly central.
pub fn semidirect_product(s: &ScfAction) -> Result<(SemidirectProduct, ScfCertificate)> {
    let sd = semidirect_filtration(s)?;
    let cert = validate_scf(&sd.filtration)
        .map_err(|e| Error::fault(format!("semidirect filtration of a certified action: {e}")))?;
    Ok((sd, cert))
}

/// Checks `α(E_i) ⊆ B_i` for every `i`.
pub fn check_filtration_preserving(
    alpha: &Homomorphism,
    source_f: &Filtration,
    target_f: &Filtration,
) -> Result<()> {
    if alpha.source().id() != source_f.group().id() || alpha.target().id() != target_f.group().id()
    {
        return Err(Error::ParentMismatch);
    }
    for i in 1..=source_f.len().max(target_f.len()) {
        if let Some(e) = source_f
            .level(i)
            .members()
            .ones()
            .find(|&e| !target_f.level(i).contains(alpha.apply(e)))
        {
            return Err(Error::NotFiltrationPreserving {
                level: i,
                element: e,
            });
        }
    }
    Ok(())
}

/// Restriction along `α: E_* → B_*`: `e·g := α(e)·g`, re-certified.
pub fn restrict_action(
    alpha: &Homomorphism,
    source_f: &ScfCertificate,
    s: &ScfAction,
) -> Result<ScfAction> {
    check_filtration_preserving(alpha, source_f, s.actor_filtration())?;
    let pulled = s.action().pull_back(alpha)?;
    validate_scf_action(&pulled, source_f, s.target_filtration())
        .map_err(|e| Error::fault(format!("restriction lost certification: {e}")))
}

/// A homomorphism commuting with two actions of the same actor.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct EquivariantMorphism {
    hom: Homomorphism,
}

impl Deref for EquivariantMorphism {
    type Target = Homomorphism;

    fn deref(&self) -> &Homomorphism {
        &self.hom
    }
}

impl EquivariantMorphism {
    pub fn new(hom: Homomorphism, x: &GroupAction, y: &GroupAction) -> Result<Self> {
        if x.actor.id() != y.actor.id()
            || hom.source().id() != x.target.id()
            || hom.target().id() != y.target.id()
        {
            return Err(Error::ParentMismatch);
        }
        for b in x.actor.elements() {
            for g in x.target.elements() {
                if hom.apply(x.apply(b, g)) != y.apply(b, hom.apply(g)) {
                    return Err(Error::NotEquivariant {
                        actor: b,
                        element: g,
                    });
                }
            }
        }
        Ok(Self { hom })
    }

    pub(crate) fn new_unchecked(hom: Homomorphism) -> Self {
        Self { hom }
    }

    pub fn hom(&self) -> &Homomorphism {
        &self.hom
    }

    pub fn into_hom(self) -> Homomorphism {
        self.hom
    }
}

/// Admissible images under a filtration-preserving map, for every source element.
pub(crate) fn level_constraints(
    source_f: &Filtration,
    target_f: &Filtration,
) -> Result<Vec<FixedBitSet>> {
    if !source_f.level(1).is_whole() {
        return Err(Error::InvalidFiltration(
            "morphism sources must be filtered from the whole group".into(),
        ));
    }
    let deepest = source_f.len().max(target_f.len());
    Ok(source_f
        .group()
        .elements()
        .map(|x| {
            let d = source_f.depth(x);
            let d = if d == source_f.len() { deepest } else { d };
            target_f.level(d).members().clone()
        })
        .collect())
}

/// Every actor-equivariant homomorphism `X → Y` (filtration-preserving when
/// filtrations are given), sorted by table.
pub fn enumerate_equivariant_morphisms(
    x: &GroupAction,
    y: &GroupAction,
    filtrations: Option<(&Filtration, &Filtration)>,
    budget: &Budget,
) -> Result<Vec<EquivariantMorphism>> {
    if x.actor.id() != y.actor.id() {
        return Err(Error::ParentMismatch);
    }
    let equivariance = x
        .actor
        .generators()
        .iter()
        .map(|&b| (x.permutation(b).to_vec(), y.permutation(b).to_vec()))
        .collect();
    let allowed = match filtrations {
        Some((xf, yf)) => {
            if xf.group().id() != x.target.id() || yf.group().id() != y.target.id() {
                return Err(Error::ParentMismatch);
            }
            Some(level_constraints(xf, yf)?)
        }
        None => None,
    };
    let constraints = HomConstraints {
        equivariance,
        allowed,
    };
    let tables = HomSearch::new(&x.target, &y.target, constraints, budget)?.run()?;
    Ok(tables
        .into_iter()
        .map(|t| {
            EquivariantMorphism::new_unchecked(Homomorphism::new_unchecked(&x.target, &y.target, t))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filtration::lower_central_series;
    use crate::group::{
        cyclic, dihedral, enumerate_homomorphisms, generate_subgroup, symmetric, Subgroup,
    };

    fn negation() -> GroupAction {
        let (z2, z4) = (cyclic(2), cyclic(4));
        GroupAction::from_fn(&z2, &z4, |b, g| if b == 0 { g } else { (4 - g) % 4 }).unwrap()
    }

    fn constant(g: &GroupRef) -> ScfCertificate {
        validate_scf(&Filtration::constant(Subgroup::whole(g))).unwrap()
    }

    fn cert(g: &GroupRef, sets: &[Vec<Elem>]) -> ScfCertificate {
        validate_scf(&Filtration::from_element_sets(g, sets).unwrap()).unwrap()
    }

    #[test]
    fn trivial_and_negation_actions_validate() {
        let (z2, z4) = (cyclic(2), cyclic(4));
        let t = GroupAction::trivial(&z2, &z4);
        assert!(validate_group_action(&t.rows(), &z2, &z4).is_ok());
        assert!(!negation().is_trivial());
    }

    #[test]
    fn translation_is_not_an_action_by_automorphisms() {
        let (z2, z4) = (cyclic(2), cyclic(4));
        let rows = vec![vec![0, 1, 2, 3], vec![1, 2, 3, 0]];
        assert!(matches!(
            validate_group_action(&rows, &z2, &z4),
            Err(Error::InvalidAction(ActionViolation::NotAutomorphism {
                b: 1,
                ..
            }))
        ));
        let rows = vec![vec![1, 0, 3, 2], vec![0, 1, 2, 3]];
        assert!(matches!(
            validate_group_action(&rows, &z2, &z4),
            Err(Error::InvalidAction(ActionViolation::Unit { .. }))
        ));
    }

    #[test]
    fn composition_law_is_checked() {
        // Z3 acting on Z3 by negation for both non-identity elements.
        let z3 = cyclic(3);
        let rows = vec![vec![0, 1, 2], vec![0, 2, 1], vec![0, 2, 1]];
        assert!(matches!(
            validate_group_action(&rows, &z3, &z3),
            Err(Error::InvalidAction(ActionViolation::Composition { .. }))
        ));
    }

    #[test]
    fn trivial_action_is_always_filtered() {
        let d4 = dihedral(4);
        let z2 = cyclic(2);
        let t = GroupAction::trivial(&z2, &d4);
        assert!(validate_scf_action(&t, &constant(&z2), &lower_central_series(&d4)).is_ok());
    }

    #[test]
    fn conjugation_on_lcs_is_filtered() {
        let d4 = dihedral(4);
        let lcs = lower_central_series(&d4);
        assert!(validate_scf_action(&GroupAction::conjugation(&d4), &lcs, &lcs).is_ok());
    }

    #[test]
    fn negation_violates_at_two_one() {
        let z4 = cyclic(4);
        let g_f = cert(&z4, &[vec![0, 1, 2, 3], vec![0, 2], vec![0]]);
        match validate_scf_action(&negation(), &constant(&cyclic(2)), &g_f) {
            Err(Error::NotScfAction(ScfActionViolation::Bracket { i, j, bracket, .. })) => {
                assert_eq!((i, j), (2, 1));
                assert_eq!(bracket, 2);
            }
            other => panic!("expected bracket violation, got {other:?}"),
        }
    }

    #[test]
    fn level_preservation_is_checked_first() {
        let v4 = crate::group::klein_four();
        let z2 = cyclic(2);
        // swap the two coordinates of Z2 x Z2
        let swap = GroupAction::from_fn(
            &z2,
            &v4,
            |b, g| if b == 0 { g } else { (g % 2) * 2 + g / 2 },
        )
        .unwrap();
        let g_f = cert(&v4, &[v4.elements().collect(), vec![0, 1]]);
        assert!(matches!(
            validate_scf_action(&swap, &constant(&z2), &g_f),
            Err(Error::NotScfAction(ScfActionViolation::LevelNotPreserved {
                level: 2,
                b: 1,
                g: 1
            }))
        ));
    }

    #[test]
    fn commutator_of_pair_embeddings_is_the_bracket() {
        let d4 = dihedral(4);
        let lcs = lower_central_series(&d4);
        let s = validate_scf_action(&GroupAction::conjugation(&d4), &lcs, &lcs).unwrap();
        let (sd, _) = semidirect_product(&s).unwrap();
        for b in d4.elements() {
            for g in d4.elements() {
                let x = sd.pair(b, d4.identity(), &s).unwrap();
                let y = sd.pair(d4.identity(), g, &s).unwrap();
                let expected = sd
                    .pair(d4.identity(), s.action().bracket(b, g), &s)
                    .unwrap();
                assert_eq!(sd.group.commutator(x, y), expected);
            }
        }
    }

    #[test]
    fn semidirect_z2_z3_is_s3() {
        let (z2, z3) = (cyclic(2), cyclic(3));
        let neg =
            GroupAction::from_fn(&z2, &z3, |b, g| if b == 0 { g } else { (3 - g) % 3 }).unwrap();
        let s = validate_scf_action(&neg, &constant(&z2), &constant(&z3)).unwrap();
        let (sd, cert) = semidirect_product(&s).unwrap();
        assert_eq!(sd.group.order(), 6);
        assert!(!sd.group.is_abelian());
        assert_eq!(cert.orders(), vec![6]);
        // S3 has exactly 10 endomorphisms; so does this group
        let b = Budget::default();
        assert_eq!(
            enumerate_homomorphisms(&sd.group, &sd.group, &b)
                .unwrap()
                .len(),
            10
        );
        assert_eq!(
            sd.section.then(&sd.projection).unwrap(),
            Homomorphism::identity(&sd.base)
        );
        let _ = symmetric(3);
    }

    #[test]
    fn semidirect_with_trivial_factor_recovers_the_other() {
        let d4 = dihedral(4);
        let one = cyclic(1);
        let lcs = lower_central_series(&d4);
        let s =
            validate_scf_action(&GroupAction::trivial(&one, &d4), &constant(&one), &lcs).unwrap();
        let (_, cert) = semidirect_product(&s).unwrap();
        assert_eq!(cert.orders(), lcs.orders());
        let s =
            validate_scf_action(&GroupAction::trivial(&d4, &one), &lcs, &constant(&one)).unwrap();
        let (_, cert) = semidirect_product(&s).unwrap();
        assert_eq!(cert.orders(), lcs.orders());
    }

    #[test]
    fn restriction_along_identity_trivial_and_inclusion() {
        let d4 = dihedral(4);
        let lcs = lower_central_series(&d4);
        let s = validate_scf_action(&GroupAction::conjugation(&d4), &lcs, &lcs).unwrap();
        let same = restrict_action(&Homomorphism::identity(&d4), &lcs, &s).unwrap();
        assert_eq!(same, s);

        let z2 = cyclic(2);
        let triv = restrict_action(&Homomorphism::trivial(&z2, &d4), &constant(&z2), &s).unwrap();
        assert!(triv.action().is_trivial());

        let r = d4.find("r").unwrap();
        let rot = generate_subgroup(&d4, &[r]).unwrap();
        let (c4, emb) = d4.restrict(&rot).unwrap();
        let incl = Homomorphism::new(&c4, &d4, emb).unwrap();
        let c4_f = validate_scf(
            &Filtration::new(vec![
                Subgroup::whole(&c4),
                Subgroup::from_elements(&c4, [0, 2]).unwrap(),
                Subgroup::trivial(&c4),
            ])
            .unwrap(),
        )
        .unwrap();
        let restricted = restrict_action(&incl, &c4_f, &s).unwrap();
        assert_eq!(restricted.action().actor().order(), 4);
        // constant C4 filtration is not mapped into lcs(D4)_2
        assert!(matches!(
            restrict_action(&incl, &constant(&c4), &s),
            Err(Error::NotFiltrationPreserving { level: 2, .. })
        ));
    }

    #[test]
    fn equivariant_morphisms_against_filtered_brute_force() {
        let b = Budget::default();
        let d4 = dihedral(4);
        let conj = GroupAction::conjugation(&d4);
        let found = enumerate_equivariant_morphisms(&conj, &conj, None, &b).unwrap();
        let brute: Vec<_> = enumerate_homomorphisms(&d4, &d4, &b)
            .unwrap()
            .into_iter()
            .filter(|f| EquivariantMorphism::new(f.clone(), &conj, &conj).is_ok())
            .collect();
        assert_eq!(
            found.iter().map(|m| m.hom().clone()).collect::<Vec<_>>(),
            brute
        );
        assert!(found
            .iter()
            .any(|m| m.hom() == &Homomorphism::identity(&d4)));

        let one = cyclic(1);
        let to_one = GroupAction::trivial(&d4, &one);
        assert_eq!(
            enumerate_equivariant_morphisms(&conj, &to_one, None, &b)
                .unwrap()
                .len(),
            1
        );
    }
}
