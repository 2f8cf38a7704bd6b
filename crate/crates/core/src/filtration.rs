//! Descending chains of subgroups and the strongly-central condition.
//!
//! A [`Filtration`] stores `G_1 ⊇ … ⊇ G_N` and reads `G_k = G_N` for every
//! `k > N`. Chains are normalized on construction (no repeated tail), so two
//! filtrations are equal exactly when they agree at every index.

use std::ops::Deref;

use crate::error::{Error, Result, ScfViolation};
use crate::group::{commutator_subgroup, Elem, FunctionGroup, GroupRef, Homomorphism, Subgroup};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Filtration {
    group: GroupRef,
    levels: Vec<Subgroup>,
}

impl Filtration {
    pub fn new(mut levels: Vec<Subgroup>) -> Result<Self> {
        let first = levels
            .first()
            .ok_or_else(|| Error::InvalidFiltration("empty chain".into()))?;
        let group = first.group().clone();
        for (k, pair) in levels.windows(2).enumerate() {
            pair[0].same_parent(&pair[1])?;
            if !pair[1].is_subset(&pair[0]) {
                return Err(Error::InvalidFiltration(format!(
                    "level {} is not contained in level {}",
                    k + 2,
                    k + 1
                )));
            }
        }
        while levels.len() > 1 && levels[levels.len() - 1] == levels[levels.len() - 2] {
            levels.pop();
        }
        Ok(Self { group, levels })
    }

    pub fn constant(h: Subgroup) -> Self {
        Self {
            group: h.group().clone(),
            levels: vec![h],
        }
    }

    /// Builds each level from an explicit element list, outermost first.
    pub fn from_element_sets(group: &GroupRef, sets: &[Vec<Elem>]) -> Result<Self> {
        let levels = sets
            .iter()
            .enumerate()
            .map(|(k, s)| {
                Subgroup::from_elements(group, s.iter().copied())
                    .map_err(|e| Error::InvalidFiltration(format!("level {}: {e}", k + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(levels)
    }

    pub fn to_element_sets(&self) -> Vec<Vec<Elem>> {
        self.levels.iter().map(Subgroup::elements).collect()
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    /// Number of stored levels `N`; every index past `N` repeats level `N`.
    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Level `i ≥ 1`, under the tail convention.
    pub fn level(&self, i: usize) -> &Subgroup {
        assert!(i >= 1, "filtrations are indexed from 1");
        &self.levels[(i - 1).min(self.levels.len() - 1)]
    }

    pub fn levels(&self) -> &[Subgroup] {
        &self.levels
    }

    pub fn orders(&self) -> Vec<usize> {
        self.levels.iter().map(Subgroup::order).collect()
    }

    /// Deepest level containing `g`, capped at `N` (0 when `g ∉ G_1`).
    pub fn depth(&self, g: Elem) -> usize {
        self.levels.iter().take_while(|h| h.contains(g)).count()
    }

    /// `self_i ⊆ other_i` for every `i`.
    pub fn is_within(&self, other: &Filtration) -> bool {
        let n = self.len().max(other.len());
        self.group.id() == other.group.id()
            && (1..=n).all(|i| self.level(i).is_subset(other.level(i)))
    }
}

/// Proof that a filtration satisfies `[G_i, G_j] ⊆ G_{i+j}` for all `i, j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ScfCertificate {
    filtration: Filtration,
    bound: usize,
}

impl ScfCertificate {
    pub fn filtration(&self) -> &Filtration {
        &self.filtration
    }

    pub fn into_filtration(self) -> Filtration {
        self.filtration
    }

    /// Largest index pair `(bound, bound)` that was checked.
    pub fn bound(&self) -> usize {
        self.bound
    }
}

impl Deref for ScfCertificate {
    type Target = Filtration;

    fn deref(&self) -> &Filtration {
        &self.filtration
    }
}

/// Checks the strongly-central condition for `1 ≤ i, j ≤ N`.
///
/// For `i ≥ N` both `G_i` and `G_{i+j}` equal `G_N`, so larger indices add
/// nothing. On failure reports the least `(i, j)` and a witness commutator.
pub fn validate_scf(f: &Filtration) -> Result<ScfCertificate> {
    match find_scf_violation(f, f.len()) {
        Some(v) => Err(Error::NotStronglyCentral(v)),
        None => Ok(ScfCertificate {
            filtration: f.clone(),
            bound: f.len(),
        }),
    }
}

pub(crate) fn find_scf_violation(f: &Filtration, bound: usize) -> Option<ScfViolation> {
    let g = f.group();
    for i in 1..=bound {
        for j in 1..=bound {
            let target = f.level(i + j);
            for x in f.level(i).members().ones() {
                for y in f.level(j).members().ones() {
                    let c = g.commutator(x, y);
                    if !target.contains(c) {
                        return Some(ScfViolation {
                            i,
                            j,
                            x,
                            y,
                            commutator: c,
                        });
                    }
                }
            }
        }
    }
    None
}

/// `γ_1 = G`, `γ_{k+1} = [G, γ_k]`, until the chain stabilizes.
pub fn lower_central_series(group: &GroupRef) -> ScfCertificate {
    let whole = Subgroup::whole(group);
    let mut levels = vec![whole.clone()];
    loop {
        let next = commutator_subgroup(&whole, levels.last().unwrap()).expect("same parent");
        if &next == levels.last().unwrap() {
            break;
        }
        levels.push(next);
    }
    let f = Filtration::new(levels).expect("commutator chain descends");
    validate_scf(&f).expect("the lower central series is strongly central")
}

/// Index-wise intersection, normalized.
pub fn intersect_filtrations(filtrations: &[&Filtration]) -> Result<Filtration> {
    let first = filtrations
        .first()
        .ok_or_else(|| Error::InvalidFiltration("nothing to intersect".into()))?;
    let n = filtrations.iter().map(|f| f.len()).max().unwrap();
    let mut levels = Vec::with_capacity(n);
    for i in 1..=n {
        let mut acc = first.level(i).clone();
        for f in &filtrations[1..] {
            acc = acc.intersection(f.level(i))?;
        }
        levels.push(acc);
    }
    Filtration::new(levels)
}

/// `f(K_i)` at every index, normalized.
pub fn image_filtration(f: &Homomorphism, k: &Filtration) -> Result<Filtration> {
    let levels = k
        .levels()
        .iter()
        .map(|h| f.image(h))
        .collect::<Result<Vec<_>>>()?;
    Filtration::new(levels)
}

/// Level `i` is every map of `carrier` with all values in `Y_i`.
pub fn pointwise_filtration(carrier: &FunctionGroup, y_f: &Filtration) -> Result<Filtration> {
    if carrier.codomain().id() != y_f.group().id() {
        return Err(Error::ParentMismatch);
    }
    let levels = y_f
        .levels()
        .iter()
        .map(|y_i| {
            let elems = carrier
                .group()
                .elements()
                .filter(|&u| carrier.map(u).iter().all(|&v| y_i.contains(v)));
            Subgroup::from_elements(carrier.group(), elems)
        })
        .collect::<Result<Vec<_>>>()?;
    Filtration::new(levels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::group::{
        cyclic, dihedral, direct_product, generate_subgroup, klein_four, symmetric,
    };

    fn sub(g: &GroupRef, names: &[&str]) -> Subgroup {
        Subgroup::from_elements(g, names.iter().map(|n| g.find(n).unwrap())).unwrap()
    }

    /// Direct check over `1 ≤ i, j ≤ 2N + 1` with the tail convention.
    fn brute_scf(f: &Filtration) -> bool {
        find_scf_violation(f, 2 * f.len() + 1).is_none()
    }

    #[test]
    fn normalization_trims_repeated_tail() {
        let g = cyclic(4);
        let w = Subgroup::whole(&g);
        let t = Subgroup::trivial(&g);
        let f = Filtration::new(vec![w.clone(), t.clone(), t.clone()]).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.level(7), &t);
        assert!(Filtration::new(vec![t, w]).is_err());
        assert!(Filtration::new(vec![]).is_err());
    }

    #[test]
    fn constant_filtration_is_strongly_central() {
        for g in [dihedral(4), symmetric(3), cyclic(5)] {
            assert!(validate_scf(&Filtration::constant(Subgroup::whole(&g))).is_ok());
        }
    }

    #[test]
    fn lcs_of_d4_validates() {
        let d4 = dihedral(4);
        let f = Filtration::new(vec![
            Subgroup::whole(&d4),
            sub(&d4, &["1", "r2"]),
            Subgroup::trivial(&d4),
        ])
        .unwrap();
        assert!(validate_scf(&f).is_ok());
        assert_eq!(lower_central_series(&d4).filtration(), &f);
    }

    #[test]
    fn s3_chain_fails_at_one_two() {
        let s3 = symmetric(3);
        let f = Filtration::new(vec![
            Subgroup::whole(&s3),
            Subgroup::whole(&s3),
            Subgroup::trivial(&s3),
        ])
        .unwrap();
        match validate_scf(&f) {
            Err(Error::NotStronglyCentral(v)) => {
                assert_eq!((v.i, v.j), (1, 2));
                assert_eq!(s3.commutator(v.x, v.y), v.commutator);
                assert!(!f.level(3).contains(v.commutator));
            }
            other => panic!("expected violation, got {other:?}"),
        }
        // [G_1, G_2] is A_3
        let a3 = commutator_subgroup(f.level(1), f.level(2)).unwrap();
        assert_eq!(a3.order(), 3);
    }

    #[test]
    fn lower_central_series_examples() {
        let v4 = klein_four();
        assert_eq!(lower_central_series(&v4).orders(), vec![4, 1]);
        assert_eq!(lower_central_series(&dihedral(4)).orders(), vec![8, 2, 1]);
        assert_eq!(lower_central_series(&symmetric(3)).orders(), vec![6, 3]);
        assert_eq!(lower_central_series(&cyclic(1)).orders(), vec![1]);
    }

    #[test]
    fn intersection_of_d4_filtrations() {
        let d4 = dihedral(4);
        let r = d4.find("r").unwrap();
        let w = Subgroup::whole(&d4);
        let a = Filtration::new(vec![w.clone(), generate_subgroup(&d4, &[r]).unwrap()]).unwrap();
        let b = Filtration::new(vec![w.clone(), sub(&d4, &["1", "r2", "s", "r2s"])]).unwrap();
        let c = intersect_filtrations(&[&a, &b]).unwrap();
        assert_eq!(c, Filtration::new(vec![w, sub(&d4, &["1", "r2"])]).unwrap());
        assert_eq!(intersect_filtrations(&[&a]).unwrap(), a);
        assert_eq!(intersect_filtrations(&[&a, &a]).unwrap(), a);
        let other = Filtration::constant(Subgroup::whole(&cyclic(2)));
        assert!(matches!(
            intersect_filtrations(&[&a, &other]),
            Err(Error::ParentMismatch)
        ));
    }

    #[test]
    fn image_under_quotient_map() {
        let d4 = dihedral(4);
        let v4 = klein_four();
        // r^k s^e ↦ (k mod 2, e)
        let map = d4.elements().map(|x| ((x % 4) % 2) * 2 + x / 4).collect();
        let q = Homomorphism::new(&d4, &v4, map).unwrap();
        let img = image_filtration(&q, &lower_central_series(&d4)).unwrap();
        assert_eq!(img.orders(), vec![4, 1]);
        assert!(validate_scf(&img).is_ok());
        let id = Homomorphism::identity(&d4);
        assert_eq!(
            &image_filtration(&id, &lower_central_series(&d4)).unwrap(),
            lower_central_series(&d4).filtration()
        );
        let triv = Homomorphism::trivial(&d4, &v4);
        assert_eq!(
            image_filtration(&triv, &lower_central_series(&d4))
                .unwrap()
                .orders(),
            vec![1]
        );
    }

    #[test]
    fn pointwise_filtration_on_maps_z2_to_z4() {
        let z4 = cyclic(4);
        let mut maps = Vec::new();
        for a in 0..4 {
            for b in 0..4 {
                maps.push(vec![a, b]);
            }
        }
        let carrier = FunctionGroup::pointwise(2, &z4, maps, &Budget::default()).unwrap();
        let y_f = Filtration::from_element_sets(&z4, &[vec![0, 1, 2, 3], vec![0, 2]]).unwrap();
        let pf = pointwise_filtration(&carrier, &y_f).unwrap();
        assert_eq!(pf.orders(), vec![16, 4]);
        assert!(validate_scf(&pf).is_ok());
        let y_const = Filtration::constant(Subgroup::whole(&z4));
        assert_eq!(
            pointwise_filtration(&carrier, &y_const).unwrap().orders(),
            vec![16]
        );
        let y_triv = Filtration::from_element_sets(&z4, &[vec![0, 1, 2, 3], vec![0]]).unwrap();
        assert_eq!(
            pointwise_filtration(&carrier, &y_triv).unwrap().orders(),
            vec![16, 1]
        );
    }

    #[test]
    fn finite_check_matches_extended_check_on_all_short_chains() {
        let b = Budget::default();
        for g in [
            dihedral(4),
            symmetric(3),
            direct_product(&cyclic(2), &cyclic(4)),
        ] {
            let subs = crate::group::all_subgroups(&g, &b).unwrap();
            for a in &subs {
                for c in subs.iter().filter(|c| c.is_subset(a)) {
                    for d in subs.iter().filter(|d| d.is_subset(c)) {
                        let f = Filtration::new(vec![a.clone(), c.clone(), d.clone()]).unwrap();
                        assert_eq!(validate_scf(&f).is_ok(), brute_scf(&f));
                    }
                }
            }
        }
    }
}
