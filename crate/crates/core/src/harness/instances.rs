//! Seeded generation of groups, filtrations, actions and points.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::action::{validate_scf_action, FilteredAction, GroupAction, ScfAction};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::filtration::{lower_central_series, validate_scf, Filtration, ScfCertificate};
use crate::group::{
    all_subgroups, catalog, catalog_names, Elem, GroupRef, HomConstraints, HomSearch, Homomorphism,
    Subgroup,
};

pub type Rand = ChaCha8Rng;

/// Catalog groups of order at most `max_order`, in catalog order.
pub fn small_groups(max_order: usize) -> Vec<(&'static str, GroupRef)> {
    catalog_names()
        .iter()
        .filter_map(|&name| catalog(name).map(|g| (name, g)))
        .filter(|(_, g)| g.order() <= max_order)
        .collect()
}

/// Orders of the levels, e.g. `[8,2,1]`.
pub fn describe(f: &Filtration) -> String {
    let orders: Vec<String> = f.orders().iter().map(|o| o.to_string()).collect();
    format!("[{}]", orders.join(","))
}

/// A strongly central filtration of length at most `max_len` chosen by
/// rejection sampling over descending chains of subgroups; falls back to the
/// lower central series.
pub fn random_scf(
    rng: &mut Rand,
    group: &GroupRef,
    max_len: usize,
    whole_first: bool,
    budget: &Budget,
) -> Result<ScfCertificate> {
    let subgroups = all_subgroups(group, budget)?;
    for _ in 0..200 {
        let len = rng.gen_range(1..=max_len);
        let first = if whole_first || rng.gen_bool(0.5) {
            Subgroup::whole(group)
        } else {
            subgroups
                .choose(rng)
                .expect("trivial subgroup exists")
                .clone()
        };
        let mut levels = vec![first];
        for _ in 1..len {
            let last = levels.last().unwrap();
            let below: Vec<&Subgroup> = subgroups.iter().filter(|s| s.is_subset(last)).collect();
            levels.push((*below.choose(rng).unwrap()).clone());
        }
        if let Ok(cert) = validate_scf(&Filtration::new(levels)?) {
            return Ok(cert);
        }
    }
    let lcs = lower_central_series(group);
    let levels = lcs.levels().iter().take(max_len).cloned().collect();
    validate_scf(&Filtration::new(levels)?)
}

/// Every homomorphism `K → H` with `f(K_i) ⊆ H_i`; `K_1` must be all of `K`.
pub fn filtered_homomorphisms(
    source_f: &Filtration,
    target_f: &Filtration,
    budget: &Budget,
) -> Result<Vec<Homomorphism>> {
    let allowed = crate::action::level_constraints(source_f, target_f)?;
    let (s, t) = (source_f.group(), target_f.group());
    let constraints = HomConstraints {
        equivariance: Vec::new(),
        allowed: Some(allowed),
    };
    let tables = HomSearch::new(s, t, constraints, budget)?.run()?;
    tables
        .into_iter()
        .map(|m| Homomorphism::new(s, t, m))
        .collect()
}

/// Automorphisms of `G` preserving every level of `f`.
pub fn level_preserving_automorphisms(
    f: &Filtration,
    budget: &Budget,
) -> Result<Vec<Homomorphism>> {
    let group = f.group();
    let wide = Budget {
        hom_source_order: budget.hom_source_order.max(group.order()),
        ..*budget
    };
    let whole = Filtration::constant(Subgroup::whole(group));
    let candidates = filtered_homomorphisms(&whole, &whole, &wide)?;
    Ok(candidates
        .into_iter()
        .filter(|h| h.is_injective())
        .filter(|h| {
            f.levels()
                .iter()
                .all(|l| l.members().ones().all(|g| l.contains(h.apply(g))))
        })
        .collect())
}

/// `Z_m` acting by the powers of an automorphism of order `m`.
pub fn cyclic_action(phi: &Homomorphism) -> Result<GroupAction> {
    let g = phi.source();
    let mut powers = vec![Homomorphism::identity(g).table().to_vec()];
    loop {
        let next: Vec<Elem> = powers
            .last()
            .unwrap()
            .iter()
            .map(|&x| phi.apply(x))
            .collect();
        if next == powers[0] {
            break;
        }
        powers.push(next);
    }
    let zm = crate::group::cyclic(powers.len());
    GroupAction::from_fn(&zm, g, |k, x| powers[k][x])
}

/// Conjugation of `G` by the standalone copy of a subgroup `H`.
pub fn conjugation_by(h: &Subgroup) -> Result<GroupAction> {
    let group = h.group();
    let (hg, emb) = group.restrict(h)?;
    let incl = Homomorphism::new(&hg, group, emb)?;
    GroupAction::conjugation(group).pull_back(&incl)
}

/// Conjugation through a homomorphism `ψ: B → G`: `b·g = ψ(b) g ψ(b)⁻¹`.
pub fn conjugation_through(psi: &Homomorphism) -> Result<GroupAction> {
    GroupAction::conjugation(psi.target()).pull_back(psi)
}

/// A random action on `G` preserving every level of `g_f`, with a random
/// strongly central filtration on the actor.
pub fn random_filtered_action(
    rng: &mut Rand,
    g_f: &ScfCertificate,
    actor_len: usize,
    budget: &Budget,
) -> Result<(FilteredAction, String)> {
    let group = g_f.group();
    let subgroups = all_subgroups(group, budget)?;
    let (action, kind) = match rng.gen_range(0..3) {
        0 => {
            let normalizing: Vec<&Subgroup> = subgroups
                .iter()
                .filter(|h| {
                    g_f.levels().iter().all(|l| {
                        h.members().ones().all(|x| {
                            l.members()
                                .ones()
                                .all(|g| l.contains(group.conjugate(x, g)))
                        })
                    })
                })
                .collect();
            let h = normalizing
                .choose(rng)
                .expect("trivial subgroup normalizes");
            (
                conjugation_by(h)?,
                format!("conj by order-{} subgroup", h.order()),
            )
        }
        1 => {
            let auts = level_preserving_automorphisms(g_f, budget)?;
            let phi = auts.choose(rng).expect("identity is an automorphism");
            let action = cyclic_action(phi)?;
            let kind = format!("powers of an order-{} automorphism", action.actor().order());
            (action, kind)
        }
        _ => {
            let actors = small_groups(8);
            let (name, b) = actors.choose(rng).unwrap();
            (GroupAction::trivial(b, group), format!("trivial {name}"))
        }
    };
    let b_f = random_scf(rng, action.actor(), actor_len, false, budget)?;
    let descriptor = format!("B*={} {}", describe(&b_f), kind);
    let filtered = FilteredAction::new(action, b_f, g_f.clone())
        .map_err(|e| Error::fault(format!("generated action is not level-preserving: {e}")))?;
    Ok((filtered, descriptor))
}

/// A certified point over `actor_f` on some catalog group of order at most
/// `max_order`, filtered from the whole group.
pub fn random_point(
    rng: &mut Rand,
    actor_f: &ScfCertificate,
    max_order: usize,
    max_len: usize,
    budget: &Budget,
) -> Result<(ScfAction, String)> {
    let groups = small_groups(max_order);
    let actor = actor_f.group();
    for _ in 0..100 {
        let (name, x) = groups.choose(rng).unwrap();
        match rng.gen_range(0..3) {
            0 => {
                let x_f = random_scf(rng, x, max_len, true, budget)?;
                let act = GroupAction::trivial(actor, x);
                let s = validate_scf_action(&act, actor_f, &x_f)?;
                return Ok((s, format!("{name} {} trivial", describe(&x_f))));
            }
            1 => {
                // conjugation through a filtration-preserving ψ: B_* → X_*
                if !actor_f.level(1).is_whole() {
                    continue;
                }
                let x_f = random_scf(rng, x, max_len, true, budget)?;
                let homs = filtered_homomorphisms(actor_f, &x_f, budget)?;
                let psi = homs.choose(rng).expect("trivial map is filtered");
                let act = conjugation_through(psi)?;
                if let Ok(s) = validate_scf_action(&act, actor_f, &x_f) {
                    return Ok((s, format!("{name} {} conj through hom", describe(&x_f))));
                }
            }
            _ => {
                // the transport limit of a random action, kept when it is filtered from the whole group
                let x_f = random_scf(rng, x, max_len, true, budget)?;
                let homs: Vec<Homomorphism> = if actor_f.level(1).is_whole() {
                    filtered_homomorphisms(
                        actor_f,
                        &Filtration::constant(Subgroup::whole(x)),
                        budget,
                    )?
                } else {
                    Vec::new()
                };
                let Some(psi) = homs.choose(rng) else {
                    continue;
                };
                let act = conjugation_through(psi)?;
                let Ok(filtered) = FilteredAction::new(act, actor_f.clone(), x_f.clone()) else {
                    continue;
                };
                let tower = crate::coinduction::t_infinity(&filtered)?;
                let limit = tower.limit();
                if limit.target_filtration().level(1).is_whole() {
                    return Ok((
                        limit.clone(),
                        format!(
                            "{name} {} transported from {}",
                            describe(limit.target_filtration()),
                            describe(&x_f)
                        ),
                    ));
                }
            }
        }
    }
    let x = crate::group::cyclic(1);
    let one = validate_scf(&Filtration::constant(Subgroup::whole(&x)))?;
    let s = validate_scf_action(&GroupAction::trivial(actor, &x), actor_f, &one)?;
    Ok((s, "Z1 trivial".into()))
}

/// `H ∩ B_i` on the standalone copy of `H`, and the inclusion.
pub fn restricted_filtration(
    h: &Subgroup,
    b_f: &Filtration,
) -> Result<(ScfCertificate, Homomorphism)> {
    let group = h.group();
    let (hg, emb) = group.restrict(h)?;
    let levels = b_f
        .levels()
        .iter()
        .map(|l| Subgroup::from_elements(&hg, hg.elements().filter(|&k| l.contains(emb[k]))))
        .collect::<Result<Vec<_>>>()?;
    let cert = validate_scf(&Filtration::new(levels)?)
        .map_err(|e| Error::fault(format!("restricted filtration: {e}")))?;
    Ok((cert, Homomorphism::new(&hg, group, emb)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn generation_is_deterministic_and_valid() {
        let b = Budget::default();
        let run = |seed| {
            let mut rng = Rand::seed_from_u64(seed);
            let mut out = Vec::new();
            for (_, g) in small_groups(8) {
                let f = random_scf(&mut rng, &g, 3, false, &b).unwrap();
                let (a, d) = random_filtered_action(&mut rng, &f, 3, &b).unwrap();
                out.push((describe(&f), d, a.action().rows()));
            }
            out
        };
        assert_eq!(run(3), run(3));
    }

    #[test]
    fn automorphisms_of_d4_preserving_lcs() {
        let d4 = crate::group::dihedral(4);
        let auts =
            level_preserving_automorphisms(&lower_central_series(&d4), &Budget::default()).unwrap();
        assert_eq!(auts.len(), 8);
        let act = cyclic_action(&auts[1]).unwrap();
        assert!(act.actor().order() > 1);
    }

    #[test]
    fn points_are_certified() {
        let b = Budget::default();
        let mut rng = Rand::seed_from_u64(11);
        let d4 = crate::group::dihedral(4);
        let lcs = lower_central_series(&d4);
        for _ in 0..10 {
            let (p, _) = random_point(&mut rng, &lcs, 8, 3, &b).unwrap();
            assert!(p.target_filtration().level(1).is_whole());
        }
    }
}
