//! Algebraic laws checked over catalog groups and seeded random instances.

use proptest::prelude::*;
use rand::SeedableRng;

use coind_core::action::{enumerate_equivariant_morphisms, GroupAction};
use coind_core::coinduction::{
    equivariant_maps, t_step, transpose_backward_plain, transpose_forward_plain,
};
use coind_core::group::{
    all_subgroups, commutator_subgroup, enumerate_homomorphisms, generate_subgroup, normal_closure,
    Elem, GroupRef,
};
use coind_core::harness::instances::{
    conjugation_through, random_filtered_action, random_scf, small_groups, Rand,
};
use coind_core::harness::oracle::{brute_force_homomorphisms, is_strongly_central};
use coind_core::Budget;

fn group(index: usize, max_order: usize) -> GroupRef {
    let groups = small_groups(max_order);
    groups[index % groups.len()].1.clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn commutator_subgroup_is_symmetric(g in 0usize..40, a in 0usize..64, b in 0usize..64) {
        let g = group(g, 16);
        let subs = all_subgroups(&g, &Budget::default()).unwrap();
        let (x, y) = (&subs[a % subs.len()], &subs[b % subs.len()]);
        prop_assert_eq!(commutator_subgroup(x, y).unwrap(), commutator_subgroup(y, x).unwrap());
    }

    #[test]
    fn generation_is_idempotent_and_monotone(g in 0usize..40, seed in proptest::collection::vec(0usize..64, 0..4), extra in 0usize..64) {
        let g = group(g, 16);
        let seed: Vec<Elem> = seed.into_iter().map(|x| x % g.order()).collect();
        let h = generate_subgroup(&g, &seed).unwrap();
        prop_assert_eq!(&generate_subgroup(&g, &h.elements()).unwrap(), &h);
        let mut bigger = seed.clone();
        bigger.push(extra % g.order());
        prop_assert!(h.is_subset(&generate_subgroup(&g, &bigger).unwrap()));
        let n = normal_closure(&g, &seed).unwrap();
        prop_assert!(h.is_subset(&n));
        if g.is_abelian() {
            prop_assert_eq!(n, h);
        }
    }

    #[test]
    fn hom_enumeration_matches_brute_force(s in 0usize..10, t in 0usize..10) {
        let b = Budget::default();
        let (s, t) = (group(s, 4), group(t, 4));
        let lib: Vec<Vec<Elem>> = enumerate_homomorphisms(&s, &t, &b).unwrap().into_iter().map(|h| h.table().to_vec()).collect();
        prop_assert_eq!(lib, brute_force_homomorphisms(&s, &t, &b).unwrap());
    }

    #[test]
    fn transport_step_is_strongly_central_and_stable(seed in any::<u64>(), g in 0usize..40) {
        let b = Budget::default();
        let mut rng = Rand::seed_from_u64(seed);
        let g = group(g, 16);
        let g_f = random_scf(&mut rng, &g, 4, false, &b).unwrap();
        let (a, _) = random_filtered_action(&mut rng, &g_f, 4, &b).unwrap();
        let step = t_step(&a).unwrap();
        let t = step.target_filtration();
        let bits: Vec<_> = t.levels().iter().map(|l| l.members().clone()).collect();
        prop_assert!(is_strongly_central(&g, &bits, 2 * (t.len() + a.bound()) + 2));
        for l in t.levels() {
            for x in a.actor_filtration().level(1).elements() {
                prop_assert!(l.members().ones().all(|y| l.contains(a.action().apply(x, y))));
            }
        }
    }

    #[test]
    fn plain_transposes_are_inverse(e in 0usize..20, bg in 0usize..20, y in 0usize..20, pick in any::<usize>()) {
        let budget = Budget::default();
        let (e, bg, y) = (group(e, 4), group(bg, 4), group(y, 4));
        let alphas = enumerate_homomorphisms(&e, &bg, &budget).unwrap();
        let alpha = &alphas[pick % alphas.len()];
        let psis = enumerate_homomorphisms(&e, &y, &budget).unwrap();
        let y_act = conjugation_through(&psis[pick % psis.len()]).unwrap();
        let maps = equivariant_maps(alpha, &y_act, &budget).unwrap();
        let x_act = GroupAction::conjugation(&bg);
        let pulled = x_act.pull_back(alpha).unwrap();
        for f in enumerate_equivariant_morphisms(&pulled, &y_act, None, &budget).unwrap() {
            let hat = transpose_forward_plain(&maps, &x_act, f.hom()).unwrap();
            let back = transpose_backward_plain(&maps, &hat).unwrap();
            prop_assert_eq!(back.table(), f.table());
        }
    }
}
