//! Worked examples across the public API, with expected values recomputed by
//! brute force in this file rather than taken from the library.

use coind_core::action::{
    enumerate_equivariant_morphisms, restrict_action, semidirect_product, validate_group_action,
    validate_scf_action, FilteredAction, GroupAction,
};
use coind_core::coinduction::{coinduce, equivariant_maps, t_infinity, t_step};
use coind_core::error::{Error, ScfActionViolation};
use coind_core::filtration::{
    image_filtration, intersect_filtrations, lower_central_series, validate_scf, Filtration,
    ScfCertificate,
};
use coind_core::group::{
    catalog, commutator_subgroup, cyclic, dihedral, enumerate_homomorphisms, generate_subgroup,
    is_automorphism, klein_four, normal_closure, symmetric, validate_group, Elem, GroupRef,
    Homomorphism, RawGroup, Subgroup,
};
use coind_core::harness::Record;
use coind_core::harness::{verify_plain_adjunction, verify_top_adjunction};
use coind_core::topology::{
    continuous_maps_group, curry_check, t_top_infinity, validate_topgroup, validate_topology,
    FiniteTopology, TopGroup,
};
use coind_core::Budget;

fn constant(g: &GroupRef) -> ScfCertificate {
    validate_scf(&Filtration::constant(Subgroup::whole(g))).unwrap()
}

fn sets(g: &GroupRef, s: &[&[Elem]]) -> Filtration {
    let v: Vec<Vec<Elem>> = s.iter().map(|x| x.to_vec()).collect();
    Filtration::from_element_sets(g, &v).unwrap()
}

fn negation() -> GroupAction {
    GroupAction::from_fn(
        &cyclic(2),
        &cyclic(4),
        |b, g| if b == 0 { g } else { (4 - g) % 4 },
    )
    .unwrap()
}

/// Closure of a set under products, computed naively.
fn closure(g: &GroupRef, seed: &[Elem]) -> Vec<Elem> {
    let mut set: Vec<Elem> = vec![g.identity()];
    set.extend_from_slice(seed);
    set.sort_unstable();
    set.dedup();
    loop {
        let mut next = set.clone();
        for &a in &set {
            for &b in &set {
                let p = g.mul(a, b);
                if !next.contains(&p) {
                    next.push(p);
                }
            }
        }
        if next.len() == set.len() {
            next.sort_unstable();
            return next;
        }
        set = next;
    }
}

#[test]
fn z4_table_and_broken_associativity() {
    let mul: Vec<Vec<usize>> = (0..4)
        .map(|a| (0..4).map(|b| (a + b) % 4).collect())
        .collect();
    let names: Vec<String> = (0..4).map(|k| k.to_string()).collect();
    assert!(validate_group(&RawGroup {
        order: 4,
        names: names.clone(),
        mul: mul.clone(),
        identity: Some(0)
    })
    .is_ok());
    let mut broken = mul;
    broken[1][2] = 0;
    broken[1][3] = 3;
    assert!(matches!(
        validate_group(&RawGroup {
            order: 4,
            names,
            mul: broken,
            identity: Some(0)
        }),
        Err(Error::InvalidGroup(_))
    ));
}

#[test]
fn subgroup_generation_in_d4() {
    let d4 = dihedral(4);
    let r = d4.find("r").unwrap();
    assert_eq!(
        generate_subgroup(&d4, &[r]).unwrap().elements(),
        closure(&d4, &[r])
    );
    assert_eq!(generate_subgroup(&d4, &[r]).unwrap().order(), 4);
    assert_eq!(generate_subgroup(&d4, &[]).unwrap().order(), 1);
    let all: Vec<Elem> = d4.elements().collect();
    assert!(generate_subgroup(&d4, &all).unwrap().is_whole());
}

#[test]
fn derived_subgroup_of_d4() {
    let d4 = dihedral(4);
    let whole = Subgroup::whole(&d4);
    let commutators: Vec<Elem> = d4
        .elements()
        .flat_map(|x| d4.elements().map(move |y| (x, y)))
        .map(|(x, y)| d4.mul(d4.mul(x, y), d4.mul(d4.inv(x), d4.inv(y))))
        .collect();
    let expected = closure(&d4, &commutators);
    assert_eq!(
        commutator_subgroup(&whole, &whole).unwrap().elements(),
        expected
    );
    assert_eq!(expected, vec![0, d4.find("r2").unwrap()]);
}

#[test]
fn normal_closure_of_a_transposition() {
    let s3 = symmetric(3);
    let t = 1; // a transposition
    assert_eq!(s3.element_order(t), 2);
    assert!(normal_closure(&s3, &[t]).unwrap().is_whole());
    let z6 = cyclic(6);
    assert_eq!(
        normal_closure(&z6, &[2]).unwrap(),
        generate_subgroup(&z6, &[2]).unwrap()
    );
}

#[test]
fn small_hom_counts() {
    let b = Budget::default();
    assert_eq!(
        enumerate_homomorphisms(&cyclic(2), &cyclic(2), &b)
            .unwrap()
            .len(),
        2
    );
    assert_eq!(
        enumerate_homomorphisms(&cyclic(2), &cyclic(3), &b)
            .unwrap()
            .len(),
        1
    );
    assert_eq!(
        enumerate_homomorphisms(&dihedral(4), &cyclic(1), &b)
            .unwrap()
            .len(),
        1
    );
    let z4 = cyclic(4);
    let square = Homomorphism::new(&z4, &z4, vec![0, 2, 0, 2]).unwrap();
    assert!(!is_automorphism(&z4, &square).unwrap());
}

#[test]
fn scf_checks() {
    let d4 = dihedral(4);
    assert_eq!(lower_central_series(&d4).orders(), vec![8, 2, 1]);
    let s3 = symmetric(3);
    let bad = Filtration::new(vec![
        Subgroup::whole(&s3),
        Subgroup::whole(&s3),
        Subgroup::trivial(&s3),
    ])
    .unwrap();
    match validate_scf(&bad) {
        Err(Error::NotStronglyCentral(v)) => assert_eq!((v.i, v.j), (1, 2)),
        other => panic!("unexpected {other:?}"),
    }
    let lcs = lower_central_series(&s3);
    assert_eq!(lcs.orders(), vec![6, 3]);
    assert_eq!(lcs.level(7).order(), 3);
    assert_eq!(lower_central_series(&cyclic(6)).orders(), vec![6, 1]);
}

#[test]
fn filtration_intersection_and_image() {
    let d4 = dihedral(4);
    let (r, r2, s) = (
        d4.find("r").unwrap(),
        d4.find("r2").unwrap(),
        d4.find("s").unwrap(),
    );
    let rot = closure(&d4, &[r]);
    let klein = closure(&d4, &[r2, s]);
    let all: Vec<Elem> = d4.elements().collect();
    let a = sets(&d4, &[&all, &rot]);
    let b = sets(&d4, &[&all, &klein]);
    let meet = intersect_filtrations(&[&a, &b]).unwrap();
    assert_eq!(meet.to_element_sets(), vec![all.clone(), vec![0, r2]]);
    // D4 → V4 killing r²: r ↦ (1,0), s ↦ (0,1)
    let v4 = klein_four();
    let q = Homomorphism::new(
        &d4,
        &v4,
        d4.elements().map(|x| (x % 2) * 2 + x / 4).collect(),
    )
    .unwrap();
    let img = image_filtration(&q, &lower_central_series(&d4)).unwrap();
    assert_eq!(img.orders(), vec![4, 1]);
}

#[test]
fn actions_and_their_certificates() {
    let (z2, z4) = (cyclic(2), cyclic(4));
    assert!(validate_group_action(&negation().rows(), &z2, &z4).is_ok());
    let shift = vec![vec![0, 1, 2, 3], vec![1, 2, 3, 0]];
    assert!(matches!(
        validate_group_action(&shift, &z2, &z4),
        Err(Error::InvalidAction(_))
    ));
    let g_f = validate_scf(&sets(&z4, &[&[0, 1, 2, 3], &[0, 2], &[0]])).unwrap();
    match validate_scf_action(&negation(), &constant(&z2), &g_f) {
        Err(Error::NotScfAction(ScfActionViolation::Bracket { i, j, .. })) => {
            assert_eq!((i, j), (2, 1))
        }
        other => panic!("unexpected {other:?}"),
    }
    let d4 = dihedral(4);
    let lcs = lower_central_series(&d4);
    assert!(validate_scf_action(&GroupAction::conjugation(&d4), &lcs, &lcs).is_ok());
}

#[test]
fn semidirect_of_negation_on_z3_is_s3() {
    let (z2, z3) = (cyclic(2), cyclic(3));
    let neg = GroupAction::from_fn(&z2, &z3, |b, g| if b == 0 { g } else { (3 - g) % 3 }).unwrap();
    let s = validate_scf_action(&neg, &constant(&z2), &constant(&z3)).unwrap();
    let (sd, cert) = semidirect_product(&s).unwrap();
    assert_eq!(sd.group.order(), 6);
    assert!(!sd.group.is_abelian());
    assert_eq!(cert.orders(), vec![6]);
}

#[test]
fn restriction_to_rotations() {
    let d4 = dihedral(4);
    let lcs = lower_central_series(&d4);
    let x = validate_scf_action(&GroupAction::conjugation(&d4), &lcs, &lcs).unwrap();
    let rot = generate_subgroup(&d4, &[d4.find("r").unwrap()]).unwrap();
    let (c4, emb) = d4.restrict(&rot).unwrap();
    let incl = Homomorphism::new(&c4, &d4, emb.clone()).unwrap();
    let levels: Vec<Vec<Elem>> = lcs
        .levels()
        .iter()
        .map(|l| c4.elements().filter(|&k| l.contains(emb[k])).collect())
        .collect();
    let e_f = validate_scf(&Filtration::from_element_sets(&c4, &levels).unwrap()).unwrap();
    let pulled = restrict_action(&incl, &e_f, &x).unwrap();
    assert_eq!(pulled.actor_filtration().group().order(), 4);
}

#[test]
fn equivariant_morphism_counts_against_filter() {
    let b = Budget::default();
    let s3 = symmetric(3);
    let conj = GroupAction::conjugation(&s3);
    let lib = enumerate_equivariant_morphisms(&conj, &conj, None, &b).unwrap();
    let brute: Vec<Homomorphism> = enumerate_homomorphisms(&s3, &s3, &b)
        .unwrap()
        .into_iter()
        .filter(|h| {
            s3.elements().all(|a| {
                s3.elements()
                    .all(|x| h.apply(conj.apply(a, x)) == conj.apply(a, h.apply(x)))
            })
        })
        .collect();
    assert_eq!(lib.len(), brute.len());
    // identity and trivial
    assert_eq!(lib.len(), 2);
}

#[test]
fn equivariant_map_carriers() {
    let b = Budget::default();
    let (one, z2, z4) = (cyclic(1), cyclic(2), cyclic(4));
    // E trivial: all maps B → Y
    let m = equivariant_maps(
        &Homomorphism::trivial(&one, &z2),
        &GroupAction::trivial(&one, &z4),
        &b,
    )
    .unwrap();
    assert_eq!(m.carrier().order(), 16);
    // E = B = Z2, identity, trivial Y: maps constant on cosets of Z2 in Z2
    let m = equivariant_maps(
        &Homomorphism::identity(&z2),
        &GroupAction::trivial(&z2, &z2),
        &b,
    )
    .unwrap();
    let brute = (0..4)
        .filter(|code| {
            let u = [code % 2, code / 2];
            (0..2).all(|e| (0..2).all(|x| u[z2.mul(e, x)] == u[x]))
        })
        .count();
    assert_eq!(m.carrier().order(), brute);
    assert_eq!(brute, 2);
}

#[test]
fn transport_on_negation() {
    let (z2, z4) = (cyclic(2), cyclic(4));
    let g_f = validate_scf(&sets(&z4, &[&[0, 1, 2, 3], &[0, 2], &[0]])).unwrap();
    let a = FilteredAction::new(negation(), constant(&z2), g_f).unwrap();
    // t_i = {g ∈ G_i : (b·g)g⁻¹ ∈ G_{i+j} for every b ∈ B_j}, by hand
    let expected: Vec<Vec<Elem>> = (1..=3)
        .map(|i| {
            (0..4)
                .filter(|&g| a.target_filtration().level(i).contains(g))
                .filter(|&g| {
                    (1..=3).all(|j| {
                        (0..2).all(|b| {
                            a.target_filtration()
                                .level(i + j)
                                .contains(a.action().bracket(b, g))
                        })
                    })
                })
                .collect()
        })
        .collect();
    let step = t_step(&a).unwrap();
    assert_eq!(
        step.target_filtration().to_element_sets(),
        Filtration::from_element_sets(&z4, &expected)
            .unwrap()
            .to_element_sets()
    );
    let tower = t_infinity(&a).unwrap();
    assert_eq!(
        tower.limit().target_filtration().to_element_sets(),
        vec![vec![0, 2], vec![0, 2], vec![0]]
    );
    // already certified: one level
    let d4 = dihedral(4);
    let lcs = lower_central_series(&d4);
    let x = FilteredAction::new(GroupAction::conjugation(&d4), lcs.clone(), lcs).unwrap();
    assert_eq!(t_infinity(&x).unwrap().len(), 1);
}

#[test]
fn coinduction_along_trivial_source_is_coordinate_swap() {
    let b = Budget::default();
    let (one, z2) = (cyclic(1), cyclic(2));
    let y = validate_scf_action(
        &GroupAction::trivial(&one, &z2),
        &constant(&one),
        &constant(&z2),
    )
    .unwrap();
    let co = coinduce(&Homomorphism::trivial(&one, &z2), &constant(&z2), &y, &b).unwrap();
    let carrier = co.maps().carrier();
    assert_eq!(carrier.order(), 4);
    let act = co.point().action();
    for u in carrier.elements() {
        let v = act.apply(1, u);
        assert_eq!(co.maps().evaluate(v, 0), co.maps().evaluate(u, 1));
        assert_eq!(co.maps().evaluate(v, 1), co.maps().evaluate(u, 0));
    }
}

#[test]
fn plain_adjunction_on_catalog_pairs() {
    let b = Budget::default();
    let d4 = catalog("D4").unwrap();
    let z2 = cyclic(2);
    let mut record = Record::new("0", "D4 conj, α: Z2 → D4 onto ⟨s⟩");
    let alpha = Homomorphism::new(&z2, &d4, vec![0, d4.find("s").unwrap()]).unwrap();
    verify_plain_adjunction(
        &alpha,
        &GroupAction::conjugation(&d4),
        &GroupAction::trivial(&z2, &cyclic(3)),
        &mut record,
        &b,
    )
    .unwrap();
    assert!(record.passed(), "{record:?}");
}

#[test]
fn topologies_and_topological_groups() {
    assert!(validate_topology(&[vec![], vec![0, 1, 2]], 3)
        .unwrap()
        .is_indiscrete());
    assert!(validate_topology(&[vec![], vec![0], vec![1], vec![0, 1, 2]], 3).is_err());
    let s3 = symmetric(3);
    // left cosets of the non-normal ⟨(12)⟩
    let h = generate_subgroup(&s3, &[1]).unwrap();
    let cosets: Vec<Vec<Elem>> = s3
        .elements()
        .map(|g| {
            let mut c: Vec<Elem> = h.elements().iter().map(|&x| s3.mul(g, x)).collect();
            c.sort_unstable();
            c
        })
        .collect();
    let mut opens = vec![vec![], s3.elements().collect::<Vec<_>>()];
    for mask in 1u32..8 {
        let mut distinct = cosets.clone();
        distinct.sort();
        distinct.dedup();
        let mut u: Vec<Elem> = distinct
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1 << k) != 0)
            .flat_map(|(_, c)| c.clone())
            .collect();
        u.sort_unstable();
        opens.push(u);
    }
    opens.sort();
    opens.dedup();
    let tau = validate_topology(&opens, 6).unwrap();
    assert!(matches!(
        validate_topgroup(&s3, &tau),
        Err(Error::NotTopGroup(_))
    ));
}

#[test]
fn continuous_function_groups() {
    let b = Budget::default();
    let z2 = cyclic(2);
    let z3 = cyclic(3);
    let (f, t) =
        continuous_maps_group(&TopGroup::discrete(&z2), &TopGroup::discrete(&z3), &b).unwrap();
    assert_eq!(f.maps().len(), 9);
    assert!(t.topology().is_discrete());
    let (f, t) =
        continuous_maps_group(&TopGroup::discrete(&z2), &TopGroup::indiscrete(&z3), &b).unwrap();
    assert_eq!(f.maps().len(), 9);
    assert!(t.topology().is_indiscrete());
    let (f, _) = continuous_maps_group(
        &TopGroup::discrete(&cyclic(1)),
        &TopGroup::indiscrete(&z3),
        &b,
    )
    .unwrap();
    assert_eq!(f.maps().len(), 3);
}

#[test]
fn currying_counts() {
    let b = Budget::default();
    let d2 = FiniteTopology::discrete(2);
    let r = curry_check(&d2, &d2, &d2, &b).unwrap();
    assert_eq!((r.uncurried, r.curried), (16, 16));
    let r = curry_check(&FiniteTopology::indiscrete(2), &d2, &d2, &b).unwrap();
    assert!(r.bijective);
    // maps constant in the indiscrete coordinate: 2^2
    assert_eq!(r.uncurried, 4);
}

#[test]
fn topological_towers() {
    let b = Budget::default();
    let s3 = symmetric(3);
    let g = TopGroup::discrete(&s3);
    // discrete actor, conjugation: already jointly continuous
    let t = t_top_infinity(&TopGroup::discrete(&s3), &g, &GroupAction::conjugation(&s3)).unwrap();
    assert_eq!(t.limit_subgroup().order(), 6);
    assert!(t.len() <= 2);
    // trivial actor
    let one = TopGroup::discrete(&cyclic(1));
    let t = t_top_infinity(&one, &g, &GroupAction::trivial(one.group(), &s3)).unwrap();
    assert_eq!(t.len(), 1);
    // G discrete, B discrete: continuous equivariant maps are all equivariant maps
    let z2 = TopGroup::discrete(&cyclic(2));
    let act = GroupAction::trivial(z2.group(), &s3);
    let mut record = Record::new("0", "discrete");
    verify_top_adjunction(&z2, &g, &act, &mut record, &b).unwrap();
    assert!(record.passed());
}
