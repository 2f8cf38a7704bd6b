//! Adjunction verifiers and the seeded suites built on them.

use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use super::instances::{
    conjugation_through, cyclic_action, describe, filtered_homomorphisms,
    level_preserving_automorphisms, random_filtered_action, random_point, random_scf,
    restricted_filtration, small_groups, Rand,
};
use super::oracle::{
    brute_force_homomorphisms, is_strongly_central, lower_central_orders, oracle_max_subfiltration,
};
use super::report::{Record, Report};
use crate::action::{
    enumerate_equivariant_morphisms, restrict_action, validate_scf_action, EquivariantMorphism,
    FilteredAction, GroupAction, ScfAction,
};
use crate::budget::{saturating_pow, Budget};
use crate::coinduction::{
    coinduce, equivariant_maps, equivariant_maps_exhaustive, equivariant_maps_transversal,
    t_infinity, t_step, transpose_backward, transpose_backward_plain, transpose_forward,
    transpose_forward_plain,
};
use crate::error::{Error, Result};
use crate::filtration::{lower_central_series, validate_scf, Filtration, ScfCertificate};
use crate::group::{
    all_subgroups, catalog, cyclic, enumerate_homomorphisms, klein_four, Elem, GroupRef,
    Homomorphism, Subgroup,
};
use crate::topology::{
    check_continuous_automorphisms, curry_check, t_top_infinity, validate_continuous_action,
    validate_topology, ContinuousAction, FiniteTopology, TopGroup,
};

/// Names accepted by [`run_suite`], in the order `all` runs them.
pub const SUITES: &[&str] = &[
    "lcs",
    "transport",
    "maximality",
    "plain",
    "scf-adjunction",
    "curry",
    "top-adjunction",
];

/// Runs a named suite. Budget overruns abort the whole suite.
pub fn run_suite(name: &str, seed: u64, budget: &Budget) -> Result<Report> {
    let start = std::time::Instant::now();
    let mut report = match name {
        "lcs" => lcs_suite(seed, budget),
        "transport" => transport_suite(seed, 200, budget),
        "maximality" => maximality_suite(seed, 5, budget),
        "plain" => plain_suite(seed, 40, budget),
        "scf-adjunction" => scf_suite(seed, 60, budget),
        "curry" => curry_suite(seed, budget),
        "top-adjunction" => top_suite(seed, 30, budget),
        other => Err(Error::Usage(format!(
            "unknown suite `{other}` (expected one of: {})",
            SUITES.join(", ")
        ))),
    }?;
    report.wall_time = Some(start.elapsed());
    Ok(report)
}

/// Keeps budget refusals fatal and turns every other failure into a failed check.
fn attempt<T>(record: &mut Record, check: &str, r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(e @ Error::BudgetExceeded { .. }) => Err(e),
        Err(e) => {
            record.fail(check, e.to_string());
            Ok(None)
        }
    }
}

fn table_list(tables: &[Vec<Elem>]) -> String {
    let parts: Vec<String> = tables.iter().map(|t| format!("{t:?}")).collect();
    parts.join(" ")
}

fn id(k: usize) -> String {
    format!("{k:04}")
}

// ---------------------------------------------------------------------------
// Plain-group co-induction

/// `Hom_E(α*X, Y) ≅ Hom_B(X, hom_E(B, Y))` for plain actions: both sets are
/// enumerated and the explicit transposes are checked to be inverse bijections.
pub fn verify_plain_adjunction(
    alpha: &Homomorphism,
    x_action: &GroupAction,
    y_action: &GroupAction,
    record: &mut Record,
    budget: &Budget,
) -> Result<()> {
    let Some(maps) = attempt(
        record,
        "construct",
        equivariant_maps(alpha, y_action, budget),
    )?
    else {
        return Ok(());
    };
    record.count("carrier", maps.carrier().order());
    let (nb, ny) = (alpha.target().order(), y_action.target().order());
    if saturating_pow(ny, nb) <= budget.map_space {
        let ex = equivariant_maps_exhaustive(alpha, y_action, budget)?;
        let tr = equivariant_maps_transversal(alpha, y_action, budget)?;
        record.check("carrier-constructions-agree", ex == tr, || {
            format!("exhaustive {} maps, transversal {}", ex.len(), tr.len())
        });
    }
    let pulled = x_action.pull_back(alpha)?;
    let left = enumerate_equivariant_morphisms(&pulled, y_action, None, budget)?;
    let right = enumerate_equivariant_morphisms(x_action, maps.b_action(), None, budget)?;
    record.count("left", left.len());
    record.count("right", right.len());
    record.check("cardinality", left.len() == right.len(), || {
        format!(
            "|Hom_E(α*X,Y)| = {}, |Hom_B(X,hom_E(B,Y))| = {}",
            left.len(),
            right.len()
        )
    });
    let right_tables: BTreeSet<&[Elem]> = right.iter().map(|g| g.table()).collect();
    let left_tables: BTreeSet<&[Elem]> = left.iter().map(|f| f.table()).collect();
    let mut images = BTreeSet::new();
    for f in &left {
        let Some(hat) = attempt(
            record,
            "forward",
            transpose_forward_plain(&maps, x_action, f.hom()),
        )?
        else {
            return Ok(());
        };
        if !record.check("forward-lands", right_tables.contains(hat.table()), || {
            format!("f = {:?} gives {:?}", f.table(), hat.table())
        }) {
            return Ok(());
        }
        images.insert(hat.table().to_vec());
        let Some(back) = attempt(record, "backward", transpose_backward_plain(&maps, &hat))? else {
            return Ok(());
        };
        if !record.check("backward-after-forward", back.table() == f.table(), || {
            format!("f = {:?} returns as {:?}", f.table(), back.table())
        }) {
            return Ok(());
        }
    }
    record.check("forward-injective", images.len() == left.len(), || {
        "two maps share a transpose".into()
    });
    for g in &right {
        let Some(check) = attempt(record, "backward", transpose_backward_plain(&maps, g.hom()))?
        else {
            return Ok(());
        };
        if !record.check(
            "backward-lands",
            left_tables.contains(check.table()),
            || format!("g = {:?} gives {:?}", g.table(), check.table()),
        ) {
            return Ok(());
        }
        let Some(hat) = attempt(
            record,
            "forward",
            transpose_forward_plain(&maps, x_action, &check),
        )?
        else {
            return Ok(());
        };
        if !record.check("forward-after-backward", hat.table() == g.table(), || {
            format!("g = {:?} returns as {:?}", g.table(), hat.table())
        }) {
            return Ok(());
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Filtered co-induction

/// The filtered adjunction for `α: E_* → B_*`, a point `x` over `B_*` and a
/// point `y` over `E_*`: enumerates both hom-sets, checks the transposes are
/// inverse bijections between them, and checks naturality in `X_*` on a
/// sample of endomorphisms.
pub fn verify_scf_adjunction(
    alpha: &Homomorphism,
    x: &ScfAction,
    y: &ScfAction,
    record: &mut Record,
    rng: &mut Rand,
    budget: &Budget,
) -> Result<()> {
    let Some(co) = attempt(
        record,
        "coinduce",
        coinduce(alpha, x.actor_filtration(), y, budget),
    )?
    else {
        return Ok(());
    };
    let limit = co.point().target_filtration();
    record.count("carrier", co.maps().carrier().order());
    record.count("limit_order", limit.level(1).order());
    record.count("tower_length", co.tower().len());
    let Some(pulled) = attempt(
        record,
        "restrict",
        restrict_action(alpha, y.actor_filtration(), x),
    )?
    else {
        return Ok(());
    };
    let (x_f, y_f) = (x.target_filtration(), y.target_filtration());
    let left =
        enumerate_equivariant_morphisms(pulled.action(), y.action(), Some((x_f, y_f)), budget)?;
    let right = enumerate_equivariant_morphisms(
        x.action(),
        co.maps().b_action(),
        Some((x_f, limit)),
        budget,
    )?;
    record.count("left", left.len());
    record.count("right", right.len());
    record.check("cardinality", left.len() == right.len(), || {
        format!("left {} vs right {}", left.len(), right.len())
    });
    let right_set: BTreeSet<&EquivariantMorphism> = right.iter().collect();
    let left_set: BTreeSet<&EquivariantMorphism> = left.iter().collect();
    let mut hats = Vec::with_capacity(left.len());
    for f in &left {
        let Some(hat) = attempt(record, "forward", transpose_forward(&co, y, x, f))? else {
            return Ok(());
        };
        if !record.check("forward-lands", right_set.contains(&hat), || {
            format!("f = {:?} gives {:?}", f.table(), hat.table())
        }) {
            return Ok(());
        }
        let Some(back) = attempt(record, "backward", transpose_backward(&co, y, x, &hat))? else {
            return Ok(());
        };
        if !record.check("backward-after-forward", &back == f, || {
            format!("f = {:?} returns as {:?}", f.table(), back.table())
        }) {
            return Ok(());
        }
        hats.push(hat);
    }
    let distinct: BTreeSet<&EquivariantMorphism> = hats.iter().collect();
    record.check("forward-injective", distinct.len() == left.len(), || {
        "two maps share a transpose".into()
    });
    for g in &right {
        let Some(check) = attempt(record, "backward", transpose_backward(&co, y, x, g))? else {
            return Ok(());
        };
        if !record.check("backward-lands", left_set.contains(&check), || {
            format!("g = {:?} gives {:?}", g.table(), check.table())
        }) {
            return Ok(());
        }
        let Some(hat) = attempt(record, "forward", transpose_forward(&co, y, x, &check))? else {
            return Ok(());
        };
        if !record.check("forward-after-backward", &hat == g, || {
            format!("g = {:?} returns as {:?}", g.table(), hat.table())
        }) {
            return Ok(());
        }
    }
    // naturality in X_*: transpose(f ∘ h) = transpose(f) ∘ h
    let endos = enumerate_equivariant_morphisms(x.action(), x.action(), Some((x_f, x_f)), budget)?;
    let hs: Vec<&EquivariantMorphism> = endos.choose_multiple(rng, 4).collect();
    let fs: Vec<(&EquivariantMorphism, &EquivariantMorphism)> = left
        .iter()
        .zip(&hats)
        .collect::<Vec<_>>()
        .choose_multiple(rng, 4)
        .copied()
        .collect();
    let mut squares = 0;
    for h in &hs {
        for (f, hat) in &fs {
            let fh = EquivariantMorphism::new(h.hom().then(f.hom())?, pulled.action(), y.action())?;
            let Some(lhs) = attempt(record, "forward", transpose_forward(&co, y, x, &fh))? else {
                return Ok(());
            };
            let rhs = h.hom().then(hat.hom())?;
            squares += 1;
            if !record.check("naturality", lhs.hom() == &rhs, || {
                format!("h = {:?}, f = {:?}", h.table(), f.table())
            }) {
                return Ok(());
            }
        }
    }
    record.count("naturality_squares", squares);
    Ok(())
}

// ---------------------------------------------------------------------------
// Topological co-induction

/// Small topological groups with a jointly continuous action of `b`, used as
/// test objects for the universal property.
pub fn top_test_objects(b: &TopGroup, budget: &Budget) -> Result<Vec<(String, ContinuousAction)>> {
    let mut out = Vec::new();
    for (name, x) in small_groups(6) {
        let mut tops = vec![("discrete".to_string(), TopGroup::discrete(&x))];
        if x.order() > 1 {
            tops.push(("indiscrete".to_string(), TopGroup::indiscrete(&x)));
        }
        for n in all_subgroups(&x, budget)? {
            if n.is_normal() && !n.is_trivial() && !n.is_whole() {
                tops.push((
                    format!("mod order-{}", n.order()),
                    TopGroup::from_normal_subgroup(&n)?,
                ));
            }
        }
        let mut actions = vec![GroupAction::trivial(b.group(), &x)];
        for psi in enumerate_homomorphisms(b.group(), &x, budget)? {
            let act = conjugation_through(&psi)?;
            if !actions.contains(&act) {
                actions.push(act);
            }
        }
        for (tname, top) in &tops {
            for (k, act) in actions.iter().enumerate() {
                if let Ok(c) = validate_continuous_action(act, b, top) {
                    out.push((format!("{name} {tname} action {k}"), c));
                }
            }
        }
    }
    Ok(out)
}

fn continuous_tables(
    x: &ContinuousAction,
    target: &GroupAction,
    target_top: &FiniteTopology,
    budget: &Budget,
) -> Result<Vec<Vec<Elem>>> {
    let homs = enumerate_equivariant_morphisms(x.action(), target, None, budget)?;
    Ok(homs
        .into_iter()
        .filter(|h| x.target().topology().is_continuous(target_top, h.table()))
        .map(|h| h.table().to_vec())
        .collect())
}

/// Builds the continuity tower for `a`, certifies the limit action, and
/// checks that continuous equivariant homomorphisms `X → G` correspond
/// exactly to those `X → G_∞` for every test object `X`.
pub fn verify_top_adjunction(
    b: &TopGroup,
    g: &TopGroup,
    a: &GroupAction,
    record: &mut Record,
    budget: &Budget,
) -> Result<()> {
    let Some(tower) = attempt(record, "tower", t_top_infinity(b, g, a))? else {
        return Ok(());
    };
    record.pass("tower-terminates");
    record.count("tower_length", tower.len());
    let limit = tower.limit();
    record.count("limit_order", limit.target().group().order());
    let emb = tower.limit_embedding();
    if attempt(
        record,
        "joint-continuity",
        validate_continuous_action(limit.action(), b, limit.target()),
    )?
    .is_none()
    {
        return Ok(());
    }
    record.pass("joint-continuity");
    let mut objects = top_test_objects(b, budget)?;
    objects.push(("limit".into(), limit.clone()));
    record.count("test_objects", objects.len());
    let mut total = 0;
    for (name, x) in &objects {
        let mut direct = continuous_tables(x, a, g.topology(), budget)?;
        let through = continuous_tables(x, limit.action(), limit.target().topology(), budget)?;
        let mut composed: Vec<Vec<Elem>> = through
            .iter()
            .map(|t| t.iter().map(|&k| emb[k]).collect())
            .collect();
        direct.sort();
        composed.sort();
        total += direct.len();
        if !record.check("factorization", direct == composed, || {
            format!(
                "X = {name}: into G {} vs through limit {}",
                table_list(&direct),
                table_list(&composed)
            )
        }) {
            return Ok(());
        }
    }
    record.count("continuous_homs", total);
    Ok(())
}

// ---------------------------------------------------------------------------
// Suites

/// Lower central series against the commutator-closure oracle, with fixed
/// expectations for `D_4`, `Q_8` and `S_3`.
pub fn lcs_suite(seed: u64, budget: &Budget) -> Result<Report> {
    let mut report = Report::new("lcs", seed, budget);
    let expected: &[(&str, &[usize])] = &[("D4", &[8, 2, 1]), ("Q8", &[8, 2, 1]), ("S3", &[6, 3])];
    for (k, name) in crate::group::catalog_names().iter().enumerate() {
        let group = catalog(name).expect("catalog name");
        let lcs = lower_central_series(&group);
        let oracle = lower_central_orders(&group);
        let mut record = Record::new(id(k), format!("{name} lcs {}", describe(&lcs)));
        record.check("matches-oracle", lcs.orders() == oracle, || {
            format!("library {:?}, oracle {oracle:?}", lcs.orders())
        });
        let bits: Vec<FixedBitSet> = lcs.levels().iter().map(|l| l.members().clone()).collect();
        record.check(
            "strongly-central",
            is_strongly_central(&group, &bits, 2 * bits.len() + 2),
            || "brute-force bracket check failed".into(),
        );
        if let Some((_, orders)) = expected.iter().find(|(n, _)| n == name) {
            record.check("expected-orders", lcs.orders() == *orders, || {
                format!("expected {orders:?}, got {:?}", lcs.orders())
            });
        }
        report.push(record);
    }
    Ok(report)
}

fn index_wise_within(a: &Filtration, b: &Filtration) -> bool {
    (1..=a.len().max(b.len()) + 1).all(|i| a.level(i).is_subset(b.level(i)))
}

/// Randomized transport steps: strong centrality, stability, containment,
/// monotonicity and the fixed point, each checked independently.
pub fn transport_suite(seed: u64, count: usize, budget: &Budget) -> Result<Report> {
    let mut report = Report::new("transport", seed, budget);
    let mut rng = Rand::seed_from_u64(seed);
    let groups = small_groups(budget.group_order.min(16));
    for k in 0..count {
        let (name, group) = groups.choose(&mut rng).expect("catalog is not empty");
        let g_f = random_scf(&mut rng, group, 4, false, budget)?;
        let (a, descriptor) = random_filtered_action(&mut rng, &g_f, 4, budget)?;
        let mut record = Record::new(
            id(k),
            format!("G={name} G*={} {descriptor}", describe(&g_f)),
        );
        record.count("group_order", group.order());
        if let Some(step) = attempt(&mut record, "t-step", t_step(&a))? {
            let t = step.target_filtration();
            let bits: Vec<FixedBitSet> = t.levels().iter().map(|l| l.members().clone()).collect();
            let bound = 2 * (t.len() + a.bound()) + 2;
            record.check(
                "strongly-central",
                is_strongly_central(group, &bits, bound),
                || format!("levels {:?}", t.to_element_sets()),
            );
            let act = a.action();
            let unstable = a
                .actor_filtration()
                .level(1)
                .members()
                .ones()
                .find_map(|b| {
                    t.levels()
                        .iter()
                        .flat_map(|l| l.members().ones().map(move |g| (l, g)))
                        .find(|(l, g)| !l.contains(act.apply(b, *g)))
                        .map(|(_, g)| (b, g))
                });
            record.check("b-stable", unstable.is_none(), || {
                format!("(b, g) = {unstable:?}")
            });
            record.check("contained", index_wise_within(t, &g_f), || {
                format!(
                    "{:?} not within {:?}",
                    t.to_element_sets(),
                    g_f.to_element_sets()
                )
            });
            if let Some(again) = attempt(&mut record, "t-step", t_step(&step))? {
                record.check(
                    "monotone",
                    index_wise_within(again.target_filtration(), t),
                    || "t(t(G)) escapes t(G)".into(),
                );
            }
            if let Some(tower) = attempt(&mut record, "t-infinity", t_infinity(&a))? {
                record.count("tower_length", tower.len());
                let limit = tower.limit();
                if let Some(fixed) = attempt(&mut record, "t-step", t_step(limit))? {
                    record.check(
                        "fixed-point",
                        fixed.target_filtration() == limit.target_filtration(),
                        || format!("limit {:?}", limit.target_filtration().to_element_sets()),
                    );
                }
            }
        }
        report.push(record);
    }
    Ok(report)
}

fn negation_example() -> Result<(FilteredAction, String)> {
    let (z2, z4) = (cyclic(2), cyclic(4));
    let neg = GroupAction::from_fn(&z2, &z4, |b, g| if b == 0 { g } else { (4 - g) % 4 })?;
    let b_f = validate_scf(&Filtration::constant(Subgroup::whole(&z2)))?;
    let g_f = validate_scf(&Filtration::from_element_sets(
        &z4,
        &[vec![0, 1, 2, 3], vec![0, 2], vec![0]],
    )?)?;
    Ok((
        FilteredAction::new(neg, b_f, g_f)?,
        "G=Z4 G*=[4,2,1] B*=[2] negation".into(),
    ))
}

/// The transport limit against the exhaustive sub-filtration oracle on every
/// catalog group of order at most 8.
pub fn maximality_suite(seed: u64, per_group: usize, budget: &Budget) -> Result<Report> {
    let mut report = Report::new("maximality", seed, budget);
    let mut rng = Rand::seed_from_u64(seed);
    let mut instances = vec![negation_example()?];
    for (name, group) in small_groups(8) {
        for _ in 0..per_group {
            let g_f = random_scf(&mut rng, &group, 3, false, budget)?;
            let (a, d) = random_filtered_action(&mut rng, &g_f, 3, budget)?;
            instances.push((a, format!("G={name} G*={} {d}", describe(&g_f))));
        }
    }
    for (k, (a, descriptor)) in instances.into_iter().enumerate() {
        let mut record = Record::new(id(k), descriptor);
        let Some(tower) = attempt(&mut record, "t-infinity", t_infinity(&a))? else {
            report.push(record);
            continue;
        };
        record.count("tower_length", tower.len());
        let limit = tower.limit().target_filtration();
        if let Some(oracle) = attempt(&mut record, "oracle", oracle_max_subfiltration(&a, 3, 8))? {
            record.check("limit-equals-oracle", limit.filtration() == &oracle, || {
                format!(
                    "limit {:?}, oracle {:?}",
                    limit.to_element_sets(),
                    oracle.to_element_sets()
                )
            });
        }
        report.push(record);
    }
    Ok(report)
}

fn random_action_on(
    rng: &mut Rand,
    actor: &GroupRef,
    target: &GroupRef,
    budget: &Budget,
) -> Result<(GroupAction, String)> {
    if rng.gen_bool(0.3) {
        return Ok((GroupAction::trivial(actor, target), "trivial".into()));
    }
    let homs = enumerate_homomorphisms(actor, target, budget)?;
    let psi = homs.choose(rng).expect("trivial hom exists");
    Ok((conjugation_through(psi)?, "conj through hom".into()))
}

/// `|Fix(ker α)|^{[B : α(E)]}`, the order of `hom_E(B, Y)`.
fn predicted_carrier(alpha: &Homomorphism, y: &GroupAction) -> u128 {
    let kernel = alpha.kernel();
    let fixed = y
        .target()
        .elements()
        .filter(|&v| kernel.members().ones().all(|k| y.apply(k, v) == v))
        .count();
    let image = alpha
        .image(&Subgroup::whole(alpha.source()))
        .map(|s| s.order())
        .unwrap_or(1);
    saturating_pow(fixed, alpha.target().order() / image)
}

/// Plain-group co-induction over random `(E, B, Y, X, α)` from the catalog.
pub fn plain_suite(seed: u64, count: usize, budget: &Budget) -> Result<Report> {
    let mut report = Report::new("plain", seed, budget);
    let mut rng = Rand::seed_from_u64(seed);
    let groups = small_groups(8);
    let mut instances: Vec<(Homomorphism, GroupAction, GroupAction, String)> = Vec::new();
    // fixed shapes first: identity, trivial source, proper inclusion
    let s3 = catalog("S3").expect("catalog");
    instances.push((
        Homomorphism::identity(&s3),
        GroupAction::conjugation(&s3),
        GroupAction::conjugation(&s3),
        "α=id S3, X=Y=S3 conj".into(),
    ));
    let (one, z2, v4) = (cyclic(1), cyclic(2), klein_four());
    instances.push((
        Homomorphism::trivial(&one, &z2),
        GroupAction::from_fn(
            &z2,
            &v4,
            |b, g| if b == 0 { g } else { (g % 2) * 2 + g / 2 },
        )?,
        GroupAction::trivial(&one, &cyclic(3)),
        "α: Z1→Z2, X=V4 swap, Y=Z3".into(),
    ));
    let d4 = catalog("D4").expect("catalog");
    let rot = crate::group::generate_subgroup(&d4, &[d4.find("r").expect("rotation")])?;
    let (c4, emb) = d4.restrict(&rot)?;
    instances.push((
        Homomorphism::new(&c4, &d4, emb)?,
        GroupAction::conjugation(&d4),
        GroupAction::trivial(&c4, &z2),
        "α: C4→D4 rotations, X=D4 conj, Y=Z2".into(),
    ));
    let mut guard = 0;
    while instances.len() < count {
        guard += 1;
        if guard > 100 * count {
            return Err(Error::fault(
                "could not draw enough plain instances within budget",
            ));
        }
        let (ename, e) = groups.choose(&mut rng).unwrap();
        let (bname, b) = groups.choose(&mut rng).unwrap();
        let (yname, y) = groups.choose(&mut rng).unwrap();
        let (xname, x) = groups.choose(&mut rng).unwrap();
        let homs = enumerate_homomorphisms(e, b, budget)?;
        let alpha = homs.choose(&mut rng).unwrap().clone();
        let (y_act, yd) = random_action_on(&mut rng, e, y, budget)?;
        if predicted_carrier(&alpha, &y_act) > 256 {
            continue;
        }
        let (x_act, xd) = random_action_on(&mut rng, b, x, budget)?;
        instances.push((
            alpha,
            x_act,
            y_act,
            format!("α: {ename}→{bname}, X={xname} {xd}, Y={yname} {yd}"),
        ));
    }
    for (k, (alpha, x, y, descriptor)) in instances.into_iter().enumerate() {
        let mut record = Record::new(id(k), descriptor);
        verify_plain_adjunction(&alpha, &x, &y, &mut record, budget)?;
        report.push(record);
    }
    Ok(report)
}

/// A morphism of filtered groups together with its source filtration.
type FilteredAlpha = (Homomorphism, ScfCertificate, String);

fn draw_alpha(
    rng: &mut Rand,
    kind: usize,
    b_f: &ScfCertificate,
    budget: &Budget,
) -> Result<FilteredAlpha> {
    let b = b_f.group();
    let groups = small_groups(8);
    Ok(match kind {
        0 => (Homomorphism::identity(b), b_f.clone(), "α=id".into()),
        1 => {
            let (name, e) = groups.choose(rng).unwrap();
            let e_f = random_scf(rng, e, 3, true, budget)?;
            (
                Homomorphism::trivial(e, b),
                e_f,
                format!("α: {name}→B trivial"),
            )
        }
        2 => {
            let proper: Vec<Subgroup> = all_subgroups(b, budget)?
                .into_iter()
                .filter(|h| !h.is_whole())
                .collect();
            let h = proper
                .choose(rng)
                .cloned()
                .unwrap_or_else(|| Subgroup::trivial(b));
            let (e_f, incl) = restricted_filtration(&h, b_f)?;
            (
                incl,
                e_f,
                format!("α: order-{} subgroup inclusion", h.order()),
            )
        }
        _ => {
            let (name, e) = groups.choose(rng).unwrap();
            let e_f = random_scf(rng, e, 3, true, budget)?;
            let homs = filtered_homomorphisms(&e_f, b_f, budget)?;
            let alpha = homs.choose(rng).expect("trivial map is filtered").clone();
            let d = format!("α: {name}{} random", describe(&e_f));
            (alpha, e_f, d)
        }
    })
}

/// The filtered adjunction over random certified points, cycling through
/// identity, trivial, inclusion and random `α`.
pub fn scf_suite(seed: u64, count: usize, budget: &Budget) -> Result<Report> {
    let mut report = Report::new("scf-adjunction", seed, budget);
    let mut rng = Rand::seed_from_u64(seed);
    let groups = small_groups(8);
    for k in 0..count {
        let mut drawn = None;
        for _ in 0..200 {
            let (bname, b) = groups.choose(&mut rng).unwrap();
            let b_f = random_scf(&mut rng, b, 3, true, budget)?;
            let (alpha, e_f, ad) = draw_alpha(&mut rng, k % 4, &b_f, budget)?;
            let (y, yd) = random_point(&mut rng, &e_f, 8, 3, budget)?;
            if predicted_carrier(&alpha, y.action()) > 512 {
                continue;
            }
            let (x, xd) = random_point(&mut rng, &b_f, 8, 3, budget)?;
            let descriptor = format!("B={bname}{} {ad}, X={xd}, Y={yd}", describe(&b_f));
            drawn = Some((alpha, x, y, descriptor));
            break;
        }
        let (alpha, x, y, descriptor) = drawn
            .ok_or_else(|| Error::fault("could not draw a filtered instance within budget"))?;
        let mut record = Record::new(id(k), descriptor);
        verify_scf_adjunction(&alpha, &x, &y, &mut record, &mut rng, budget)?;
        report.push(record);
    }
    Ok(report)
}

fn sample_spaces() -> Result<Vec<(&'static str, FiniteTopology)>> {
    Ok(vec![
        ("point", FiniteTopology::discrete(1)),
        ("discrete2", FiniteTopology::discrete(2)),
        ("indiscrete2", FiniteTopology::indiscrete(2)),
        (
            "sierpinski",
            validate_topology(&[vec![], vec![0], vec![0, 1]], 2)?,
        ),
        ("discrete3", FiniteTopology::discrete(3)),
        ("indiscrete3", FiniteTopology::indiscrete(3)),
        (
            "chain3",
            validate_topology(&[vec![], vec![0], vec![0, 1], vec![0, 1, 2]], 3)?,
        ),
        ("Z4 mod 2", FiniteTopology::partition(4, |x| x % 2)),
        ("V4 mod first", FiniteTopology::partition(4, |x| x / 2)),
        ("discrete4", FiniteTopology::discrete(4)),
        ("indiscrete4", FiniteTopology::indiscrete(4)),
    ])
}

fn brute_continuous_count(from: &FiniteTopology, to: &FiniteTopology) -> Result<usize> {
    let opens = to.open_sets(1 << 12)?;
    let (n, m) = (from.len(), to.len());
    let mut f = vec![0; n];
    let mut count = 0;
    loop {
        let continuous = opens.iter().all(|o| {
            let mut pre = FixedBitSet::with_capacity(n);
            pre.extend((0..n).filter(|&x| o.contains(&f[x])));
            from.is_open(&pre)
        });
        count += continuous as usize;
        let Some(k) = (0..n).rev().find(|&k| f[k] + 1 < m) else {
            break;
        };
        f[k] += 1;
        f[k + 1..].iter_mut().for_each(|v| *v = 0);
    }
    Ok(count)
}

/// Currying on every in-budget triple of small spaces.
pub fn curry_suite(seed: u64, budget: &Budget) -> Result<Report> {
    let mut report = Report::new("curry", seed, budget);
    let spaces = sample_spaces()?;
    let mut k = 0;
    for (bn, b) in &spaces {
        for (xn, x) in &spaces {
            for (yn, y) in &spaces {
                if b.len() * x.len() > 6 || b.len() < 2 && x.len() < 2 {
                    continue;
                }
                let r = match curry_check(b, x, y, budget) {
                    Ok(r) => r,
                    Err(Error::BudgetExceeded { .. }) => continue,
                    Err(e) => return Err(e),
                };
                let mut record = Record::new(id(k), format!("B={bn} X={xn} Y={yn}"));
                record.count("uncurried", r.uncurried);
                record.count("curried", r.curried);
                record.check("bijection", r.bijective && r.uncurried == r.curried, || {
                    format!("{} uncurried, {} curried", r.uncurried, r.curried)
                });
                if saturating_pow(y.len(), b.len() * x.len()) <= 1 << 14 {
                    let brute = brute_continuous_count(&b.product(x), y)?;
                    record.check("uncurried-oracle", brute == r.uncurried, || {
                        format!("oracle {brute}, enumerated {}", r.uncurried)
                    });
                }
                report.push(record);
                k += 1;
            }
        }
    }
    Ok(report)
}

fn topologies_of(name: &str, group: &GroupRef, budget: &Budget) -> Result<Vec<(String, TopGroup)>> {
    let mut tops = vec![(format!("{name} discrete"), TopGroup::discrete(group))];
    if group.order() > 1 {
        tops.push((format!("{name} indiscrete"), TopGroup::indiscrete(group)));
    }
    for n in all_subgroups(group, budget)? {
        if n.is_normal() && !n.is_trivial() && !n.is_whole() {
            tops.push((
                format!("{name} mod order-{}", n.order()),
                TopGroup::from_normal_subgroup(&n)?,
            ));
        }
    }
    Ok(tops)
}

/// The topological universal property on small topological groups, with
/// non-discrete actors included.
pub fn top_suite(seed: u64, count: usize, budget: &Budget) -> Result<Report> {
    let mut report = Report::new("top-adjunction", seed, budget);
    let mut rng = Rand::seed_from_u64(seed);
    let names = ["Z2", "Z3", "Z4", "V4", "S3", "Z6"];
    let mut candidates = Vec::new();
    for bname in names {
        let b = catalog(bname).expect("catalog");
        for gname in names {
            let g = catalog(gname).expect("catalog");
            let mut actions = vec![(GroupAction::trivial(&b, &g), "trivial".to_string())];
            for psi in enumerate_homomorphisms(&b, &g, budget)? {
                let act = conjugation_through(&psi)?;
                if !act.is_trivial() && !actions.iter().any(|(a, _)| a == &act) {
                    actions.push((act, "conj through hom".into()));
                }
            }
            if b.order() == 2 {
                let whole = Filtration::constant(Subgroup::whole(&g));
                for phi in level_preserving_automorphisms(&whole, budget)? {
                    let act = cyclic_action(&phi)?;
                    if act.actor().order() == 2 {
                        let act =
                            act.pull_back(&Homomorphism::new(&b, act.actor(), vec![0, 1])?)?;
                        if !actions.iter().any(|(a, _)| a == &act) {
                            actions.push((act, "involution".into()));
                        }
                    }
                }
            }
            for (bt_name, bt) in topologies_of(bname, &b, budget)? {
                for (gt_name, gt) in topologies_of(gname, &g, budget)? {
                    for (act, an) in &actions {
                        if check_continuous_automorphisms(act, &gt).is_ok() {
                            candidates.push((
                                bt.clone(),
                                gt.clone(),
                                act.clone(),
                                format!("B={bt_name} G={gt_name} {an}"),
                            ));
                        }
                    }
                }
            }
        }
    }
    // every instance with a non-discrete actor whose action is not jointly continuous comes first
    candidates.sort_by_key(|(b, g, a, _)| {
        let interesting =
            !b.topology().is_discrete() && validate_continuous_action(a, b, g).is_err();
        !interesting
    });
    let interesting = candidates
        .iter()
        .take_while(|(b, g, a, _)| {
            !b.topology().is_discrete() && validate_continuous_action(a, b, g).is_err()
        })
        .count();
    let mut chosen: Vec<usize> = (0..interesting)
        .collect::<Vec<_>>()
        .choose_multiple(&mut rng, count / 2)
        .copied()
        .collect();
    let rest: Vec<usize> = (interesting..candidates.len()).collect();
    chosen.extend(rest.choose_multiple(&mut rng, count - chosen.len().min(count)));
    chosen.sort_unstable();
    for (k, &c) in chosen.iter().enumerate() {
        let (b, g, a, descriptor) = &candidates[c];
        let mut record = Record::new(id(k), descriptor.clone());
        verify_top_adjunction(b, g, a, &mut record, budget)?;
        report.push(record);
    }
    Ok(report)
}

/// Exhaustive homomorphism counts against the brute-force oracle.
pub fn hom_count_matches_oracle(
    source: &GroupRef,
    target: &GroupRef,
    budget: &Budget,
) -> Result<bool> {
    let lib: Vec<Vec<Elem>> = enumerate_homomorphisms(source, target, budget)?
        .into_iter()
        .map(|h| h.table().to_vec())
        .collect();
    Ok(lib == brute_force_homomorphisms(source, target, budget)?)
}

/// A certified point built from the lower central series and conjugation.
pub fn lcs_conjugation_point(group: &GroupRef) -> Result<ScfAction> {
    let lcs = lower_central_series(group);
    validate_scf_action(&GroupAction::conjugation(group), &lcs, &lcs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_alpha_on_d4_lcs() {
        let b = Budget::default();
        let d4 = catalog("D4").unwrap();
        let p = lcs_conjugation_point(&d4).unwrap();
        let mut record = Record::new("0", "id");
        let mut rng = Rand::seed_from_u64(0);
        verify_scf_adjunction(
            &Homomorphism::identity(&d4),
            &p,
            &p,
            &mut record,
            &mut rng,
            &b,
        )
        .unwrap();
        assert!(record.passed(), "{record:?}");
        assert_eq!(record.counts["left"], record.counts["right"]);
        assert!(record.counts["left"] >= 1);
    }

    #[test]
    fn trivial_y_gives_singletons() {
        let b = Budget::default();
        let d4 = catalog("D4").unwrap();
        let p = lcs_conjugation_point(&d4).unwrap();
        let one = cyclic(1);
        let y = lcs_conjugation_point(&one).unwrap();
        let y = validate_scf_action(
            &GroupAction::trivial(&d4, &one),
            p.actor_filtration(),
            y.target_filtration(),
        )
        .unwrap();
        let mut record = Record::new("0", "trivial y");
        let mut rng = Rand::seed_from_u64(0);
        verify_scf_adjunction(
            &Homomorphism::identity(&d4),
            &p,
            &y,
            &mut record,
            &mut rng,
            &b,
        )
        .unwrap();
        assert!(record.passed());
        assert_eq!((record.counts["left"], record.counts["right"]), (1, 1));
    }

    #[test]
    fn plain_adjunction_small() {
        let b = Budget::default();
        let (one, z2) = (cyclic(1), cyclic(2));
        let mut record = Record::new("0", "x");
        verify_plain_adjunction(
            &Homomorphism::trivial(&one, &z2),
            &GroupAction::trivial(&z2, &z2),
            &GroupAction::trivial(&one, &z2),
            &mut record,
            &b,
        )
        .unwrap();
        assert!(record.passed(), "{record:?}");
        // Hom(Z2, Z2) = 2 on the left
        assert_eq!(record.counts["left"], 2);
    }

    #[test]
    fn top_adjunction_trivial_actor() {
        let b = Budget::default();
        let one = TopGroup::discrete(&cyclic(1));
        let g = TopGroup::indiscrete(&catalog("S3").unwrap());
        let mut record = Record::new("0", "x");
        verify_top_adjunction(
            &one,
            &g,
            &GroupAction::trivial(one.group(), g.group()),
            &mut record,
            &b,
        )
        .unwrap();
        assert!(record.passed(), "{record:?}");
    }

    #[test]
    fn oracle_hom_counts() {
        let b = Budget::default();
        assert!(hom_count_matches_oracle(&cyclic(4), &klein_four(), &b).unwrap());
    }

    #[test]
    fn unknown_suite_is_a_usage_error() {
        assert!(matches!(
            run_suite("nope", 0, &Budget::default()),
            Err(Error::Usage(_))
        ));
    }
}
