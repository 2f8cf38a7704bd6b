use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use coind_bench::{constant, group, lcs_conjugation, swap_on_z2_4, trivial_alpha};
use coind_core::action::GroupAction;
use coind_core::coinduction::{
    coinduce, equivariant_maps_exhaustive, equivariant_maps_transversal, t_infinity,
};
use coind_core::filtration::lower_central_series;
use coind_core::group::{all_subgroups, cyclic, enumerate_homomorphisms, Homomorphism};
use coind_core::topology::{t_top_infinity, TopGroup};
use coind_core::Budget;

fn groups(c: &mut Criterion) {
    let budget = Budget::default();
    let mut g = c.benchmark_group("groups");
    for name in ["D4", "Q8", "D8", "Z2xD4"] {
        let grp = group(name);
        g.bench_with_input(
            BenchmarkId::new("lower_central_series", name),
            &grp,
            |b, grp| b.iter(|| lower_central_series(grp)),
        );
        g.bench_with_input(BenchmarkId::new("all_subgroups", name), &grp, |b, grp| {
            b.iter(|| all_subgroups(grp, &budget).unwrap())
        });
    }
    for (s, t) in [("D4", "D4"), ("Q8", "Z2^4"), ("Z2^3", "S4")] {
        let (sg, tg) = (group(s), group(t));
        let wide = Budget {
            hom_source_order: 8,
            ..budget
        };
        g.bench_function(
            BenchmarkId::new("homomorphisms", format!("{s}->{t}")),
            |b| b.iter(|| enumerate_homomorphisms(&sg, &tg, &wide).unwrap()),
        );
    }
    g.finish();
}

fn transport(c: &mut Criterion) {
    let mut g = c.benchmark_group("transport");
    let swap = swap_on_z2_4();
    g.bench_function("t_infinity/swap Z2^4", |b| {
        b.iter(|| t_infinity(&swap).unwrap())
    });
    let d4 = lcs_conjugation("D4");
    g.bench_function("t_infinity/certified D4", |b| {
        b.iter(|| t_infinity(&d4).unwrap())
    });
    g.finish();
}

fn maps(c: &mut Criterion) {
    let budget = Budget::default();
    let mut g = c.benchmark_group("equivariant_maps");
    // trivial source: every one of the 256 maps Z4 → Z4, built both ways
    let z4 = cyclic(4);
    let alpha = trivial_alpha(&z4);
    let y = GroupAction::trivial(alpha.source(), &z4);
    g.bench_function("exhaustive/Z1->Z4 into Z4", |b| {
        b.iter(|| equivariant_maps_exhaustive(&alpha, &y, &budget).unwrap())
    });
    g.bench_function("transversal/Z1->Z4 into Z4", |b| {
        b.iter(|| equivariant_maps_transversal(&alpha, &y, &budget).unwrap())
    });
    let d4 = group("D4");
    let id = Homomorphism::identity(&d4);
    let conj = GroupAction::conjugation(&d4);
    g.bench_function("transversal/id D4 conj", |b| {
        b.iter(|| equivariant_maps_transversal(&id, &conj, &budget).unwrap())
    });
    let x = lcs_conjugation("D4");
    g.bench_function("coinduce/id D4 lcs", |b| {
        b.iter(|| coinduce(&id, x.actor_filtration(), &x, &budget).unwrap())
    });
    let z2 = cyclic(2);
    let y2 = coind_core::action::validate_scf_action(
        &GroupAction::trivial(&cyclic(1), &z2),
        &constant(&cyclic(1)),
        &constant(&z2),
    )
    .unwrap();
    let into_d4 = trivial_alpha(&d4);
    let d4_f = lower_central_series(&d4);
    g.bench_function("coinduce/Z1->D4 into Z2", |b| {
        b.iter(|| coinduce(&into_d4, &d4_f, &y2, &budget).unwrap())
    });
    g.finish();
}

fn topology(c: &mut Criterion) {
    let mut g = c.benchmark_group("topology");
    let s3 = group("S3");
    let b_ind = TopGroup::indiscrete(&cyclic(2));
    let psi = Homomorphism::new(&cyclic(2), &s3, vec![0, 1]).unwrap();
    let act = GroupAction::conjugation(&s3).pull_back(&psi).unwrap();
    let g_disc = TopGroup::discrete(&s3);
    g.bench_function("t_top_infinity/Z2 indiscrete on S3", |b| {
        b.iter(|| t_top_infinity(&b_ind, &g_disc, &act).unwrap())
    });
    g.finish();
}

criterion_group!(benches, groups, transport, maps, topology);
criterion_main!(benches);
