//! Fixtures shared by the benchmarks.

use coind_core::action::{validate_scf_action, FilteredAction, GroupAction, ScfAction};
use coind_core::filtration::{lower_central_series, validate_scf, Filtration, ScfCertificate};
use coind_core::group::{catalog, cyclic, GroupRef, Homomorphism, Subgroup};

pub fn group(name: &str) -> GroupRef {
    catalog(name).expect("catalog name")
}

pub fn constant(g: &GroupRef) -> ScfCertificate {
    validate_scf(&Filtration::constant(Subgroup::whole(g)))
        .expect("constant filtrations are strongly central")
}

/// Conjugation of `name` on itself along its lower central series.
pub fn lcs_conjugation(name: &str) -> ScfAction {
    let g = group(name);
    let lcs = lower_central_series(&g);
    validate_scf_action(&GroupAction::conjugation(&g), &lcs, &lcs)
        .expect("conjugation respects the lcs")
}

/// `Z_2` swapping the two `V_4` factors of `Z_2^4`, on the chain
/// `[Z_2^4, diagonal, 1]` with `Z_2` at every level: the first transport
/// step cuts level 1 down to the diagonal.
pub fn swap_on_z2_4() -> FilteredAction {
    let g = group("Z2^4");
    let z2 = cyclic(2);
    let swap = GroupAction::from_fn(&z2, &g, |b, x| if b == 0 { x } else { (x % 4) * 4 + x / 4 })
        .expect("factor swap is an automorphism");
    let diagonal = Subgroup::from_elements(&g, (0..4).map(|a| a * 5)).expect("diagonal");
    let chain =
        Filtration::new(vec![Subgroup::whole(&g), diagonal, Subgroup::trivial(&g)]).expect("chain");
    let g_f = validate_scf(&chain).expect("abelian chains are strongly central");
    FilteredAction::new(swap, constant(&z2), g_f).expect("levels are swap-stable")
}

/// `α: Z_1 → B`, for the largest carriers.
pub fn trivial_alpha(b: &GroupRef) -> Homomorphism {
    Homomorphism::trivial(&cyclic(1), b)
}
