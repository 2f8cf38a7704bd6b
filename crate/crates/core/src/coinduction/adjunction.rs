use crate::action::{
    check_filtration_preserving, restrict_action, EquivariantMorphism, FilteredAction, GroupAction,
    ScfAction,
};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::filtration::{pointwise_filtration, validate_scf, ScfCertificate};
use crate::group::{Elem, Homomorphism};

use super::maps::{equivariant_maps, EquivariantMapGroup};
use super::transport::{t_infinity, TransportTower};

/// The co-induced point `t^∞(B_*, hom_E(B, Y_*))` and how it was built.
#[derive(Clone, Debug)]
pub struct Coinduced {
    maps: EquivariantMapGroup,
    pointwise: ScfCertificate,
    tower: TransportTower,
}

impl Coinduced {
    pub fn maps(&self) -> &EquivariantMapGroup {
        &self.maps
    }

    /// The pointwise filtration of `Y_*` on the maps, before transport.
    pub fn pointwise_filtration(&self) -> &ScfCertificate {
        &self.pointwise
    }

    pub fn tower(&self) -> &TransportTower {
        &self.tower
    }

    /// The certified action of `B_*` on the limit filtration.
    pub fn point(&self) -> &ScfAction {
        self.tower.limit()
    }
}

/// Co-induction along a filtration-preserving `α: E_* → B_*`.
///
/// `y` is the point over `E_*` (its actor filtration is `E_*`).
pub fn coinduce(
    alpha: &Homomorphism,
    actor_f: &ScfCertificate,
    y: &ScfAction,
    budget: &Budget,
) -> Result<Coinduced> {
    check_filtration_preserving(alpha, y.actor_filtration(), actor_f)?;
    let maps = equivariant_maps(alpha, y.action(), budget)?;
    let pointwise = pointwise_filtration(maps.functions(), y.target_filtration())?;
    let pointwise =
        validate_scf(&pointwise).map_err(|e| Error::fault(format!("pointwise filtration: {e}")))?;
    let filtered = FilteredAction::new(maps.b_action().clone(), actor_f.clone(), pointwise.clone())
        .map_err(|e| Error::fault(format!("precomposition on maps: {e}")))?;
    let tower = t_infinity(&filtered)?;
    Ok(Coinduced {
        maps,
        pointwise,
        tower,
    })
}

/// `f̂(x) = (b ↦ f(b·x))` as a homomorphism `X → hom_E(B, Y)`.
///
/// `x_action` is the `B`-action on `X`; `f: X → Y` must be equivariant along
/// `α` (checked by the caller).
pub fn transpose_forward_plain(
    maps: &EquivariantMapGroup,
    x_action: &GroupAction,
    f: &Homomorphism,
) -> Result<Homomorphism> {
    let b_grp = maps.alpha().target();
    if x_action.actor().id() != b_grp.id() || f.source().id() != x_action.target().id() {
        return Err(Error::ParentMismatch);
    }
    let table = x_action
        .target()
        .elements()
        .map(|x| {
            let u: Vec<Elem> = b_grp
                .elements()
                .map(|b| f.apply(x_action.apply(b, x)))
                .collect();
            maps.functions()
                .lookup(&u)
                .ok_or_else(|| Error::fault("transposed value is not an equivariant map"))
        })
        .collect::<Result<Vec<_>>>()?;
    Homomorphism::new(x_action.target(), maps.carrier(), table)
        .map_err(|e| Error::fault(format!("forward transpose: {e}")))
}

/// `ǧ(x) = g(x)(1)` as a homomorphism `X → Y`.
pub fn transpose_backward_plain(
    maps: &EquivariantMapGroup,
    g: &Homomorphism,
) -> Result<Homomorphism> {
    if g.target().id() != maps.carrier().id() {
        return Err(Error::ParentMismatch);
    }
    let unit = maps.alpha().target().identity();
    let table = g
        .source()
        .elements()
        .map(|x| maps.evaluate(g.apply(x), unit))
        .collect();
    Homomorphism::new(g.source(), maps.y_action().target(), table)
        .map_err(|e| Error::fault(format!("backward transpose: {e}")))
}

/// Transpose of a morphism `α*(X_*) → Y_*` of points over `E_*` into a
/// morphism `X_* → α_!(Y_*)` of points over `B_*`.
///
/// `x` is the point over `B_*`. The result is re-verified to be a
/// `B`-equivariant, filtration-preserving homomorphism into the limit.
pub fn transpose_forward(
    co: &Coinduced,
    y: &ScfAction,
    x: &ScfAction,
    f: &EquivariantMorphism,
) -> Result<EquivariantMorphism> {
    let alpha = co.maps.alpha();
    let pulled = restrict_action(alpha, y.actor_filtration(), x)?;
    let f = EquivariantMorphism::new(f.hom().clone(), pulled.action(), y.action())?;
    check_filtration_preserving(f.hom(), x.target_filtration(), y.target_filtration())?;
    let hat = transpose_forward_plain(&co.maps, x.action(), f.hom())?;
    let limit = co.point().target_filtration();
    check_filtration_preserving(&hat, x.target_filtration(), limit)
        .map_err(|e| Error::fault(format!("forward transpose misses the limit: {e}")))?;
    EquivariantMorphism::new(hat, x.action(), co.maps.b_action())
        .map_err(|e| Error::fault(format!("forward transpose: {e}")))
}

/// Inverse of [`transpose_forward`].
pub fn transpose_backward(
    co: &Coinduced,
    y: &ScfAction,
    x: &ScfAction,
    g: &EquivariantMorphism,
) -> Result<EquivariantMorphism> {
    let g = EquivariantMorphism::new(g.hom().clone(), x.action(), co.maps.b_action())?;
    check_filtration_preserving(
        g.hom(),
        x.target_filtration(),
        co.point().target_filtration(),
    )?;
    let pulled = restrict_action(co.maps.alpha(), y.actor_filtration(), x)?;
    let check = transpose_backward_plain(&co.maps, g.hom())?;
    check_filtration_preserving(&check, x.target_filtration(), y.target_filtration())
        .map_err(|e| Error::fault(format!("backward transpose: {e}")))?;
    EquivariantMorphism::new(check, pulled.action(), y.action())
        .map_err(|e| Error::fault(format!("backward transpose: {e}")))
}
