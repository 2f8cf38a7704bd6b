use fixedbitset::FixedBitSet;

use crate::action::GroupAction;
use crate::budget::Budget;
use crate::error::{Error, Result, TopologyViolation};
use crate::group::{Elem, FunctionGroup, GroupRef, Subgroup};

use super::space::{compact_open, continuous_maps, FiniteTopology};

/// A finite group with a topology making multiplication and inversion continuous.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopGroup {
    group: GroupRef,
    topology: FiniteTopology,
}

fn violation(operation: &str, open: &FixedBitSet, at: Vec<Elem>) -> Error {
    Error::NotTopGroup(TopologyViolation::Discontinuous {
        operation: operation.to_string(),
        open: open.ones().collect(),
        at,
    })
}

/// Checks inversion (`U_a⁻¹ ⊆ U_{a⁻¹}`), then multiplication
/// (`U_a U_b ⊆ U_{ab}`), then cross-checks that `U_1` is a normal subgroup
/// whose cosets are the neighbourhoods.
pub fn validate_topgroup(group: &GroupRef, topology: &FiniteTopology) -> Result<TopGroup> {
    if topology.len() != group.order() {
        return Err(Error::NotTopGroup(TopologyViolation::Malformed(format!(
            "topology on {} points for a group of order {}",
            topology.len(),
            group.order()
        ))));
    }
    for a in group.elements() {
        let target = topology.neighbourhood(group.inv(a));
        if topology
            .neighbourhood(a)
            .ones()
            .any(|x| !target.contains(group.inv(x)))
        {
            return Err(violation("inversion", target, vec![a]));
        }
    }
    for a in group.elements() {
        for b in group.elements() {
            let target = topology.neighbourhood(group.mul(a, b));
            let (ua, ub) = (topology.neighbourhood(a), topology.neighbourhood(b));
            if ua
                .ones()
                .any(|x| ub.ones().any(|y| !target.contains(group.mul(x, y))))
            {
                return Err(violation("multiplication", target, vec![a, b]));
            }
        }
    }
    let kernel =
        Subgroup::from_bits_unchecked(group, topology.neighbourhood(group.identity()).clone());
    let coset_form = crate::group::generate_subgroup(group, &kernel.elements())
        .map(|closed| closed == kernel && kernel.is_normal())
        .unwrap_or(false)
        && group.elements().all(|g| {
            let coset: FixedBitSet = kernel.members().ones().map(|n| group.mul(g, n)).collect();
            let mut coset_sized = FixedBitSet::with_capacity(group.order());
            coset_sized.union_with(&coset);
            &coset_sized == topology.neighbourhood(g)
        });
    if !coset_form {
        return Err(Error::fault(
            "continuous group operations without coset neighbourhoods",
        ));
    }
    Ok(TopGroup {
        group: group.clone(),
        topology: topology.clone(),
    })
}

impl TopGroup {
    pub fn discrete(group: &GroupRef) -> Self {
        Self {
            group: group.clone(),
            topology: FiniteTopology::discrete(group.order()),
        }
    }

    pub fn indiscrete(group: &GroupRef) -> Self {
        Self {
            group: group.clone(),
            topology: FiniteTopology::indiscrete(group.order()),
        }
    }

    /// Opens are unions of cosets of a normal subgroup.
    pub fn from_normal_subgroup(n: &Subgroup) -> Result<Self> {
        let group = n.group();
        if !n.is_normal() {
            return Err(Error::NotSubgroup(
                "neighbourhood subgroup must be normal".into(),
            ));
        }
        let nbhd = group
            .elements()
            .map(|g| n.members().ones().map(|x| group.mul(g, x)).collect())
            .collect();
        validate_topgroup(group, &FiniteTopology::from_neighbourhoods(nbhd)?)
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn topology(&self) -> &FiniteTopology {
        &self.topology
    }

    /// The minimal open neighbourhood of the identity, a normal subgroup.
    pub fn identity_neighbourhood(&self) -> Subgroup {
        Subgroup::from_bits_unchecked(
            &self.group,
            self.topology.neighbourhood(self.group.identity()).clone(),
        )
    }
}

/// An action `B × G → G` continuous for the product topology.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuousAction {
    actor: TopGroup,
    target: TopGroup,
    action: GroupAction,
}

impl ContinuousAction {
    pub fn actor(&self) -> &TopGroup {
        &self.actor
    }

    pub fn target(&self) -> &TopGroup {
        &self.target
    }

    pub fn action(&self) -> &GroupAction {
        &self.action
    }
}

fn check_parents(action: &GroupAction, b: &TopGroup, g: &TopGroup) -> Result<()> {
    if action.actor().id() != b.group.id() || action.target().id() != g.group.id() {
        return Err(Error::ParentMismatch);
    }
    Ok(())
}

/// Each `g ↦ b·g` is continuous: `b·U_g ⊆ U_{b·g}`.
pub fn check_continuous_automorphisms(action: &GroupAction, g: &TopGroup) -> Result<()> {
    if action.target().id() != g.group.id() {
        return Err(Error::ParentMismatch);
    }
    let t = &g.topology;
    for b in action.actor().elements() {
        t.check_continuous(
            t,
            action.permutation(b),
            &format!("action of {}", action.actor().name(b)),
        )?;
    }
    Ok(())
}

/// Joint continuity: `U_b · U_g ⊆ U_{b·g}`.
pub fn validate_continuous_action(
    action: &GroupAction,
    b: &TopGroup,
    g: &TopGroup,
) -> Result<ContinuousAction> {
    check_parents(action, b, g)?;
    let (tb, tg) = (&b.topology, &g.topology);
    for x in b.group.elements() {
        for y in g.group.elements() {
            let target = tg.neighbourhood(action.apply(x, y));
            let bad = tb.neighbourhood(x).ones().any(|x2| {
                tg.neighbourhood(y)
                    .ones()
                    .any(|y2| !target.contains(action.apply(x2, y2)))
            });
            if bad {
                return Err(Error::NotContinuous(TopologyViolation::Discontinuous {
                    operation: "action".into(),
                    open: target.ones().collect(),
                    at: vec![x, y],
                }));
            }
        }
    }
    Ok(ContinuousAction {
        actor: b.clone(),
        target: g.clone(),
        action: action.clone(),
    })
}

/// `C(B, Y)`: continuous maps under pointwise product, compact-open topology,
/// certified as a topological group.
pub fn continuous_maps_group(
    b: &TopGroup,
    y: &TopGroup,
    budget: &Budget,
) -> Result<(FunctionGroup, TopGroup)> {
    let maps = continuous_maps(&b.topology, &y.topology, budget)?;
    let functions = FunctionGroup::pointwise(b.group.order(), &y.group, maps, budget)?;
    let topology = compact_open(&y.topology, functions.maps());
    let top = validate_topgroup(functions.group(), &topology)
        .map_err(|e| Error::fault(format!("compact-open function group: {e}")))?;
    Ok((functions, top))
}

/// One level of the topological tower: a `B`-stable subgroup of the original
/// group, the same subgroup as a standalone topological group, and the action on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopLevel {
    pub subgroup: Subgroup,
    pub group: TopGroup,
    /// `embedding[k]` is the original element at standalone index `k`.
    pub embedding: Vec<Elem>,
    pub action: GroupAction,
}

impl TopLevel {
    pub fn root(action: &GroupAction, g: &TopGroup) -> Self {
        Self {
            subgroup: Subgroup::whole(&g.group),
            group: g.clone(),
            embedding: g.group.elements().collect(),
            action: action.clone(),
        }
    }

    /// Neighbourhoods expressed in original element indices.
    pub fn neighbourhoods_in_parent(&self) -> Vec<Vec<Elem>> {
        self.group
            .topology
            .neighbourhoods()
            .into_iter()
            .map(|u| u.into_iter().map(|k| self.embedding[k]).collect())
            .collect()
    }
}

/// `G_1 = {g : b ↦ b·g is continuous}` with the initial topology along
/// `g ↦ (b ↦ b·g)` into the compact-open space `C(B, G)`:
/// `U¹_h = {h' ∈ G_1 : b·h' ∈ U_{b·h} for all b}`.
///
/// The output is re-verified: `G_1` is a `B`-stable subgroup, `τ_1` is finer
/// than the subspace topology, `(G_1, τ_1)` is a topological group and `B`
/// acts on it by continuous automorphisms.
pub fn t_top_step(b: &TopGroup, level: &TopLevel) -> Result<TopLevel> {
    let (action, g) = (&level.action, &level.group);
    check_parents(action, b, g)?;
    check_continuous_automorphisms(action, g)?;
    let (tb, tg) = (&b.topology, &g.topology);
    let orbit_continuous = |h: Elem| {
        b.group.elements().all(|x| {
            let target = tg.neighbourhood(action.apply(x, h));
            tb.neighbourhood(x)
                .ones()
                .all(|x2| target.contains(action.apply(x2, h)))
        })
    };
    let members: Vec<Elem> = g
        .group
        .elements()
        .filter(|&h| orbit_continuous(h))
        .collect();
    let sub = Subgroup::from_elements(&g.group, members.iter().copied())
        .map_err(|e| Error::fault(format!("continuity locus is not a subgroup: {e}")))?;
    let (next_action, emb) = action
        .restrict_target(&sub)
        .map_err(|e| Error::fault(format!("continuity locus is not stable: {e}")))?;
    let nbhd: Vec<Vec<Elem>> = emb
        .iter()
        .map(|&h| {
            (0..emb.len())
                .filter(|&k| {
                    b.group.elements().all(|x| {
                        tg.neighbourhood(action.apply(x, h))
                            .contains(action.apply(x, emb[k]))
                    })
                })
                .collect()
        })
        .collect();
    let topology = FiniteTopology::from_neighbourhoods(nbhd)
        .map_err(|e| Error::fault(format!("initial topology: {e}")))?;
    if !topology.is_finer_than(&tg.subspace(&emb)) {
        return Err(Error::fault(
            "initial topology is coarser than the subspace topology",
        ));
    }
    let group = validate_topgroup(next_action.target(), &topology)
        .map_err(|e| Error::fault(format!("initial topology: {e}")))?;
    check_continuous_automorphisms(&next_action, &group)
        .map_err(|e| Error::fault(format!("action on the continuity locus: {e}")))?;
    let original: Vec<Elem> = emb.iter().map(|&k| level.embedding[k]).collect();
    let subgroup = Subgroup::from_elements(level.subgroup.group(), original.iter().copied())?;
    Ok(TopLevel {
        subgroup,
        group,
        embedding: original,
        action: next_action,
    })
}

/// The stages `(G_l, τ_l)` up to the first repetition and the limit with its
/// jointly continuous action.
#[derive(Clone, Debug)]
pub struct TopTower {
    levels: Vec<TopLevel>,
    limit: ContinuousAction,
    limit_embedding: Vec<Elem>,
}

impl TopTower {
    pub fn levels(&self) -> &[TopLevel] {
        &self.levels
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn iterations(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn limit(&self) -> &ContinuousAction {
        &self.limit
    }

    /// Original element at each index of the limit group.
    pub fn limit_embedding(&self) -> &[Elem] {
        &self.limit_embedding
    }

    pub fn limit_subgroup(&self) -> &Subgroup {
        &self.levels[self.levels.len() - 1].subgroup
    }
}

/// Iterates [`t_top_step`] until both the subgroup and the topology repeat.
/// The limit carries the topology generated by all restricted `τ_l` and is
/// verified to carry a jointly continuous action.
pub fn t_top_infinity(b: &TopGroup, g: &TopGroup, action: &GroupAction) -> Result<TopTower> {
    check_parents(action, b, g)?;
    let mut levels = vec![TopLevel::root(action, g)];
    loop {
        let current = levels.last().expect("tower is never empty");
        let next = t_top_step(b, current)?;
        if next.subgroup == current.subgroup && next.group.topology == current.group.topology {
            break;
        }
        levels.push(next);
    }
    let last = levels.last().expect("tower is never empty");
    let points = &last.embedding;
    let mut topology = FiniteTopology::indiscrete(points.len());
    for level in &levels {
        let position: Vec<Elem> = points
            .iter()
            .map(|p| level.embedding.binary_search(p).expect("levels descend"))
            .collect();
        topology = topology.join(&level.group.topology.subspace(&position))?;
    }
    let limit_group = validate_topgroup(last.group.group(), &topology)
        .map_err(|e| Error::fault(format!("limit topology: {e}")))?;
    let limit = validate_continuous_action(&last.action, b, &limit_group)
        .map_err(|e| Error::fault(format!("limit action is not jointly continuous: {e}")))?;
    let limit_embedding = last.embedding.clone();
    Ok(TopTower {
        levels,
        limit,
        limit_embedding,
    })
}
