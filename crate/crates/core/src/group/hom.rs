use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;

use super::{Elem, GroupRef, Subgroup};
use crate::budget::Budget;
use crate::error::{Error, Result};

/// A certified group homomorphism, stored as its full table.
#[derive(Clone)]
pub struct Homomorphism {
    source: GroupRef,
    target: GroupRef,
    map: Vec<Elem>,
}

impl fmt::Debug for Homomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hom{:?}", self.map)
    }
}

impl PartialEq for Homomorphism {
    fn eq(&self, other: &Self) -> bool {
        self.source.id() == other.source.id()
            && self.target.id() == other.target.id()
            && self.map == other.map
    }
}

impl Eq for Homomorphism {}

impl PartialOrd for Homomorphism {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Homomorphism {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.source.id(), self.target.id(), &self.map).cmp(&(
            other.source.id(),
            other.target.id(),
            &other.map,
        ))
    }
}

impl Homomorphism {
    pub fn new(source: &GroupRef, target: &GroupRef, map: Vec<Elem>) -> Result<Self> {
        if map.len() != source.order() {
            return Err(Error::NotHomomorphism(format!(
                "table has {} entries for a source of order {}",
                map.len(),
                source.order()
            )));
        }
        for &v in &map {
            target.check_elem(v)?;
        }
        for x in source.elements() {
            for y in source.elements() {
                if map[source.mul(x, y)] != target.mul(map[x], map[y]) {
                    return Err(Error::NotHomomorphism(format!(
                        "f({x}*{y}) != f({x})*f({y})"
                    )));
                }
            }
        }
        Ok(Self::new_unchecked(source, target, map))
    }

    pub(crate) fn new_unchecked(source: &GroupRef, target: &GroupRef, map: Vec<Elem>) -> Self {
        Self {
            source: source.clone(),
            target: target.clone(),
            map,
        }
    }

    pub fn identity(group: &GroupRef) -> Self {
        Self::new_unchecked(group, group, group.elements().collect())
    }

    pub fn trivial(source: &GroupRef, target: &GroupRef) -> Self {
        Self::new_unchecked(source, target, vec![target.identity(); source.order()])
    }

    pub fn source(&self) -> &GroupRef {
        &self.source
    }

    pub fn target(&self) -> &GroupRef {
        &self.target
    }

    pub fn table(&self) -> &[Elem] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.map[x]
    }

    /// `after ∘ self`.
    pub fn then(&self, after: &Homomorphism) -> Result<Homomorphism> {
        if self.target.id() != after.source.id() {
            return Err(Error::ParentMismatch);
        }
        let map = self.map.iter().map(|&y| after.map[y]).collect();
        Ok(Self::new_unchecked(&self.source, &after.target, map))
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_trivial()
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = FixedBitSet::with_capacity(self.target.order());
        for &y in &self.map {
            hit.insert(y);
        }
        hit.count_ones(..) == self.target.order()
    }

    pub fn kernel(&self) -> Subgroup {
        let mut bits = FixedBitSet::with_capacity(self.source.order());
        for (x, &y) in self.map.iter().enumerate() {
            if y == self.target.identity() {
                bits.insert(x);
            }
        }
        Subgroup::from_bits_unchecked(&self.source, bits)
    }

    /// `f(H)`, a subgroup of the target.
    pub fn image(&self, h: &Subgroup) -> Result<Subgroup> {
        if h.group().id() != self.source.id() {
            return Err(Error::ParentMismatch);
        }
        let mut bits = FixedBitSet::with_capacity(self.target.order());
        for x in h.members().ones() {
            bits.insert(self.map[x]);
        }
        Ok(Subgroup::from_bits_unchecked(&self.target, bits))
    }
}

/// Whether an endomorphism of `group` is bijective.
pub fn is_automorphism(group: &GroupRef, f: &Homomorphism) -> Result<bool> {
    if f.source.id() != group.id() || f.target.id() != group.id() {
        return Err(Error::ParentMismatch);
    }
    Ok(f.is_injective())
}

/// Every homomorphism `source → target`, sorted by table.
pub fn enumerate_homomorphisms(
    source: &GroupRef,
    target: &GroupRef,
    budget: &Budget,
) -> Result<Vec<Homomorphism>> {
    let tables = HomSearch::new(source, target, HomConstraints::default(), budget)?.run()?;
    Ok(tables
        .into_iter()
        .map(|t| Homomorphism::new_unchecked(source, target, t))
        .collect())
}

/// Extra conditions a searched homomorphism must satisfy.
#[derive(Clone, Debug, Default)]
pub(crate) struct HomConstraints {
    /// Pairs `(σ, ρ)` of permutations of source and target; the map must
    /// satisfy `f(σ(x)) = ρ(f(x))`. One pair per actor generator suffices.
    pub equivariance: Vec<(Vec<Elem>, Vec<Elem>)>,
    /// Admissible images of each source element.
    pub allowed: Option<Vec<FixedBitSet>>,
}

const NONE: Elem = usize::MAX;

/// Backtracking over images of a generating set; every other value is forced
/// by multiplicativity and equivariance, and conflicts prune the branch.
pub(crate) struct HomSearch<'a> {
    source: &'a GroupRef,
    target: &'a GroupRef,
    constraints: HomConstraints,
    gens: Vec<Elem>,
    node_limit: u64,
    nodes: u64,
}

impl<'a> HomSearch<'a> {
    pub fn new(
        source: &'a GroupRef,
        target: &'a GroupRef,
        constraints: HomConstraints,
        budget: &Budget,
    ) -> Result<Self> {
        Budget::check(
            "homomorphism source order",
            source.order() as u128,
            budget.hom_source_order as u128,
        )?;
        Budget::check(
            "homomorphism target order",
            target.order() as u128,
            budget.hom_target_order as u128,
        )?;
        for (sigma, rho) in &constraints.equivariance {
            if sigma.len() != source.order() || rho.len() != target.order() {
                return Err(Error::fault("equivariance constraint has wrong shape"));
            }
        }
        if let Some(allowed) = &constraints.allowed {
            if allowed.len() != source.order() {
                return Err(Error::fault("allowed-image table has wrong shape"));
            }
        }
        let gens = search_generators(source, &constraints.equivariance);
        Ok(Self {
            source,
            target,
            constraints,
            gens,
            node_limit: budget.search_nodes,
            nodes: 0,
        })
    }

    pub fn run(mut self) -> Result<Vec<Vec<Elem>>> {
        let mut f = vec![NONE; self.source.order()];
        let mut assigned = Vec::with_capacity(self.source.order());
        let mut out = Vec::new();
        if self.assign(
            self.source.identity(),
            self.target.identity(),
            &mut f,
            &mut assigned,
        ) {
            self.dfs(0, &mut f, &mut assigned, &mut out)?;
        }
        out.sort_unstable();
        Ok(out)
    }

    fn dfs(
        &mut self,
        k: usize,
        f: &mut Vec<Elem>,
        assigned: &mut Vec<Elem>,
        out: &mut Vec<Vec<Elem>>,
    ) -> Result<()> {
        if k == self.gens.len() {
            if assigned.len() != f.len() {
                return Err(Error::fault("generators did not determine the map"));
            }
            out.push(f.clone());
            return Ok(());
        }
        let g = self.gens[k];
        if f[g] != NONE {
            return self.dfs(k + 1, f, assigned, out);
        }
        let order = self.source.element_order(g);
        for y in self.target.elements() {
            if !order.is_multiple_of(self.target.element_order(y)) {
                continue;
            }
            self.nodes += 1;
            Budget::check(
                "homomorphism search nodes",
                self.nodes as u128,
                self.node_limit as u128,
            )?;
            let mark = assigned.len();
            if self.assign(g, y, f, assigned) {
                self.dfs(k + 1, f, assigned, out)?;
            }
            for &x in &assigned[mark..] {
                f[x] = NONE;
            }
            assigned.truncate(mark);
        }
        Ok(())
    }

    fn assign(&self, x: Elem, y: Elem, f: &mut [Elem], assigned: &mut Vec<Elem>) -> bool {
        let (s, t) = (self.source, self.target);
        let mut queue = vec![(x, y)];
        while let Some((x, y)) = queue.pop() {
            if f[x] != NONE {
                if f[x] != y {
                    return false;
                }
                continue;
            }
            if let Some(allowed) = &self.constraints.allowed {
                if !allowed[x].contains(y) {
                    return false;
                }
            }
            f[x] = y;
            assigned.push(x);
            for (sigma, rho) in &self.constraints.equivariance {
                queue.push((sigma[x], rho[y]));
            }
            for &z in assigned.iter() {
                let fz = f[z];
                queue.push((s.mul(x, z), t.mul(y, fz)));
                queue.push((s.mul(z, x), t.mul(fz, y)));
            }
        }
        true
    }
}

/// Generators of `source` as a group with operators: greedy in index order,
/// closing under products and the given automorphisms.
fn search_generators(source: &GroupRef, sigmas: &[(Vec<Elem>, Vec<Elem>)]) -> Vec<Elem> {
    let n = source.order();
    let mut closed = FixedBitSet::with_capacity(n);
    closed.insert(source.identity());
    let mut members = vec![source.identity()];
    let mut multipliers: Vec<Elem> = Vec::new();
    let mut gens = Vec::new();
    for x in 0..n {
        if closed.contains(x) {
            continue;
        }
        gens.push(x);
        // orbit of x under the operator group
        let mut orbit = FixedBitSet::with_capacity(n);
        orbit.insert(x);
        let mut stack = vec![x];
        while let Some(y) = stack.pop() {
            for (sigma, _) in sigmas {
                let z = sigma[y];
                if !orbit.contains(z) {
                    orbit.insert(z);
                    stack.push(z);
                }
            }
        }
        multipliers.extend(orbit.ones());
        let mut queue = members.clone();
        while let Some(y) = queue.pop() {
            for &m in &multipliers {
                let p = source.mul(y, m);
                if !closed.contains(p) {
                    closed.insert(p);
                    members.push(p);
                    queue.push(p);
                }
            }
        }
    }
    gens
}
