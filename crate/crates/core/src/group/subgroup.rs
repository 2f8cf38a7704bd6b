use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;

use super::{Elem, GroupRef};
use crate::budget::Budget;
use crate::error::{Error, Result};

/// A subgroup, stored as a membership bitset over the parent's elements.
#[derive(Clone)]
pub struct Subgroup {
    group: GroupRef,
    members: FixedBitSet,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup{:?}", self.elements())
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.group.id() == other.group.id() && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.group.id().hash(state);
        self.members.hash(state);
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Larger subgroups first, then lexicographic on sorted members.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.group
            .id()
            .cmp(&other.group.id())
            .then_with(|| other.order().cmp(&self.order()))
            .then_with(|| self.members.ones().cmp(other.members.ones()))
    }
}

impl Subgroup {
    pub fn trivial(group: &GroupRef) -> Self {
        let mut members = FixedBitSet::with_capacity(group.order());
        members.insert(group.identity());
        Self {
            group: group.clone(),
            members,
        }
    }

    pub fn whole(group: &GroupRef) -> Self {
        let mut members = FixedBitSet::with_capacity(group.order());
        members.insert_range(..);
        Self {
            group: group.clone(),
            members,
        }
    }

    /// Checks that the given elements form a subgroup.
    pub fn from_elements(
        group: &GroupRef,
        elements: impl IntoIterator<Item = Elem>,
    ) -> Result<Self> {
        let mut members = FixedBitSet::with_capacity(group.order());
        for g in elements {
            members.insert(group.check_elem(g)?);
        }
        Self::from_bits(group, members)
    }

    pub(crate) fn from_bits(group: &GroupRef, members: FixedBitSet) -> Result<Self> {
        if !members.contains(group.identity()) {
            return Err(Error::NotSubgroup("identity missing".into()));
        }
        for a in members.ones() {
            if !members.contains(group.inv(a)) {
                return Err(Error::NotSubgroup(format!("inverse of {a} missing")));
            }
            for b in members.ones() {
                if !members.contains(group.mul(a, b)) {
                    return Err(Error::NotSubgroup(format!("product {a}*{b} missing")));
                }
            }
        }
        Ok(Self {
            group: group.clone(),
            members,
        })
    }

    pub(crate) fn from_bits_unchecked(group: &GroupRef, members: FixedBitSet) -> Self {
        debug_assert!(members.contains(group.identity()));
        Self {
            group: group.clone(),
            members,
        }
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn elements(&self) -> Vec<Elem> {
        self.members.ones().collect()
    }

    pub fn order(&self) -> usize {
        self.members.count_ones(..)
    }

    #[inline]
    pub fn contains(&self, g: Elem) -> bool {
        self.members.contains(g)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.group.order()
    }

    pub fn is_subset(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn same_parent(&self, other: &Subgroup) -> Result<()> {
        if self.group.id() == other.group.id() {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    pub fn intersection(&self, other: &Subgroup) -> Result<Subgroup> {
        self.same_parent(other)?;
        let mut members = self.members.clone();
        members.intersect_with(&other.members);
        Ok(Self::from_bits_unchecked(&self.group, members))
    }

    /// `g H g⁻¹ = H` for all `g`.
    pub fn is_normal(&self) -> bool {
        self.group.generators().iter().all(|&g| {
            self.members
                .ones()
                .all(|h| self.members.contains(self.group.conjugate(g, h)))
        })
    }
}

/// Smallest subgroup containing `seed`.
pub fn generate_subgroup(group: &GroupRef, seed: &[Elem]) -> Result<Subgroup> {
    for &g in seed {
        group.check_elem(g)?;
    }
    Ok(close(group, seed))
}

pub(crate) fn close(group: &GroupRef, seed: &[Elem]) -> Subgroup {
    let mut members = FixedBitSet::with_capacity(group.order());
    members.insert(group.identity());
    let mut gens: Vec<Elem> = seed.to_vec();
    gens.sort_unstable();
    gens.dedup();
    let mut queue = vec![group.identity()];
    while let Some(x) = queue.pop() {
        for &s in &gens {
            let p = group.mul(x, s);
            if !members.contains(p) {
                members.insert(p);
                queue.push(p);
            }
        }
    }
    Subgroup {
        group: group.clone(),
        members,
    }
}

/// Subgroup generated by all `[a, b]`, `a ∈ a_sub`, `b ∈ b_sub`.
pub fn commutator_subgroup(a_sub: &Subgroup, b_sub: &Subgroup) -> Result<Subgroup> {
    a_sub.same_parent(b_sub)?;
    let g = a_sub.group();
    let mut seed = BTreeSet::new();
    for a in a_sub.members.ones() {
        for b in b_sub.members.ones() {
            seed.insert(g.commutator(a, b));
        }
    }
    let seed: Vec<Elem> = seed.into_iter().collect();
    Ok(close(g, &seed))
}

/// Smallest normal subgroup containing `seed`.
pub fn normal_closure(group: &GroupRef, seed: &[Elem]) -> Result<Subgroup> {
    let mut conjugates = BTreeSet::new();
    for &s in seed {
        group.check_elem(s)?;
        for g in group.elements() {
            conjugates.insert(group.conjugate(g, s));
        }
    }
    let seed: Vec<Elem> = conjugates.into_iter().collect();
    Ok(close(group, &seed))
}

/// Every subgroup of `group`, in canonical order (see [`Subgroup`]'s `Ord`).
pub fn all_subgroups(group: &GroupRef, budget: &Budget) -> Result<Vec<Subgroup>> {
    budget.check_group(group.order())?;
    let mut found: BTreeSet<Subgroup> = BTreeSet::new();
    let cyclic: BTreeSet<Subgroup> = group.elements().map(|g| close(group, &[g])).collect();
    let mut frontier: Vec<Subgroup> = cyclic.iter().cloned().collect();
    found.extend(cyclic.iter().cloned());
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for h in &frontier {
            for c in &cyclic {
                if c.is_subset(h) {
                    continue;
                }
                let mut seed = h.elements();
                seed.extend(c.elements());
                let joined = close(group, &seed);
                if found.insert(joined.clone()) {
                    next.push(joined);
                }
            }
        }
        frontier = next;
    }
    Ok(found.into_iter().collect())
}
