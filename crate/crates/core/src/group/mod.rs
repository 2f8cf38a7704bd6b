//! Finite groups given by their full multiplication table.
//!
//! Elements are dense indices `0..order`. Every [`FiniteGroup`] in
//! circulation has been certified by [`validate_group`]; the other types in
//! this module borrow that guarantee through a shared [`GroupRef`].

mod catalog;
mod function;
mod hom;
mod subgroup;

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, GroupViolation, Result};

pub use catalog::{
    alternating, catalog, catalog_names, cyclic, dihedral, direct_product, klein_four, quaternion,
    symmetric,
};
pub use function::FunctionGroup;
pub use hom::{enumerate_homomorphisms, is_automorphism, Homomorphism};
pub(crate) use hom::{HomConstraints, HomSearch};
pub use subgroup::{
    all_subgroups, commutator_subgroup, generate_subgroup, normal_closure, Subgroup,
};

pub type Elem = usize;
pub type GroupRef = Arc<FiniteGroup>;

/// A group table as it appears in input files, before certification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawGroup {
    pub order: usize,
    pub names: Vec<String>,
    pub mul: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identity: Option<usize>,
}

#[derive(Clone)]
pub struct FiniteGroup {
    id: u64,
    names: Vec<String>,
    mul: Vec<Elem>,
    identity: Elem,
    inv: Vec<Elem>,
    generators: Vec<Elem>,
    element_orders: Vec<usize>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order())
            .field("id", &format_args!("{:016x}", self.id))
            .finish()
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id && self.mul == other.mul && self.identity == other.identity
    }
}

impl Eq for FiniteGroup {}

impl std::hash::Hash for FiniteGroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.id.hash(state);
    }
}

/// Certifies a raw table: shape, associativity, identity, inverses, in that order.
pub fn validate_group(raw: &RawGroup) -> Result<GroupRef> {
    let n = raw.order;
    if n == 0 {
        return Err(Error::InvalidGroup(GroupViolation::Empty));
    }
    if raw.names.len() != n {
        return Err(malformed(format!(
            "{} names for order {n}",
            raw.names.len()
        )));
    }
    if raw.mul.len() != n {
        return Err(malformed(format!("{} rows for order {n}", raw.mul.len())));
    }
    let mut mul = Vec::with_capacity(n * n);
    for (r, row) in raw.mul.iter().enumerate() {
        if row.len() != n {
            return Err(malformed(format!("row {r} has {} entries", row.len())));
        }
        for (c, &v) in row.iter().enumerate() {
            if v >= n {
                return Err(malformed(format!("entry ({r}, {c}) = {v} out of range")));
            }
        }
        mul.extend_from_slice(row);
    }
    let identity = match raw.identity {
        Some(e) if e >= n => return Err(malformed(format!("identity {e} out of range"))),
        Some(e) => e,
        None => raw.names.iter().position(|s| s == "1").unwrap_or(0),
    };
    FiniteGroup::certify(raw.names.clone(), mul, identity).map(Arc::new)
}

fn malformed(msg: String) -> Error {
    Error::InvalidGroup(GroupViolation::Malformed(msg))
}

impl FiniteGroup {
    /// Builds and certifies a group from a product function on `0..names.len()`.
    pub fn from_fn(
        names: Vec<String>,
        identity: Elem,
        f: impl Fn(Elem, Elem) -> Elem,
    ) -> Result<GroupRef> {
        let n = names.len();
        let mut mul = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let v = f(a, b);
                if v >= n {
                    return Err(malformed(format!("product ({a}, {b}) = {v} out of range")));
                }
                mul.push(v);
            }
        }
        if identity >= n.max(1) {
            return Err(malformed(format!("identity {identity} out of range")));
        }
        Self::certify(names, mul, identity).map(Arc::new)
    }

    fn certify(names: Vec<String>, mul: Vec<Elem>, identity: Elem) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::InvalidGroup(GroupViolation::Empty));
        }
        check_associative(n, &mul)?;
        for g in 0..n {
            if mul[identity * n + g] != g || mul[g * n + identity] != g {
                return Err(Error::InvalidGroup(GroupViolation::NoIdentity {
                    claimed: identity,
                    witness: g,
                }));
            }
        }
        let mut inv = vec![0; n];
        for g in 0..n {
            match (0..n).find(|&h| mul[g * n + h] == identity && mul[h * n + g] == identity) {
                Some(h) => inv[g] = h,
                None => {
                    return Err(Error::InvalidGroup(GroupViolation::NoInverse {
                        element: g,
                    }))
                }
            }
        }
        let mut hasher = DefaultHasher::new();
        n.hash(&mut hasher);
        mul.hash(&mut hasher);
        identity.hash(&mut hasher);
        let id = hasher.finish();

        let element_orders = (0..n)
            .map(|g| {
                let mut k = 1;
                let mut x = g;
                while x != identity {
                    x = mul[x * n + g];
                    k += 1;
                }
                k
            })
            .collect();
        let generators = greedy_generators(n, &mul, identity);
        Ok(Self {
            id,
            names,
            mul,
            identity,
            inv,
            generators,
            element_orders,
        })
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order()
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    pub fn name(&self, g: Elem) -> &str {
        &self.names[g]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Index of the element with the given display name.
    pub fn find(&self, name: &str) -> Option<Elem> {
        self.names.iter().position(|s| s == name)
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.order() + b]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a]
    }

    /// `x y x⁻¹ y⁻¹`.
    #[inline]
    pub fn commutator(&self, x: Elem, y: Elem) -> Elem {
        let xy = self.mul(x, y);
        self.mul(self.mul(xy, self.inv(x)), self.inv(y))
    }

    /// `g x g⁻¹`.
    #[inline]
    pub fn conjugate(&self, g: Elem, x: Elem) -> Elem {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn element_order(&self, g: Elem) -> usize {
        self.element_orders[g]
    }

    /// A small generating set, chosen greedily in index order.
    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().all(|&a| {
            self.generators
                .iter()
                .all(|&b| self.mul(a, b) == self.mul(b, a))
        })
    }

    pub fn check_elem(&self, g: Elem) -> Result<Elem> {
        if g < self.order() {
            Ok(g)
        } else {
            Err(Error::OutOfRange {
                index: g,
                order: self.order(),
            })
        }
    }

    pub fn to_raw(&self) -> RawGroup {
        let n = self.order();
        RawGroup {
            order: n,
            names: self.names.clone(),
            mul: self.mul.chunks(n).map(|r| r.to_vec()).collect(),
            identity: Some(self.identity),
        }
    }

    /// The subgroup `h` as a group in its own right, elements in increasing
    /// parent index; returns the group and its embedding into `self`.
    pub fn restrict(&self, h: &Subgroup) -> Result<(GroupRef, Vec<Elem>)> {
        if h.group().id() != self.id {
            return Err(Error::ParentMismatch);
        }
        let embedding: Vec<Elem> = h.elements();
        let mut position = vec![usize::MAX; self.order()];
        for (i, &g) in embedding.iter().enumerate() {
            position[g] = i;
        }
        let names = embedding.iter().map(|&g| self.names[g].clone()).collect();
        let group = Self::from_fn(names, position[self.identity], |a, b| {
            position[self.mul(embedding[a], embedding[b])]
        })?;
        Ok((group, embedding))
    }
}

/// Light's associativity test: the elements `g` with `(xg)y = x(gy)` for all
/// `x, y` form a submagma, so checking a magma generating set suffices.
fn check_associative(n: usize, mul: &[Elem]) -> Result<()> {
    let at = |a: Elem, b: Elem| mul[a * n + b];
    for g in magma_generators(n, mul) {
        for x in 0..n {
            let xg = at(x, g);
            for y in 0..n {
                if at(xg, y) != at(x, at(g, y)) {
                    return Err(Error::InvalidGroup(GroupViolation::NotAssociative {
                        a: x,
                        b: g,
                        c: y,
                    }));
                }
            }
        }
    }
    Ok(())
}

fn magma_generators(n: usize, mul: &[Elem]) -> Vec<Elem> {
    let mut closed = FixedBitSet::with_capacity(n);
    let mut members: Vec<Elem> = Vec::new();
    let mut gens = Vec::new();
    for x in 0..n {
        if closed.contains(x) {
            continue;
        }
        gens.push(x);
        let mut queue = vec![x];
        closed.insert(x);
        while let Some(y) = queue.pop() {
            members.push(y);
            for &z in &members {
                for p in [mul[y * n + z], mul[z * n + y]] {
                    if !closed.contains(p) {
                        closed.insert(p);
                        queue.push(p);
                    }
                }
            }
        }
    }
    gens
}

fn greedy_generators(n: usize, mul: &[Elem], identity: Elem) -> Vec<Elem> {
    let mut closed = FixedBitSet::with_capacity(n);
    closed.insert(identity);
    let mut members = vec![identity];
    let mut gens = Vec::new();
    for x in 0..n {
        if closed.contains(x) {
            continue;
        }
        gens.push(x);
        // Re-close under right multiplication by every generator so far.
        let mut queue: Vec<Elem> = members.clone();
        while let Some(y) = queue.pop() {
            for &s in &gens {
                let p = mul[y * n + s];
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

#[cfg(test)]
mod tests {
    use super::*;

    fn z4_raw() -> RawGroup {
        RawGroup {
            order: 4,
            names: (0..4).map(|i| i.to_string()).collect(),
            mul: (0..4)
                .map(|a| (0..4).map(|b| (a + b) % 4).collect())
                .collect(),
            identity: Some(0),
        }
    }

    #[test]
    fn trivial_group_certifies() {
        let raw = RawGroup {
            order: 1,
            names: vec!["1".into()],
            mul: vec![vec![0]],
            identity: None,
        };
        let g = validate_group(&raw).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.generators().is_empty());
    }

    #[test]
    fn z4_certifies_and_matches_exhaustive_axioms() {
        let raw = z4_raw();
        let g = validate_group(&raw).unwrap();
        // exhaustive triple loop
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                }
            }
            assert_eq!(g.mul(a, g.inv(a)), 0);
        }
        assert_eq!(g.element_order(1), 4);
        assert_eq!(g.element_order(2), 2);
        assert_eq!(g.generators(), &[1]);
    }

    #[test]
    fn swapped_entry_breaks_associativity_with_witness() {
        let mut raw = z4_raw();
        raw.mul[1].swap(2, 3);
        match validate_group(&raw) {
            Err(Error::InvalidGroup(GroupViolation::NotAssociative { a, b, c })) => {
                let m = &raw.mul;
                assert_ne!(m[m[a][b]][c], m[a][m[b][c]]);
            }
            other => panic!("expected associativity failure, got {other:?}"),
        }
    }

    #[test]
    fn malformed_tables_are_rejected() {
        let mut raw = z4_raw();
        raw.mul[2].pop();
        assert!(matches!(
            validate_group(&raw),
            Err(Error::InvalidGroup(GroupViolation::Malformed(_)))
        ));
        let mut raw = z4_raw();
        raw.mul[0][0] = 9;
        assert!(matches!(
            validate_group(&raw),
            Err(Error::InvalidGroup(GroupViolation::Malformed(_)))
        ));
    }

    #[test]
    fn wrong_identity_is_reported() {
        let mut raw = z4_raw();
        raw.identity = Some(1);
        assert!(matches!(
            validate_group(&raw),
            Err(Error::InvalidGroup(GroupViolation::NoIdentity {
                claimed: 1,
                ..
            }))
        ));
    }

    #[test]
    fn monoid_without_inverses_is_rejected() {
        // {1, 0} under ordinary multiplication: associative, unital, 0 has no inverse.
        let raw = RawGroup {
            order: 2,
            names: vec!["1".into(), "0".into()],
            mul: vec![vec![0, 1], vec![1, 1]],
            identity: None,
        };
        assert!(matches!(
            validate_group(&raw),
            Err(Error::InvalidGroup(GroupViolation::NoInverse {
                element: 1
            }))
        ));
    }

    #[test]
    fn restrict_builds_standalone_subgroup() {
        let d4 = dihedral(4);
        let r = d4.find("r").unwrap();
        let h = generate_subgroup(&d4, &[r]).unwrap();
        let (c4, emb) = d4.restrict(&h).unwrap();
        assert_eq!(c4.order(), 4);
        assert!(c4.is_abelian());
        for a in c4.elements() {
            for b in c4.elements() {
                assert_eq!(emb[c4.mul(a, b)], d4.mul(emb[a], emb[b]));
            }
        }
    }
}
