use std::collections::HashMap;

use super::{Elem, FiniteGroup, GroupRef};
use crate::budget::Budget;
use crate::error::{Error, Result};

/// A group of set maps `domain → codomain` under the pointwise product.
///
/// Element `u` of [`FunctionGroup::group`] is the map `maps()[u]`; maps are
/// stored in lexicographic order, so the indexing is canonical.
#[derive(Clone, Debug)]
pub struct FunctionGroup {
    group: GroupRef,
    domain_size: usize,
    codomain: GroupRef,
    maps: Vec<Vec<Elem>>,
    index: HashMap<Vec<Elem>, Elem>,
}

impl FunctionGroup {
    /// Certifies that `maps` is closed under pointwise product and inverse.
    pub fn pointwise(
        domain_size: usize,
        codomain: &GroupRef,
        mut maps: Vec<Vec<Elem>>,
        budget: &Budget,
    ) -> Result<Self> {
        maps.sort_unstable();
        maps.dedup();
        Budget::check(
            "function group order",
            maps.len() as u128,
            budget.carrier_order as u128,
        )?;
        for u in &maps {
            if u.len() != domain_size {
                return Err(Error::fault("map with wrong domain size"));
            }
            for &v in u {
                codomain.check_elem(v)?;
            }
        }
        let index: HashMap<Vec<Elem>, Elem> = maps
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, u)| (u, i))
            .collect();
        let unit = vec![codomain.identity(); domain_size];
        let identity = *index
            .get(&unit)
            .ok_or_else(|| Error::NotSubgroup("constant identity map missing".into()))?;
        let n = maps.len();
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let prod: Vec<Elem> = maps[a]
                    .iter()
                    .zip(&maps[b])
                    .map(|(&x, &y)| codomain.mul(x, y))
                    .collect();
                table[a * n + b] = *index.get(&prod).ok_or_else(|| {
                    Error::NotSubgroup(format!("pointwise product {a}*{b} missing"))
                })?;
            }
        }
        let names = maps
            .iter()
            .map(|u| {
                let parts: Vec<&str> = u.iter().map(|&v| codomain.name(v)).collect();
                format!("[{}]", parts.join(","))
            })
            .collect();
        let group = FiniteGroup::from_fn(names, identity, |a, b| table[a * n + b])?;
        Ok(Self {
            group,
            domain_size,
            codomain: codomain.clone(),
            maps,
            index,
        })
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn codomain(&self) -> &GroupRef {
        &self.codomain
    }

    pub fn domain_size(&self) -> usize {
        self.domain_size
    }

    pub fn maps(&self) -> &[Vec<Elem>] {
        &self.maps
    }

    /// The map represented by element `u`.
    pub fn map(&self, u: Elem) -> &[Elem] {
        &self.maps[u]
    }

    pub fn lookup(&self, map: &[Elem]) -> Option<Elem> {
        self.index.get(map).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::cyclic;

    #[test]
    fn all_maps_into_z2_form_z2_squared() {
        let z2 = cyclic(2);
        let maps = vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]];
        let fg = FunctionGroup::pointwise(2, &z2, maps, &Budget::default()).unwrap();
        assert_eq!(fg.group().order(), 4);
        assert!(fg.group().is_abelian());
        assert_eq!(fg.group().identity(), 0);
        let u = fg.lookup(&[1, 0]).unwrap();
        assert_eq!(fg.group().mul(u, u), 0);
    }

    #[test]
    fn non_closed_family_is_rejected() {
        let z3 = cyclic(3);
        let maps = vec![vec![0, 0], vec![1, 0]];
        assert!(FunctionGroup::pointwise(2, &z3, maps, &Budget::default()).is_err());
    }
}
