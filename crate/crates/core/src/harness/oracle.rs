//! Brute-force reference computations.
//!
//! Nothing here calls the search or closure routines it is meant to check:
//! subgroups are found by testing every subset, homomorphisms by testing
//! every map, and the strongly-central conditions are checked far past the
//! index bound the library relies on.

use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;

use crate::action::FilteredAction;
use crate::budget::{saturating_pow, Budget};
use crate::error::{Error, Result};
use crate::filtration::Filtration;
use crate::group::{Elem, FiniteGroup, GroupRef, Subgroup};

/// Every map `source → target` that is multiplicative, lexicographically.
pub fn brute_force_homomorphisms(
    source: &FiniteGroup,
    target: &FiniteGroup,
    budget: &Budget,
) -> Result<Vec<Vec<Elem>>> {
    let (n, m) = (source.order(), target.order());
    Budget::check(
        "brute-force map space",
        saturating_pow(m, n),
        budget.map_space,
    )?;
    let mut out = Vec::new();
    let mut f = vec![0; n];
    loop {
        let hom = source.elements().all(|a| {
            source
                .elements()
                .all(|b| f[source.mul(a, b)] == target.mul(f[a], f[b]))
        });
        if hom {
            out.push(f.clone());
        }
        let Some(k) = (0..n).rev().find(|&k| f[k] + 1 < m) else {
            break;
        };
        f[k] += 1;
        f[k + 1..].iter_mut().for_each(|v| *v = 0);
    }
    Ok(out)
}

/// Every subgroup, found by testing all subsets containing the identity for
/// closure under multiplication.
pub fn brute_force_subgroups(group: &FiniteGroup, max_order: usize) -> Result<Vec<FixedBitSet>> {
    let n = group.order();
    Budget::check("brute-force subgroup order", n as u128, max_order as u128)?;
    let others: Vec<Elem> = group
        .elements()
        .filter(|&g| g != group.identity())
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << others.len()) {
        let mut set = FixedBitSet::with_capacity(n);
        set.insert(group.identity());
        for (k, &g) in others.iter().enumerate() {
            if mask & (1 << k) != 0 {
                set.insert(g);
            }
        }
        if set
            .ones()
            .all(|a| set.ones().all(|b| set.contains(group.mul(a, b))))
        {
            out.push(set);
        }
    }
    Ok(out)
}

fn close_by_products(group: &FiniteGroup, seed: impl IntoIterator<Item = Elem>) -> FixedBitSet {
    let mut set = FixedBitSet::with_capacity(group.order());
    set.insert(group.identity());
    set.extend(seed);
    loop {
        let current: Vec<Elem> = set.ones().collect();
        let mut grew = false;
        for &a in &current {
            for &b in &current {
                let p = group.mul(a, b);
                if !set.contains(p) {
                    set.insert(p);
                    grew = true;
                }
            }
        }
        if !grew {
            return set;
        }
    }
}

/// Orders of `γ_1 = G`, `γ_{k+1} = ⟨[x, y] : x ∈ G, y ∈ γ_k⟩` until stable,
/// by closing commutator sets under products.
pub fn lower_central_orders(group: &FiniteGroup) -> Vec<usize> {
    let mut current = close_by_products(group, group.elements());
    let mut orders = vec![current.count_ones(..)];
    loop {
        let commutators: Vec<Elem> = group
            .elements()
            .flat_map(|x| current.ones().map(move |y| (x, y)))
            .map(|(x, y)| group.mul(group.mul(x, y), group.mul(group.inv(x), group.inv(y))))
            .collect();
        let next = close_by_products(group, commutators);
        if next == current {
            return orders;
        }
        orders.push(next.count_ones(..));
        current = next;
    }
}

type Chain = Vec<FixedBitSet>;

fn at(chain: &[FixedBitSet], i: usize) -> &FixedBitSet {
    &chain[i.min(chain.len()) - 1]
}

fn normalize(mut chain: Chain) -> Chain {
    while chain.len() > 1 && chain[chain.len() - 1] == chain[chain.len() - 2] {
        chain.pop();
    }
    chain
}

/// Strong centrality of a chain of element sets, checked for `i, j ≤ bound`.
pub fn is_strongly_central(group: &FiniteGroup, chain: &[FixedBitSet], bound: usize) -> bool {
    (1..=bound).all(|i| {
        (1..=bound).all(|j| {
            let dest = at(chain, i + j);
            at(chain, i).ones().all(|x| {
                at(chain, j)
                    .ones()
                    .all(|y| dest.contains(group.commutator(x, y)))
            })
        })
    })
}

fn as_bits(s: &Subgroup) -> FixedBitSet {
    s.members().clone()
}

/// Largest strongly central chain `H_* ⊆ G_*` of length at most `max_len`
/// that is stable under `B_1` and satisfies `[B_i, H_j] ⊆ H_{i+j}`, found by
/// enumerating every descending chain of subgroups. Also checks that this
/// chain contains every other admissible chain.
pub fn oracle_max_subfiltration(
    a: &FilteredAction,
    max_len: usize,
    max_order: usize,
) -> Result<Filtration> {
    let action = a.action();
    let group = action.target();
    let subgroups = brute_force_subgroups(group, max_order)?;
    let b_f: Vec<FixedBitSet> = a.actor_filtration().levels().iter().map(as_bits).collect();
    let g_f: Vec<FixedBitSet> = a.target_filtration().levels().iter().map(as_bits).collect();
    let bound = 2 * (max_len.max(b_f.len()).max(g_f.len()) + 1);

    let admissible = |chain: &Chain| -> bool {
        (1..=bound).all(|i| at(chain, i).is_subset(at(&g_f, i)))
            && is_strongly_central(group, chain, bound)
            && (1..=bound).all(|i| {
                at(&b_f, 1).ones().all(|b| {
                    at(chain, i)
                        .ones()
                        .all(|g| at(chain, i).contains(action.apply(b, g)))
                })
            })
            && (1..=bound).all(|i| {
                (1..=bound).all(|j| {
                    let dest = at(chain, i + j);
                    at(&b_f, i).ones().all(|b| {
                        at(chain, j)
                            .ones()
                            .all(|g| dest.contains(action.bracket(b, g)))
                    })
                })
            })
    };

    let mut valid: BTreeSet<Vec<Vec<Elem>>> = BTreeSet::new();
    let mut chains: Vec<Chain> = subgroups.iter().map(|s| vec![s.clone()]).collect();
    for len in 1..=max_len {
        for chain in &chains {
            let norm = normalize(chain.clone());
            if admissible(&norm) {
                valid.insert(norm.iter().map(|s| s.ones().collect()).collect());
            }
        }
        if len == max_len {
            break;
        }
        chains = chains
            .iter()
            .flat_map(|c| {
                let last = c[c.len() - 1].clone();
                subgroups
                    .iter()
                    .filter(move |s| s.is_subset(&last))
                    .map(move |s| {
                        let mut next = c.clone();
                        next.push(s.clone());
                        next
                    })
            })
            .collect();
    }

    let n = group.order();
    let decode = |c: &Vec<Vec<Elem>>| -> Chain {
        c.iter()
            .map(|s| {
                let mut b = FixedBitSet::with_capacity(n);
                b.extend(s.iter().copied());
                b
            })
            .collect()
    };
    let decoded: Vec<Chain> = valid.iter().map(decode).collect();
    let contains_all = |m: &Chain| {
        decoded
            .iter()
            .all(|c| (1..=bound).all(|i| at(c, i).is_subset(at(m, i))))
    };
    let maxima: Vec<&Chain> = decoded.iter().filter(|m| contains_all(m)).collect();
    let [maximum] = maxima.as_slice() else {
        return Err(Error::fault(format!(
            "{} admissible chains but {} maxima",
            decoded.len(),
            maxima.len()
        )));
    };
    to_filtration(group, maximum)
}

fn to_filtration(group: &GroupRef, chain: &[FixedBitSet]) -> Result<Filtration> {
    let levels = chain
        .iter()
        .map(|s| Subgroup::from_elements(group, s.ones()))
        .collect::<Result<Vec<_>>>()?;
    Filtration::new(levels)
}
