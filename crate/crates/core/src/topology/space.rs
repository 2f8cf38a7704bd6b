use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use crate::budget::Budget;
use crate::error::{Error, Result, TopologyViolation};
use crate::group::Elem;

/// A topology on `{0, …, n-1}`, stored as the minimal open neighbourhood
/// `U_x` of every point (the intersection of all opens containing `x`).
///
/// On a finite set this determines the topology: a set is open exactly when
/// it contains `U_x` for each of its points.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteTopology {
    nbhd: Vec<FixedBitSet>,
}

fn bits(n: usize, elems: impl IntoIterator<Item = usize>) -> FixedBitSet {
    let mut b = FixedBitSet::with_capacity(n);
    b.extend(elems);
    b
}

fn list(b: &FixedBitSet) -> Vec<Elem> {
    b.ones().collect()
}

/// Certifies a family of open sets: contains `∅` and the whole set, closed
/// under pairwise union then pairwise intersection (enough on a finite set).
pub fn validate_topology(opens: &[Vec<Elem>], n: usize) -> Result<FiniteTopology> {
    let invalid = |v| Err(Error::InvalidTopology(v));
    let mut family: Vec<FixedBitSet> = Vec::with_capacity(opens.len());
    for set in opens {
        if let Some(&x) = set.iter().find(|&&x| x >= n) {
            return invalid(TopologyViolation::Malformed(format!(
                "point {x} outside 0..{n}"
            )));
        }
        family.push(bits(n, set.iter().copied()));
    }
    let seen: HashSet<&FixedBitSet> = family.iter().collect();
    let whole = bits(n, 0..n);
    if !seen.contains(&FixedBitSet::with_capacity(n)) || !seen.contains(&whole) {
        return invalid(TopologyViolation::MissingEmptyOrWhole);
    }
    for a in &family {
        for b in &family {
            if !seen.contains(&(a | b)) {
                return invalid(TopologyViolation::UnionMissing {
                    a: list(a),
                    b: list(b),
                });
            }
        }
    }
    for a in &family {
        for b in &family {
            if !seen.contains(&(a & b)) {
                return invalid(TopologyViolation::IntersectionMissing {
                    a: list(a),
                    b: list(b),
                });
            }
        }
    }
    let nbhd = (0..n)
        .map(|x| {
            family
                .iter()
                .filter(|o| o.contains(x))
                .fold(whole.clone(), |acc, o| &acc & o)
        })
        .collect();
    Ok(FiniteTopology { nbhd })
}

impl FiniteTopology {
    pub fn discrete(n: usize) -> Self {
        Self {
            nbhd: (0..n).map(|x| bits(n, [x])).collect(),
        }
    }

    pub fn indiscrete(n: usize) -> Self {
        Self {
            nbhd: (0..n).map(|_| bits(n, 0..n)).collect(),
        }
    }

    /// From minimal neighbourhoods; requires `x ∈ U_x` and `y ∈ U_x ⇒ U_y ⊆ U_x`.
    pub fn from_neighbourhoods(nbhd: Vec<Vec<Elem>>) -> Result<Self> {
        let n = nbhd.len();
        let mut sets = Vec::with_capacity(n);
        for (x, u) in nbhd.iter().enumerate() {
            if let Some(&y) = u.iter().find(|&&y| y >= n) {
                return Err(Error::InvalidTopology(TopologyViolation::Malformed(
                    format!("point {y} outside 0..{n}"),
                )));
            }
            let b = bits(n, u.iter().copied());
            if !b.contains(x) {
                return Err(Error::InvalidTopology(TopologyViolation::Malformed(
                    format!("neighbourhood of {x} does not contain it"),
                )));
            }
            sets.push(b);
        }
        for x in 0..n {
            for y in sets[x].ones() {
                if !sets[y].is_subset(&sets[x]) {
                    return Err(Error::InvalidTopology(
                        TopologyViolation::IntersectionMissing {
                            a: list(&sets[x]),
                            b: list(&sets[y]),
                        },
                    ));
                }
            }
        }
        Ok(Self { nbhd: sets })
    }

    /// The topology generated by a subbasis (the whole set is always open).
    pub fn generated(n: usize, subbasis: &[FixedBitSet]) -> Self {
        let whole = bits(n, 0..n);
        let nbhd = (0..n)
            .map(|x| {
                subbasis
                    .iter()
                    .filter(|s| s.contains(x))
                    .fold(whole.clone(), |acc, s| &acc & s)
            })
            .collect();
        Self { nbhd }
    }

    /// Partition topology whose opens are the unions of the given blocks.
    pub fn partition(n: usize, block_of: impl Fn(Elem) -> usize) -> Self {
        let nbhd = (0..n)
            .map(|x| bits(n, (0..n).filter(|&y| block_of(y) == block_of(x))))
            .collect();
        Self { nbhd }
    }

    pub fn len(&self) -> usize {
        self.nbhd.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nbhd.is_empty()
    }

    pub fn neighbourhood(&self, x: Elem) -> &FixedBitSet {
        &self.nbhd[x]
    }

    pub fn neighbourhoods(&self) -> Vec<Vec<Elem>> {
        self.nbhd.iter().map(list).collect()
    }

    pub fn is_open(&self, set: &FixedBitSet) -> bool {
        set.ones().all(|x| self.nbhd[x].is_subset(set))
    }

    pub fn is_discrete(&self) -> bool {
        self.nbhd.iter().all(|u| u.count_ones(..) == 1)
    }

    pub fn is_indiscrete(&self) -> bool {
        self.nbhd.iter().all(|u| u.count_ones(..) == self.len())
    }

    /// Every open set, sorted; refuses when more than `limit` would be listed.
    pub fn open_sets(&self, limit: usize) -> Result<Vec<Vec<Elem>>> {
        let n = self.len();
        let mut found: HashSet<FixedBitSet> = HashSet::new();
        found.insert(FixedBitSet::with_capacity(n));
        let mut frontier: Vec<FixedBitSet> = vec![FixedBitSet::with_capacity(n)];
        while let Some(set) = frontier.pop() {
            for u in &self.nbhd {
                let bigger = &set | u;
                if found.insert(bigger.clone()) {
                    Budget::check("open sets", found.len() as u128, limit as u128)?;
                    frontier.push(bigger);
                }
            }
        }
        let mut out: Vec<Vec<Elem>> = found.iter().map(list).collect();
        out.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    /// `U_x ⊆ U'_x` for every `x`: every open of `other` is open here.
    pub fn is_finer_than(&self, other: &FiniteTopology) -> bool {
        self.len() == other.len()
            && self
                .nbhd
                .iter()
                .zip(&other.nbhd)
                .all(|(a, b)| a.is_subset(b))
    }

    /// The coarsest topology finer than both.
    pub fn join(&self, other: &FiniteTopology) -> Result<FiniteTopology> {
        if self.len() != other.len() {
            return Err(Error::InvalidTopology(TopologyViolation::Malformed(
                "carrier sizes differ".into(),
            )));
        }
        Ok(Self {
            nbhd: self
                .nbhd
                .iter()
                .zip(&other.nbhd)
                .map(|(a, b)| a & b)
                .collect(),
        })
    }

    /// Product topology on pairs, pair `(a, b)` at index `a·|other| + b`.
    pub fn product(&self, other: &FiniteTopology) -> FiniteTopology {
        let m = other.len();
        let n = self.len() * m;
        let nbhd = (0..n)
            .map(|p| {
                let (a, b) = (p / m, p % m);
                bits(
                    n,
                    self.nbhd[a]
                        .ones()
                        .flat_map(|x| other.nbhd[b].ones().map(move |y| x * m + y)),
                )
            })
            .collect();
        Self { nbhd }
    }

    /// Subspace topology on the listed points, re-indexed `0..points.len()`.
    pub fn subspace(&self, points: &[Elem]) -> FiniteTopology {
        let k = points.len();
        let nbhd = points
            .iter()
            .map(|&x| bits(k, (0..k).filter(|&i| self.nbhd[x].contains(points[i]))))
            .collect();
        Self { nbhd }
    }

    /// The coarsest topology on `0..f.len()` making `f` continuous into `self`.
    pub fn initial(&self, f: &[Elem]) -> FiniteTopology {
        let k = f.len();
        let nbhd = (0..k)
            .map(|x| bits(k, (0..k).filter(|&y| self.nbhd[f[x]].contains(f[y]))))
            .collect();
        Self { nbhd }
    }

    /// Continuity of `f: self → to`, i.e. `f(U_x) ⊆ U_{f(x)}`.
    pub fn check_continuous(&self, to: &FiniteTopology, f: &[Elem], operation: &str) -> Result<()> {
        for x in 0..self.len() {
            let target = &to.nbhd[f[x]];
            if self.nbhd[x].ones().any(|y| !target.contains(f[y])) {
                return Err(Error::NotContinuous(TopologyViolation::Discontinuous {
                    operation: operation.to_string(),
                    open: list(target),
                    at: vec![x],
                }));
            }
        }
        Ok(())
    }

    pub fn is_continuous(&self, to: &FiniteTopology, f: &[Elem]) -> bool {
        self.check_continuous(to, f, "map").is_ok()
    }
}

/// Every continuous map `from → to`, in lexicographic order.
pub fn continuous_maps(
    from: &FiniteTopology,
    to: &FiniteTopology,
    budget: &Budget,
) -> Result<Vec<Vec<Elem>>> {
    let (n, m) = (from.len(), to.len());
    let mut out = Vec::new();
    if n == 0 {
        return Ok(vec![Vec::new()]);
    }
    if m == 0 {
        return Ok(out);
    }
    let mut u = vec![0usize; n];
    let mut nodes = 0u64;
    // assign u[0], u[1], …; the constraint between x and y (y ∈ U_x) is u[y] ∈ U_{u[x]}
    fn consistent(from: &FiniteTopology, to: &FiniteTopology, u: &[Elem], k: usize) -> bool {
        (0..=k).all(|x| {
            let ok_forward = !from.nbhd[x].contains(k) || to.nbhd[u[x]].contains(u[k]);
            let ok_back = !from.nbhd[k].contains(x) || to.nbhd[u[k]].contains(u[x]);
            ok_forward && ok_back
        })
    }
    let mut k = 0usize;
    let mut fresh = true;
    loop {
        if fresh {
            u[k] = 0;
        } else {
            u[k] += 1;
        }
        fresh = false;
        while u[k] < m && !consistent(from, to, &u, k) {
            u[k] += 1;
        }
        nodes += 1;
        if nodes > budget.search_nodes {
            return Err(Error::BudgetExceeded {
                what: "continuous map search nodes",
                needed: nodes as u128,
                limit: budget.search_nodes as u128,
            });
        }
        if u[k] == m {
            if k == 0 {
                break;
            }
            k -= 1;
            continue;
        }
        if k + 1 == n {
            out.push(u.clone());
            Budget::check(
                "continuous maps",
                out.len() as u128,
                budget.carrier_order as u128,
            )?;
            continue;
        }
        k += 1;
        fresh = true;
    }
    Ok(out)
}

/// The compact-open topology on a list of maps `B → Y` (every subset of a
/// finite space is compact): `U_u = {v : v(k) ∈ U_{u(k)} for all k}`.
pub fn compact_open(y: &FiniteTopology, maps: &[Vec<Elem>]) -> FiniteTopology {
    let n = maps.len();
    let nbhd = maps
        .iter()
        .map(|u| {
            bits(
                n,
                (0..n).filter(|&v| {
                    u.iter()
                        .zip(&maps[v])
                        .all(|(&uk, &vk)| y.nbhd[uk].contains(vk))
                }),
            )
        })
        .collect();
    FiniteTopology { nbhd }
}

/// Counts of the two sides of the currying bijection
/// `C(B × X, Y) ≅ C(X, C(B, Y))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurryReport {
    pub uncurried: usize,
    pub curried: usize,
    pub bijective: bool,
}

/// Enumerates both sides and checks that currying
/// `F ↦ (x ↦ (b ↦ F(b, x)))` is a bijection between them.
pub fn curry_check(
    b: &FiniteTopology,
    x: &FiniteTopology,
    y: &FiniteTopology,
    budget: &Budget,
) -> Result<CurryReport> {
    let bx = b.product(x);
    let left = continuous_maps(&bx, y, budget)?;
    let cby = continuous_maps(b, y, budget)?;
    let space = compact_open(y, &cby);
    let right = continuous_maps(x, &space, budget)?;
    let right_set: HashSet<&Vec<Elem>> = right.iter().collect();
    let m = x.len();
    let mut hit = HashSet::new();
    let mut bijective = true;
    for f in &left {
        let curried: Option<Vec<Elem>> = (0..m)
            .map(|xi| {
                let slice: Vec<Elem> = (0..b.len()).map(|bi| f[bi * m + xi]).collect();
                cby.binary_search(&slice).ok()
            })
            .collect();
        match curried {
            Some(c) if right_set.contains(&c) => {
                bijective &= hit.insert(c);
            }
            _ => bijective = false,
        }
    }
    bijective &= hit.len() == right.len();
    Ok(CurryReport {
        uncurried: left.len(),
        curried: right.len(),
        bijective,
    })
}
