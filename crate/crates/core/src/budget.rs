use crate::error::{Error, Result};

/// Size limits for every enumeration in the crate.
///
/// Exceeding any limit aborts the whole computation with
/// [`Error::BudgetExceeded`]; nothing ever returns a truncated list.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Largest group order accepted by subgroup and filtration arithmetic.
    pub group_order: usize,
    /// Largest source order for homomorphism enumeration.
    pub hom_source_order: usize,
    /// Largest target order for homomorphism enumeration.
    pub hom_target_order: usize,
    /// Largest number of set maps a brute-force filter may walk.
    pub map_space: u128,
    /// Largest function group (equivariant or continuous maps) built as a table.
    pub carrier_order: usize,
    /// Node limit for backtracking searches.
    pub search_nodes: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            group_order: 16,
            hom_source_order: 8,
            hom_target_order: 1024,
            map_space: 1 << 20,
            carrier_order: 1024,
            search_nodes: 20_000_000,
        }
    }
}

impl Budget {
    /// Default limits with hom-set sources up to `n` and groups up to at least `2n`.
    pub fn with_hom_order(n: usize) -> Self {
        Self {
            hom_source_order: n,
            group_order: Self::default().group_order.max(2 * n),
            ..Self::default()
        }
    }

    pub(crate) fn check(what: &'static str, needed: u128, limit: u128) -> Result<()> {
        if needed > limit {
            Err(Error::BudgetExceeded {
                what,
                needed,
                limit,
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_group(&self, order: usize) -> Result<()> {
        Self::check("group order", order as u128, self.group_order as u128)
    }
}

/// `base^exp`, saturating at `u128::MAX`.
pub(crate) fn saturating_pow(base: usize, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
    }
    acc
}
