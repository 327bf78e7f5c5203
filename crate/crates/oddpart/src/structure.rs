//! Composition-factor analysis.
//!
//! `a(G)` is the product of the orders of the odd-order composition
//! factors in any composition series of `G`; by Jordan–Hölder it does not
//! depend on the series. Factors are found by splitting over a proper
//! normal subgroup and the faithful quotient realized as a coset action,
//! recursing until the pieces are simple. Simplicity is certified
//! constructively: a group is simple exactly when the normal closure of
//! every prime-order element is the whole group.

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::perm::PermGroup;
use crate::{numth, Error, Result};

/// One composition factor: its order and whether it is abelian
/// (equivalently, of prime order).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Factor {
    pub order: u64,
    pub abelian: bool,
}

/// Multiset of composition factor orders together with the derived
/// quantities used throughout the bound checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompositionReport {
    /// Order of the analyzed group.
    pub order: u64,
    /// Factors sorted ascending; repeated entries are repeated factors.
    pub factors: Vec<Factor>,
    /// Product of the odd factor orders.
    pub a_value: u64,
    /// Largest odd divisor of the group order.
    pub odd_part_of_order: u64,
}

/// Largest odd divisor of `n`.
pub fn odd_part(n: u64) -> u64 {
    numth::odd_part(n)
}

/// A proper nontrivial normal subgroup of `G` if one exists, found as the
/// normal closure of a single prime-order element with elements scanned
/// in canonical order; `None` certifies that `G` is simple.
pub fn find_proper_normal(group: &PermGroup) -> Result<Option<PermGroup>> {
    let order = group
        .order()
        .to_u64()
        .ok_or(Error::CapExceeded {
            what: "composition analysis order",
            value: u128::MAX,
            cap: group.caps().element_cap as u128,
        })?;
    if order <= 1 {
        return Err(Error::InvalidParams(
            "find_proper_normal requires a nontrivial group".into(),
        ));
    }
    for elem in group.elements()? {
        let elem_order = elem.element_order();
        if !numth::is_prime(elem_order as u128) {
            continue;
        }
        let closure = group.normal_closure(std::slice::from_ref(&elem))?;
        let closure_order = closure.order_u64().ok_or(Error::CapExceeded {
            what: "normal closure order",
            value: u128::MAX,
            cap: group.caps().element_cap as u128,
        })?;
        if closure_order < order {
            return Ok(Some(closure));
        }
    }
    Ok(None)
}

/// Composition factors of `G` with `a(G)` and the odd part of `|G|`.
pub fn composition_factors(group: &PermGroup) -> Result<CompositionReport> {
    let order = group.order().to_u64().ok_or(Error::CapExceeded {
        what: "composition analysis order",
        value: u128::MAX,
        cap: group.caps().element_cap as u128,
    })?;
    let mut factors = Vec::new();
    collect_factors(group, &mut factors)?;
    factors.sort_unstable();
    let mut product: u64 = 1;
    let mut a_value: u64 = 1;
    for f in &factors {
        product = product
            .checked_mul(f.order)
            .ok_or_else(|| Error::OutOfRange("factor product overflow".into()))?;
        if f.order % 2 == 1 {
            a_value *= f.order;
        }
    }
    debug_assert_eq!(product, order);
    Ok(CompositionReport {
        order,
        factors,
        a_value,
        odd_part_of_order: odd_part(order),
    })
}

fn collect_factors(group: &PermGroup, out: &mut Vec<Factor>) -> Result<()> {
    let order = group.order().to_u64().ok_or(Error::CapExceeded {
        what: "composition analysis order",
        value: u128::MAX,
        cap: group.caps().element_cap as u128,
    })?;
    if order == 1 {
        return Ok(());
    }
    match find_proper_normal(group)? {
        None => {
            out.push(Factor {
                order,
                abelian: numth::is_prime(order as u128),
            });
            Ok(())
        }
        Some(normal) => {
            let quotient = group.coset_action(&normal)?;
            collect_factors(&normal, out)?;
            collect_factors(&quotient, out)
        }
    }
}

/// `a(G)`: convenience wrapper over `composition_factors`; a(1) = 1.
pub fn a_of_group(group: &PermGroup) -> Result<u64> {
    Ok(composition_factors(group)?.a_value)
}
