//! Splitting a subposet on the monotone maps of a pivot set.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::frame::{bit, slots, Frame};
use crate::monotone::MonotoneMap;
use crate::poset::Subposet;

pub const DEFAULT_TERM_LIMIT: u64 = 1 << 24;

/// One summand `D(S - S_{A,f})` of the split of `D(S)` over a pivot map `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionTerm {
    pub pivot_values: MonotoneMap,
    pub residual: Subposet,
}

/// Slot mask of `sub` inside `frame`; `None` if a point is missing.
pub(crate) fn mask_in(frame: &Frame, sub: &Subposet) -> Option<u128> {
    if frame.cube {
        return (sub.dim() == frame.dim).then(|| sub.to_mask128());
    }
    let mut m = 0u128;
    for p in sub.iter() {
        let slot = frame.points.binary_search(&p).ok()?;
        m |= bit(slot);
    }
    Some(m)
}

/// Walk every monotone map on `pivots` (depth-first, 0 before 1, lowest free
/// pivot first). `visit` receives the pivots mapped to 1 and the residual of
/// `members` left undetermined by that map.
pub(crate) fn for_each_pivot_map<F>(
    frame: &Frame,
    members: u128,
    pivots: u128,
    limit: u64,
    mut visit: F,
) -> Result<u64>
where
    F: FnMut(u128, u128) -> Result<()>,
{
    let mut seen = 0u64;
    let mut stack = vec![(pivots, 0u128, 0u128)];
    while let Some((free, raised, lowered)) = stack.pop() {
        if free == 0 {
            seen += 1;
            if seen > limit {
                return Err(Error::BudgetExceeded(format!(
                    "pivot set has more than {limit} monotone maps"
                )));
            }
            visit(pivots & raised, members & !(raised | lowered))?;
            continue;
        }
        let x = free.trailing_zeros() as usize;
        stack.push((free & !frame.up[x], raised | frame.up[x], lowered));
        stack.push((free & !frame.down[x], raised, lowered | frame.down[x]));
    }
    Ok(seen)
}

pub(crate) fn check_subset(pivots: &Subposet, s: &Subposet) -> Result<()> {
    if pivots.dim() != s.dim() {
        return Err(Error::DimensionMismatch {
            left: pivots.dim(),
            right: s.dim(),
        });
    }
    if !pivots.is_subset(s) {
        return Err(Error::NotASubset);
    }
    Ok(())
}

/// All terms of the split of `D(S)` induced by `pivots`, one per monotone map
/// on `pivots`, ordered lexicographically by the maps' value vectors.
pub fn partition_terms(s: &Subposet, pivots: &Subposet) -> Result<Vec<PartitionTerm>> {
    partition_terms_with_limit(s, pivots, DEFAULT_TERM_LIMIT)
}

pub fn partition_terms_with_limit(
    s: &Subposet,
    pivots: &Subposet,
    limit: u64,
) -> Result<Vec<PartitionTerm>> {
    check_subset(pivots, s)?;
    let (frame, members) = Frame::for_subposet(s)?;
    let pivot_mask = mask_in(&frame, pivots).expect("pivots lie in the frame");
    let domain = Arc::new(pivots.clone());
    let pivot_slots: Vec<usize> = slots(pivot_mask).collect();

    let mut terms = Vec::new();
    for_each_pivot_map(&frame, members, pivot_mask, limit, |ones, residual| {
        let values = pivot_slots.iter().map(|&p| ones & bit(p) != 0).collect();
        terms.push(PartitionTerm {
            pivot_values: MonotoneMap::from_parts(Arc::clone(&domain), values),
            residual: frame.subposet(residual),
        });
        Ok(())
    })?;
    terms.sort_by(|a, b| a.pivot_values.values().cmp(b.pivot_values.values()));
    Ok(terms)
}
