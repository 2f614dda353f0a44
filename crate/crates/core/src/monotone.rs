//! Brute-force enumeration and counting of monotone maps on a subposet.
//!
//! This is the reference count that the partition engine is checked against.
//! It walks a linear extension depth-first; fixing a point to 1 forces every
//! member above it, fixing it to 0 forces every member below it, so each
//! leaf of the search is exactly one monotone map.

use std::sync::Arc;

use crate::count::BigCount;
use crate::error::{Error, Result};
use crate::frame::{bit, full, Frame};
use crate::poset::{induced_cover_pairs, Point, Subposet};

pub const DEFAULT_ENUMERATION_CAP: usize = 40;
pub const DEFAULT_LEAF_BUDGET: u64 = 1 << 32;

/// An order-preserving assignment of bits to the points of a subposet.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonotoneMap {
    domain: Arc<Subposet>,
    values: Vec<bool>,
}

impl MonotoneMap {
    pub(crate) fn from_parts(domain: Arc<Subposet>, values: Vec<bool>) -> Self {
        debug_assert_eq!(domain.len(), values.len());
        MonotoneMap { domain, values }
    }

    pub fn domain(&self) -> &Subposet {
        &self.domain
    }

    /// One bit per domain point, in the domain's canonical order.
    pub fn values(&self) -> &[bool] {
        &self.values
    }

    pub fn value(&self, p: Point) -> Option<bool> {
        self.domain.index_of(p).map(|i| self.values[i])
    }

    /// Points mapped to 1.
    pub fn ones(&self) -> Subposet {
        let mut s = Subposet::empty(self.domain.dim()).expect("domain dimension is valid");
        for (p, &v) in self.domain.iter().zip(&self.values) {
            if v {
                s.insert(p);
            }
        }
        s
    }
}

/// True when `values` (canonical order of `domain`) never decreases along
/// an induced cover, which by transitivity covers every comparable pair.
pub fn is_monotone(domain: &Subposet, values: &[bool]) -> bool {
    assert_eq!(values.len(), domain.len(), "one value per domain point");
    induced_cover_pairs(domain).iter().all(|c| {
        let lo = domain.index_of(c.lower).expect("cover lies in domain");
        let hi = domain.index_of(c.upper).expect("cover lies in domain");
        !values[lo] || values[hi]
    })
}

/// Frame whose slot order is ascending weight, then numeric value.
fn extension_frame(s: &Subposet) -> Result<Frame> {
    let mut pts = s.points();
    pts.sort_by_key(|p| (p.weight(), p.bits()));
    Frame::with_points(s.dim(), pts)
}

pub fn enumerate_monotone(s: &Subposet) -> Result<MonotoneIter> {
    enumerate_monotone_with_cap(s, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_monotone_with_cap(s: &Subposet, cap: usize) -> Result<MonotoneIter> {
    if s.len() > cap {
        return Err(Error::TooLarge {
            size: s.len(),
            limit: cap,
        });
    }
    let frame = extension_frame(s)?;
    // canonical index -> frame slot
    let slot_of = s
        .iter()
        .map(|p| frame.points.iter().position(|&q| q == p).expect("same members"))
        .collect();
    Ok(MonotoneIter {
        all: full(frame.len()),
        frame,
        slot_of,
        domain: Arc::new(s.clone()),
        stack: vec![(0, 0)],
    })
}

/// Depth-first stream of monotone maps; the 0 branch is explored first.
pub struct MonotoneIter {
    frame: Frame,
    slot_of: Vec<usize>,
    domain: Arc<Subposet>,
    all: u128,
    stack: Vec<(u128, u128)>,
}

impl Iterator for MonotoneIter {
    type Item = MonotoneMap;

    fn next(&mut self) -> Option<MonotoneMap> {
        while let Some((ones, zeros)) = self.stack.pop() {
            let free = self.all & !(ones | zeros);
            if free == 0 {
                let values = self.slot_of.iter().map(|&s| ones & bit(s) != 0).collect();
                return Some(MonotoneMap {
                    domain: Arc::clone(&self.domain),
                    values,
                });
            }
            let x = free.trailing_zeros() as usize;
            self.stack.push((ones | (self.frame.up[x] & free), zeros));
            self.stack.push((ones, zeros | (self.frame.down[x] & free)));
        }
        None
    }
}

/// Exact `D(S)` by leaf counting, with the default leaf budget.
pub fn count_monotone_oracle(s: &Subposet) -> Result<BigCount> {
    count_monotone_oracle_with_budget(s, DEFAULT_LEAF_BUDGET)
}

pub fn count_monotone_oracle_with_budget(s: &Subposet, leaf_budget: u64) -> Result<BigCount> {
    let frame = extension_frame(s)?;
    let mut leaves = 0u64;
    dfs_leaves(&frame, full(frame.len()), &mut leaves, leaf_budget)?;
    Ok(BigCount::from(leaves))
}

fn dfs_leaves(frame: &Frame, free: u128, leaves: &mut u64, budget: u64) -> Result<()> {
    if free == 0 {
        *leaves += 1;
        if *leaves > budget {
            return Err(Error::BudgetExceeded(format!(
                "oracle enumeration passed {budget} leaves"
            )));
        }
        return Ok(());
    }
    let x = free.trailing_zeros() as usize;
    dfs_leaves(frame, free & !frame.down[x], leaves, budget)?;
    dfs_leaves(frame, free & !frame.up[x], leaves, budget)
}
