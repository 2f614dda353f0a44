//! Internal 128-slot bitset view of a subposet used by the counting paths.

use crate::error::{Error, Result};
use crate::poset::{Point, Subposet};

pub(crate) const FRAME_SLOTS: usize = 128;

/// Up to 128 points with precomputed inclusive up/down sets as slot masks.
///
/// A cube frame has one slot per point of `E^n` (`n <= 7`) with slot index
/// equal to the point's numeric value, so cube symmetries act on its masks.
#[derive(Clone, Debug)]
pub(crate) struct Frame {
    pub dim: usize,
    pub points: Vec<Point>,
    pub up: Vec<u128>,
    pub down: Vec<u128>,
    pub cube: bool,
}

#[inline]
pub(crate) fn bit(slot: usize) -> u128 {
    1u128 << slot
}

pub(crate) fn slots(mut mask: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let s = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        Some(s)
    })
}

impl Frame {
    pub fn cube(dim: usize) -> Frame {
        assert!(dim <= 7, "cube frames hold at most 2^7 points");
        let points = (0..1usize << dim).map(|b| Point::from_raw(dim, b)).collect();
        let mut f = Frame::build(dim, points);
        f.cube = true;
        f
    }

    /// Slots follow the order of `points`.
    pub fn with_points(dim: usize, points: Vec<Point>) -> Result<Frame> {
        if points.len() > FRAME_SLOTS {
            return Err(Error::TooLarge {
                size: points.len(),
                limit: FRAME_SLOTS,
            });
        }
        Ok(Frame::build(dim, points))
    }

    fn build(dim: usize, points: Vec<Point>) -> Frame {
        let m = points.len();
        let mut up = vec![0u128; m];
        let mut down = vec![0u128; m];
        for (i, a) in points.iter().enumerate() {
            for (j, b) in points.iter().enumerate() {
                if a.bits() & !b.bits() == 0 {
                    up[i] |= bit(j);
                    down[j] |= bit(i);
                }
            }
        }
        Frame {
            dim,
            points,
            up,
            down,
            cube: false,
        }
    }

    /// Frame and member mask for `s`: a cube frame for `dim <= 7`, otherwise
    /// a local frame over the members in numeric order.
    pub fn for_subposet(s: &Subposet) -> Result<(Frame, u128)> {
        if s.dim() <= 7 {
            Ok((Frame::cube(s.dim()), s.to_mask128()))
        } else {
            let f = Frame::with_points(s.dim(), s.points())?;
            let mask = full(f.points.len());
            Ok((f, mask))
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn subposet(&self, mask: u128) -> Subposet {
        if self.cube {
            return Subposet::from_mask128(self.dim, mask);
        }
        Subposet::from_points(self.dim, slots(mask).map(|s| self.points[s]))
            .expect("frame points share one dimension")
    }

    /// True when no two members of `mask` are comparable.
    pub fn is_antichain(&self, mask: u128) -> bool {
        slots(mask).all(|s| (self.up[s] | self.down[s]) & mask == bit(s))
    }

    /// Connected components of the comparability graph restricted to `mask`.
    pub fn components(&self, mask: u128) -> Vec<u128> {
        let mut rest = mask;
        let mut out = Vec::new();
        while rest != 0 {
            let seed = rest & rest.wrapping_neg();
            let mut comp = seed;
            let mut frontier = seed;
            while frontier != 0 {
                let mut grown = 0u128;
                for s in slots(frontier) {
                    grown |= self.up[s] | self.down[s];
                }
                grown &= rest & !comp;
                comp |= grown;
                frontier = grown;
            }
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    /// Induced up-covers (`upward`) or down-covers of slot `s` within `mask`.
    pub fn covers_within(&self, s: usize, mask: u128, upward: bool) -> u128 {
        let rel = if upward { &self.up } else { &self.down };
        let strict = rel[s] & mask & !bit(s);
        let mut nearest = strict;
        for t in slots(strict) {
            nearest &= !(rel[t] & !bit(t));
        }
        nearest
    }
}

#[inline]
pub(crate) fn full(len: usize) -> u128 {
    if len >= 128 {
        u128::MAX
    } else {
        (1u128 << len) - 1
    }
}
