use std::fmt;

use crate::error::{Error, Result};
use crate::poset::Point;
use crate::MAX_DIM;

/// A set of points of the n-cube carrying the induced coordinatewise order.
///
/// Membership is a bitset over all `2^n` cube points, so iteration is always
/// in ascending numeric order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subposet {
    dim: u8,
    words: Vec<u64>,
}

fn word_count(dim: usize) -> usize {
    (1usize << dim).div_ceil(64)
}

fn full_mask(dim: usize) -> usize {
    (1usize << dim) - 1
}

impl Subposet {
    pub fn empty(dim: usize) -> Result<Self> {
        if dim > MAX_DIM {
            return Err(Error::DimensionOutOfRange(dim));
        }
        Ok(Subposet {
            dim: dim as u8,
            words: vec![0; word_count(dim)],
        })
    }

    /// The whole cube `E^n`.
    pub fn cube(dim: usize) -> Result<Self> {
        let mut s = Subposet::empty(dim)?;
        let size = 1usize << dim;
        for (w, word) in s.words.iter_mut().enumerate() {
            let lo = w * 64;
            let n = (size - lo).min(64);
            *word = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        }
        Ok(s)
    }

    pub fn from_points<I: IntoIterator<Item = Point>>(dim: usize, points: I) -> Result<Self> {
        let mut s = Subposet::empty(dim)?;
        for p in points {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: p.dim(),
                });
            }
            s.insert(p);
        }
        Ok(s)
    }

    /// Build from textual points, e.g. `&["00", "11"]`.
    pub fn parse_points(dim: usize, points: &[&str]) -> Result<Self> {
        let parsed = points
            .iter()
            .map(|s| s.parse::<Point>())
            .collect::<Result<Vec<_>>>()?;
        Subposet::from_points(dim, parsed)
    }

    /// Points selected by a predicate on the numeric value.
    pub fn filter_cube(dim: usize, mut keep: impl FnMut(Point) -> bool) -> Result<Self> {
        let mut s = Subposet::empty(dim)?;
        for bits in 0..1usize << dim {
            let p = Point::from_raw(dim, bits);
            if keep(p) {
                s.insert(p);
            }
        }
        Ok(s)
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, p: Point) -> bool {
        p.dim() == self.dim() && self.contains_bits(p.bits())
    }

    pub(crate) fn contains_bits(&self, bits: usize) -> bool {
        self.words[bits / 64] >> (bits % 64) & 1 == 1
    }

    /// Returns false if the point was already present.
    pub fn insert(&mut self, p: Point) -> bool {
        debug_assert_eq!(p.dim(), self.dim());
        let (w, b) = (p.bits() / 64, p.bits() % 64);
        let fresh = self.words[w] >> b & 1 == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, p: Point) -> bool {
        if !self.contains(p) {
            return false;
        }
        let (w, b) = (p.bits() / 64, p.bits() % 64);
        self.words[w] &= !(1 << b);
        true
    }

    pub fn iter(&self) -> impl Iterator<Item = Point> + '_ {
        let dim = self.dim();
        self.words.iter().enumerate().flat_map(move |(w, &word)| {
            BitIter(word).map(move |b| Point::from_raw(dim, w * 64 + b))
        })
    }

    pub fn points(&self) -> Vec<Point> {
        self.iter().collect()
    }

    /// Position of `p` in the canonical (ascending numeric) order.
    pub fn index_of(&self, p: Point) -> Option<usize> {
        if !self.contains(p) {
            return None;
        }
        let (w, b) = (p.bits() / 64, p.bits() % 64);
        let below: usize = self.words[..w].iter().map(|x| x.count_ones() as usize).sum();
        Some(below + (self.words[w] & ((1u64 << b) - 1)).count_ones() as usize)
    }

    fn check_dim(&self, other: &Subposet) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(())
    }

    fn zip_with(&self, other: &Subposet, f: impl Fn(u64, u64) -> u64) -> Result<Subposet> {
        self.check_dim(other)?;
        Ok(Subposet {
            dim: self.dim,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    pub fn union(&self, other: &Subposet) -> Result<Subposet> {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Subposet) -> Result<Subposet> {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Subposet) -> Result<Subposet> {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn is_subset(&self, other: &Subposet) -> bool {
        self.dim == other.dim
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(&a, &b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Subposet) -> bool {
        self.dim == other.dim
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(&a, &b)| a & b == 0)
    }

    /// Complement inside the ambient cube.
    pub fn complement(&self) -> Subposet {
        let full = Subposet::cube(self.dim()).expect("dimension already validated");
        full.difference(self).expect("same dimension")
    }

    /// Image under `p -> complement(p)`; as a poset this is the dual of `self`.
    pub fn dual(&self) -> Subposet {
        self.map_points(Point::complement)
    }

    /// Image under a coordinate permutation: coordinate `a^i` of each point is
    /// moved to position `perm[i - 1] + 1`.
    pub fn permute_coords(&self, perm: &[usize]) -> Result<Subposet> {
        let n = self.dim();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&j| j >= n || std::mem::replace(&mut seen[j], true)) {
            return Err(Error::InvalidArgument(format!(
                "{perm:?} is not a permutation of 0..{n}"
            )));
        }
        Ok(self.map_points(|p| {
            let mut bits = 0;
            for (i, &j) in perm.iter().enumerate() {
                bits |= (p.bits() >> i & 1) << j;
            }
            Point::from_raw(n, bits)
        }))
    }

    fn map_points(&self, f: impl Fn(Point) -> Point) -> Subposet {
        let mut out = Subposet::empty(self.dim()).expect("dimension already validated");
        for p in self.iter() {
            out.insert(f(p));
        }
        out
    }

    /// `S_{a,1}`: every cube point above `a`, inclusive.
    pub fn upper_set(a: Point) -> Subposet {
        let n = a.dim();
        let free = full_mask(n) & !a.bits();
        let mut s = Subposet::empty(n).expect("point dimension is valid");
        for sub in submasks(free) {
            s.insert(Point::from_raw(n, a.bits() | sub));
        }
        s
    }

    /// `S_{a,0}`: every cube point below `a`, inclusive.
    pub fn lower_set(a: Point) -> Subposet {
        let n = a.dim();
        let mut s = Subposet::empty(n).expect("point dimension is valid");
        for sub in submasks(a.bits()) {
            s.insert(Point::from_raw(n, sub));
        }
        s
    }

    /// `S_{A,y}`: union of `upper_set(a_i)` where `y_i` is set and
    /// `lower_set(a_i)` otherwise, pairing `y` with `pivots` in canonical order.
    pub fn generated_subset(pivots: &Subposet, y: &[bool]) -> Result<Subposet> {
        if y.len() != pivots.len() {
            return Err(Error::LengthMismatch {
                expected: pivots.len(),
                got: y.len(),
            });
        }
        let mut out = Subposet::empty(pivots.dim())?;
        for (a, &up) in pivots.iter().zip(y) {
            let part = if up {
                Subposet::upper_set(a)
            } else {
                Subposet::lower_set(a)
            };
            for (w, word) in out.words.iter_mut().zip(&part.words) {
                *w |= word;
            }
        }
        Ok(out)
    }

    /// Points of the cube whose coordinate `a^i` (1-based) equals `value`.
    pub fn subcube(dim: usize, i: usize, value: bool) -> Result<Subposet> {
        if i == 0 || i > dim {
            return Err(Error::InvalidArgument(format!(
                "coordinate {i} is outside 1..={dim}"
            )));
        }
        Subposet::filter_cube(dim, |p| p.coord(i) == value)
    }

    /// Points of `self` above `a` (inclusive).
    pub fn up_within(&self, a: Point) -> Subposet {
        self.intersection(&Subposet::upper_set(a)).expect("same dimension")
    }

    /// Points of `self` below `a` (inclusive).
    pub fn down_within(&self, a: Point) -> Subposet {
        self.intersection(&Subposet::lower_set(a)).expect("same dimension")
    }

    /// True when no two distinct members are comparable.
    pub fn is_antichain(&self) -> bool {
        let pts = self.points();
        pts.iter().enumerate().all(|(i, &a)| {
            pts[i + 1..]
                .iter()
                .all(|&b| !a.comparable(b).expect("same dimension"))
        })
    }

    /// True when every two members are comparable.
    pub fn is_chain(&self) -> bool {
        let pts = self.points();
        pts.iter().enumerate().all(|(i, &a)| {
            pts[i + 1..]
                .iter()
                .all(|&b| a.comparable(b).expect("same dimension"))
        })
    }

    /// Members as a 128-bit cube mask; only meaningful for `dim <= 7`.
    pub(crate) fn to_mask128(&self) -> u128 {
        debug_assert!(self.dim() <= 7);
        let lo = self.words[0] as u128;
        let hi = self.words.get(1).copied().unwrap_or(0) as u128;
        lo | hi << 64
    }

    pub(crate) fn from_mask128(dim: usize, mask: u128) -> Subposet {
        debug_assert!(dim <= 7);
        let mut s = Subposet::empty(dim).expect("dim <= 7");
        s.words[0] = mask as u64;
        if let Some(w) = s.words.get_mut(1) {
            *w = (mask >> 64) as u64;
        }
        s
    }
}

impl fmt::Debug for Subposet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subposet(n={}, {{", self.dim)?;
        for (i, p) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("})")
    }
}

/// All submasks of `mask`, ascending.
pub(crate) fn submasks(mask: usize) -> impl Iterator<Item = usize> {
    let mut next = Some(0usize);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == mask {
            None
        } else {
            Some(((cur | !mask).wrapping_add(1)) & mask)
        };
        Some(cur)
    })
}

/// Set-bit positions of a word, ascending.
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}
