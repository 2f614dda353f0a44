use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::MAX_DIM;

/// A vertex of the n-cube.
///
/// Coordinate `a^i` (1-based) lives in bit `i - 1`. The textual form lists
/// `a^1` first, so `"011"` has bits 1 and 2 set and numeric value 6.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    // Field order gives `Ord` by dimension, then numeric value.
    dim: u8,
    bits: u16,
}

impl Point {
    pub fn new(dim: usize, bits: u32) -> Result<Self> {
        if dim > MAX_DIM {
            return Err(Error::DimensionOutOfRange(dim));
        }
        if dim < 32 && bits >> dim != 0 {
            return Err(Error::PointOutOfRange { raw: bits, dim });
        }
        Ok(Point {
            dim: dim as u8,
            bits: bits as u16,
        })
    }

    /// Caller guarantees `dim <= MAX_DIM` and `bits < 2^dim`.
    pub(crate) fn from_raw(dim: usize, bits: usize) -> Self {
        debug_assert!(dim <= MAX_DIM && bits >> dim == 0);
        Point {
            dim: dim as u8,
            bits: bits as u16,
        }
    }

    pub fn bottom(dim: usize) -> Result<Self> {
        Point::new(dim, 0)
    }

    pub fn top(dim: usize) -> Result<Self> {
        if dim > MAX_DIM {
            return Err(Error::DimensionOutOfRange(dim));
        }
        Ok(Point::from_raw(dim, (1usize << dim) - 1))
    }

    pub fn dim(self) -> usize {
        self.dim as usize
    }

    /// Numeric value of the packed coordinates.
    pub fn bits(self) -> usize {
        self.bits as usize
    }

    /// Coordinate `a^i`, 1-based.
    pub fn coord(self, i: usize) -> bool {
        debug_assert!(i >= 1 && i <= self.dim());
        self.bits >> (i - 1) & 1 == 1
    }

    pub fn weight(self) -> usize {
        self.bits.count_ones() as usize
    }

    fn check_dim(self, other: Point) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(())
    }

    /// Coordinatewise order.
    pub fn leq(self, other: Point) -> Result<bool> {
        self.check_dim(other)?;
        Ok(self.bits & !other.bits == 0)
    }

    /// True when `self` covers `lower` in the cube: `lower <= self` with a
    /// weight gap of exactly one.
    pub fn covers(self, lower: Point) -> Result<bool> {
        self.check_dim(lower)?;
        Ok(lower.bits & !self.bits == 0 && self.weight() == lower.weight() + 1)
    }

    pub fn comparable(self, other: Point) -> Result<bool> {
        Ok(self.leq(other)? || other.leq(self)?)
    }

    /// Flip every coordinate. This is an order-reversing bijection of the cube.
    pub fn complement(self) -> Point {
        Point::from_raw(self.dim(), !self.bits() & ((1usize << self.dim()) - 1))
    }

    /// Flip coordinate `a^i` (1-based).
    pub fn mirror(self, i: usize) -> Point {
        debug_assert!(i >= 1 && i <= self.dim());
        Point::from_raw(self.dim(), self.bits() ^ (1 << (i - 1)))
    }

    /// Parse the n-character `0`/`1` form, `a^1` first.
    pub fn parse(text: &str) -> Result<Self> {
        let dim = text.chars().count();
        if dim > MAX_DIM {
            return Err(Error::DimensionOutOfRange(dim));
        }
        let mut bits = 0u32;
        for (i, c) in text.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1 << i,
                other => {
                    return Err(Error::Parse {
                        line: 0,
                        message: format!("unexpected character {other:?} in point {text:?}"),
                    })
                }
            }
        }
        Point::new(dim, bits)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.dim() {
            f.write_str(if self.coord(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Point({self})")
    }
}

impl FromStr for Point {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Point::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Point {
        s.parse().unwrap()
    }

    #[test]
    fn weight_examples() {
        assert_eq!(p("000").weight(), 0);
        assert_eq!(p("1011").weight(), 3);
        assert_eq!(p("11111").weight(), 5);
    }

    #[test]
    fn leq_examples() {
        assert!(p("010").leq(p("011")).unwrap());
        assert!(!p("010").leq(p("101")).unwrap());
        assert!(p("110").leq(p("110")).unwrap());
        assert_eq!(
            p("01").leq(p("011")),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn covers_examples() {
        assert!(p("011").covers(p("001")).unwrap());
        assert!(!p("111").covers(p("001")).unwrap());
        assert!(!p("011").covers(p("100")).unwrap());
        assert!(p("011").covers(p("1101")).is_err());
    }

    #[test]
    fn packing_is_first_coordinate_low_bit() {
        assert_eq!(p("100").bits(), 1);
        assert_eq!(p("011").bits(), 6);
        assert_eq!(p("011").to_string(), "011");
        assert_eq!(Point::new(3, 6).unwrap().to_string(), "011");
    }

    #[test]
    fn rejects_bad_points() {
        assert!(Point::new(2, 4).is_err());
        assert!(Point::new(17, 0).is_err());
        assert!("01x".parse::<Point>().is_err());
    }

    #[test]
    fn order_axioms_exhaustive_up_to_four() {
        for n in 0..=4 {
            let pts: Vec<Point> = (0..1u32 << n).map(|b| Point::new(n, b).unwrap()).collect();
            for &a in &pts {
                assert!(a.leq(a).unwrap());
                assert!(a.weight() <= n);
                for &b in &pts {
                    if a.leq(b).unwrap() && b.leq(a).unwrap() {
                        assert_eq!(a, b);
                    }
                    if b.covers(a).unwrap() {
                        assert!(a.leq(b).unwrap());
                        assert_eq!(b.weight(), a.weight() + 1);
                    }
                    for &c in &pts {
                        if a.leq(b).unwrap() && b.leq(c).unwrap() {
                            assert!(a.leq(c).unwrap());
                        }
                    }
                }
            }
        }
    }
}
