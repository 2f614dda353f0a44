//! Predicates for complete partitions: the V3 criterion, the square-face
//! criterion on the full cube, and two definitional checks built on the
//! split itself.

use serde::Serialize;

use crate::count::BigCount;
use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::monotone::count_monotone_oracle;
use crate::partition::terms::{check_subset, partition_terms, PartitionTerm};
use crate::poset::iso::cover_preserving_isomorphic_with_limit;
use crate::poset::{find_v3, CoverMode, Point, Subposet, V3Witness};

/// `D_0 ..= D_6`, as produced by the oracle.
pub const DEDEKIND_SEQUENCE: [u64; 7] = [2, 3, 6, 20, 168, 7581, 7_828_354];

/// `D_7`.
pub const DEDEKIND_7: u64 = 2_414_682_040_998;

/// Witness that `pivots` fails to completely partition `s`, or `None`.
pub fn completeness_witness(
    pivots: &Subposet,
    s: &Subposet,
    mode: CoverMode,
) -> Result<Option<V3Witness>> {
    check_subset(pivots, s)?;
    Ok(find_v3(&s.difference(pivots)?, mode))
}

/// True when `s - pivots` contains no V3 under the chosen cover reading.
pub fn is_complete_partition(pivots: &Subposet, s: &Subposet, mode: CoverMode) -> Result<bool> {
    Ok(completeness_witness(pivots, s, mode)?.is_none())
}

/// Four points forming a square: bottom, two incomparable middles, top.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Square {
    #[serde(serialize_with = "as_text")]
    pub bottom: Point,
    #[serde(serialize_with = "pair_as_text")]
    pub middles: (Point, Point),
    #[serde(serialize_with = "as_text")]
    pub top: Point,
}

fn as_text<S: serde::Serializer>(p: &Point, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(p)
}

fn pair_as_text<S: serde::Serializer>(
    p: &(Point, Point),
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(2))?;
    seq.serialize_element(&p.0.to_string())?;
    seq.serialize_element(&p.1.to_string())?;
    seq.end()
}

impl Square {
    fn satisfied_by(&self, pivots: &Subposet) -> bool {
        pivots.contains(self.middles.0)
            || pivots.contains(self.middles.1)
            || (pivots.contains(self.bottom) && pivots.contains(self.top))
    }
}

/// Squares of `E^n`: the 2-faces under `Ambient`; under `Induced`, every
/// four points `b < m1, m2 < t` with `m1 || m2`.
pub fn squares(n: usize, mode: CoverMode) -> Result<Vec<Square>> {
    let cube = Subposet::cube(n)?;
    let mut out = Vec::new();
    let pt = |bits| Point::from_raw(n, bits);
    for b in 0..1usize << n {
        let free = !b & ((1 << n) - 1);
        match mode {
            CoverMode::Ambient => {
                for i in 0..n {
                    for j in i + 1..n {
                        if free >> i & 1 == 1 && free >> j & 1 == 1 {
                            out.push(Square {
                                bottom: pt(b),
                                middles: (pt(b | 1 << i), pt(b | 1 << j)),
                                top: pt(b | 1 << i | 1 << j),
                            });
                        }
                    }
                }
            }
            CoverMode::Induced => {
                for t in cube.iter().map(Point::bits) {
                    if t & b != b || (t ^ b).count_ones() < 2 {
                        continue;
                    }
                    let span = t ^ b;
                    let inner: Vec<usize> = crate::poset::subposet_submasks(span)
                        .filter(|&m| m != 0 && m != span)
                        .collect();
                    for (k, &m1) in inner.iter().enumerate() {
                        for &m2 in &inner[k + 1..] {
                            if m1 & !m2 != 0 && m2 & !m1 != 0 {
                                out.push(Square {
                                    bottom: pt(b),
                                    middles: (pt(b | m1), pt(b | m2)),
                                    top: pt(t),
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// First square with no middle point in `pivots` and not both ends in it.
pub fn first_failing_square(pivots: &Subposet, n: usize, mode: CoverMode) -> Result<Option<Square>> {
    if pivots.dim() != n {
        return Err(Error::DimensionMismatch {
            left: pivots.dim(),
            right: n,
        });
    }
    Ok(squares(n, mode)?.into_iter().find(|sq| !sq.satisfied_by(pivots)))
}

/// The square-face form of the completeness criterion on `E^n`.
pub fn e2_condition_check(pivots: &Subposet, n: usize, mode: CoverMode) -> Result<bool> {
    Ok(first_failing_square(pivots, n, mode)?.is_none())
}

const FACTOR_STEP_BUDGET: u64 = 1_000_000;

/// True when `value` is a product of Dedekind numbers `D_0 ..= D_6`; 1 is
/// the empty product.
pub fn is_dedekind_product(value: &BigCount) -> Result<bool> {
    let factors: Vec<BigCount> = DEDEKIND_SEQUENCE.iter().map(|&d| BigCount::from(d)).collect();
    let mut steps = 0u64;
    factor(value.as_biguint(), &factors, factors.len() - 1, &mut steps)
}

fn factor(
    v: &num_bigint::BigUint,
    factors: &[BigCount],
    max: usize,
    steps: &mut u64,
) -> Result<bool> {
    use num_traits::{One, Zero};
    *steps += 1;
    if *steps > FACTOR_STEP_BUDGET {
        return Err(Error::BudgetExceeded(format!(
            "factorization of {v} over the Dedekind sequence"
        )));
    }
    if v.is_one() {
        return Ok(true);
    }
    for i in (0..=max).rev() {
        let d = factors[i].as_biguint();
        if (v % d).is_zero() && factor(&(v / d), factors, i, steps)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// First term of the split whose count is not a product of Dedekind numbers.
pub fn first_incomplete_term(
    pivots: &Subposet,
    s: &Subposet,
) -> Result<Option<(PartitionTerm, BigCount)>> {
    for term in partition_terms(s, pivots)? {
        let d = count_monotone_oracle(&term.residual)?;
        if !is_dedekind_product(&d)? {
            return Ok(Some((term, d)));
        }
    }
    Ok(None)
}

/// Completeness decided from the split itself: every term's count must be
/// a product of Dedekind numbers.
pub fn definitional_completeness_oracle(pivots: &Subposet, s: &Subposet) -> Result<bool> {
    Ok(first_incomplete_term(pivots, s)?.is_none())
}

/// Structural variant: every connected component of every residual must be
/// cover-preserving isomorphic to a cube `E^k`.
pub fn structural_completeness_oracle(pivots: &Subposet, s: &Subposet) -> Result<bool> {
    for term in partition_terms(s, pivots)? {
        let (frame, members) = Frame::for_subposet(&term.residual)?;
        for comp in frame.components(members) {
            if !is_cube_shaped(&frame.subposet(comp))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

const CUBE_SHAPE_LIMIT: usize = 16;

fn is_cube_shaped(comp: &Subposet) -> Result<bool> {
    let m = comp.len();
    if !m.is_power_of_two() {
        return Ok(false);
    }
    let k = m.trailing_zeros() as usize;
    cover_preserving_isomorphic_with_limit(comp, &Subposet::cube(k)?, CUBE_SHAPE_LIMIT)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::construct::{construct_layer_subset, Parity};

    fn set(dim: usize, pts: &[&str]) -> Subposet {
        Subposet::parse_points(dim, pts).unwrap()
    }

    #[test]
    fn complete_partition_examples() {
        let e4 = Subposet::cube(4).unwrap();
        let even = construct_layer_subset(4, Parity::Even).unwrap();
        assert!(is_complete_partition(&even, &e4, CoverMode::Ambient).unwrap());
        assert!(!is_complete_partition(&even, &e4, CoverMode::Induced).unwrap());

        let e2 = Subposet::cube(2).unwrap();
        for mode in [CoverMode::Induced, CoverMode::Ambient] {
            let w = completeness_witness(&Subposet::empty(2).unwrap(), &e2, mode).unwrap().unwrap();
            assert_eq!(w.apex.to_string(), "00");
            let s = Subposet::cube(3).unwrap();
            assert!(is_complete_partition(&s, &s, mode).unwrap());
        }
        assert_eq!(
            is_complete_partition(&set(2, &["11"]), &set(2, &["00"]), CoverMode::Induced),
            Err(Error::NotASubset)
        );
    }

    #[test]
    fn e2_examples() {
        let odd = construct_layer_subset(3, Parity::Odd).unwrap();
        assert!(e2_condition_check(&odd, 3, CoverMode::Ambient).unwrap());
        assert!(!e2_condition_check(&Subposet::empty(2).unwrap(), 2, CoverMode::Ambient).unwrap());
        assert!(e2_condition_check(&Subposet::cube(2).unwrap(), 2, CoverMode::Ambient).unwrap());
    }

    #[test]
    fn square_counts() {
        // 2-faces of E^n: C(n,2) * 2^(n-2)
        assert_eq!(squares(3, CoverMode::Ambient).unwrap().len(), 6);
        assert_eq!(squares(4, CoverMode::Ambient).unwrap().len(), 24);
        assert!(squares(3, CoverMode::Induced).unwrap().len() > 6);
        assert_eq!(squares(2, CoverMode::Induced).unwrap().len(), 1);
    }

    #[test]
    fn dedekind_products() {
        for (v, expect) in [(1u64, true), (4, true), (5, false), (9, true), (7, false), (40, true), (7581 * 6, true)] {
            assert_eq!(is_dedekind_product(&BigCount::from(v)).unwrap(), expect, "{v}");
        }
        assert!(is_dedekind_product(&BigCount::pow2(300)).unwrap());
    }

    #[test]
    fn definitional_examples() {
        let e2 = Subposet::cube(2).unwrap();
        assert!(definitional_completeness_oracle(&set(2, &["00", "11"]), &e2).unwrap());
        let up_v = set(2, &["00", "01", "10"]);
        assert!(!definitional_completeness_oracle(&Subposet::empty(2).unwrap(), &up_v).unwrap());
        let e3 = Subposet::cube(3).unwrap();
        assert!(definitional_completeness_oracle(&e3, &e3).unwrap());
    }

    #[test]
    fn structural_is_stricter_than_numeric() {
        // A 3-chain counts 4 = 2 * 2 but is not a cube.
        let chain = set(2, &["00", "10", "11"]);
        let none = Subposet::empty(2).unwrap();
        assert!(definitional_completeness_oracle(&none, &chain).unwrap());
        assert!(!structural_completeness_oracle(&none, &chain).unwrap());
        let e2 = Subposet::cube(2).unwrap();
        assert!(structural_completeness_oracle(&none, &e2).unwrap());
    }
}
