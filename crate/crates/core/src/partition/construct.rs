//! Constructions of minimal complete pivot sets and the minimality check.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::complete::completeness_witness;
use crate::poset::{find_v3, CoverMode, Point, Subposet};
use crate::MAX_DIM;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn matches(self, weight: usize) -> bool {
        weight.is_multiple_of(2) == (self == Parity::Even)
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

impl FromStr for Parity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "even" => Ok(Parity::Even),
            "odd" => Ok(Parity::Odd),
            other => Err(Error::InvalidArgument(format!("unknown parity {other:?}"))),
        }
    }
}

/// Every point of `E^n` whose weight has the given parity; `2^(n-1)` points.
pub fn construct_layer_subset(n: usize, parity: Parity) -> Result<Subposet> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "layer subsets need n >= 2, got {n}"
        )));
    }
    Subposet::filter_cube(n, |p| parity.matches(p.weight()))
}

/// Insert coordinate `a^i = 1` into every point of a seed given in `E^(n-1)`.
fn lift_seed(n: usize, i: usize, seed: &Subposet) -> Result<Subposet> {
    if seed.dim() == n {
        return Ok(seed.clone());
    }
    if seed.dim() + 1 != n {
        return Err(Error::DimensionMismatch {
            left: seed.dim(),
            right: n - 1,
        });
    }
    let low = (1usize << (i - 1)) - 1;
    Subposet::from_points(
        n,
        seed.iter().map(|q| {
            let b = q.bits();
            Point::from_raw(n, (b & low) | 1 << (i - 1) | (b & !low) << 1)
        }),
    )
}

/// `A1` together with its mirror complement in the lower subcube: the lower
/// points `p` with `mirror_i(p)` not in `A1`. No precondition checks.
pub fn mirror_complement_union(n: usize, i: usize, upper_seed: &Subposet) -> Result<Subposet> {
    let lower = Subposet::subcube(n, i, false)?;
    let mut out = upper_seed.clone();
    for p in lower.iter() {
        if !upper_seed.contains(p.mirror(i)) {
            out.insert(p);
        }
    }
    Ok(out)
}

/// Build a complete partition of `E^n` from a seed on the upper subcube
/// along coordinate `a^i` (1-based).
///
/// The seed may be given in `E^(n-1)` (it is lifted with `a^i = 1`) or as
/// points of `E^n` lying in the upper subcube. It must completely partition
/// the upper subcube and contain no V3 itself.
pub fn construct_recursive_partition(
    n: usize,
    i: usize,
    seed: &Subposet,
    mode: CoverMode,
) -> Result<Subposet> {
    if n == 0 || n > MAX_DIM || i == 0 || i > n {
        return Err(Error::InvalidArgument(format!(
            "coordinate {i} is outside 1..={n}"
        )));
    }
    let upper = Subposet::subcube(n, i, true)?;
    let a1 = lift_seed(n, i, seed)?;
    if !a1.is_subset(&upper) {
        return Err(Error::Precondition(format!(
            "seed is not contained in the upper subcube along coordinate {i}"
        )));
    }
    if let Some(w) = completeness_witness(&a1, &upper, mode)? {
        return Err(Error::Precondition(format!(
            "seed does not completely partition the upper subcube: {w} remains"
        )));
    }
    if let Some(w) = find_v3(&a1, mode) {
        return Err(Error::Precondition(format!("seed contains a V3: {w}")));
    }
    mirror_complement_union(n, i, &a1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Minimality {
    Minimal,
    CompleteButNotMinimal,
    NotComplete,
}

impl fmt::Display for Minimality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Minimality::Minimal => "minimal",
            Minimality::CompleteButNotMinimal => "complete_but_not_minimal",
            Minimality::NotComplete => "not_complete",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalityReport {
    pub class: Minimality,
    pub size: usize,
    /// `2^(n-1)`.
    pub bound: usize,
    /// Minimal sets must have exactly `bound` points and non-minimal complete
    /// sets strictly more; vacuous for incomplete sets.
    pub size_law_holds: bool,
}

/// Classify `pivots` as a complete partition of `E^n` and check the size law.
pub fn minimality_check(pivots: &Subposet, n: usize, mode: CoverMode) -> Result<MinimalityReport> {
    let cube = Subposet::cube(n)?;
    let bound = if n == 0 { 1 } else { 1usize << (n - 1) };
    let size = pivots.len();
    let (class, size_law_holds) = if completeness_witness(pivots, &cube, mode)?.is_some() {
        (Minimality::NotComplete, true)
    } else if find_v3(pivots, mode).is_some() {
        (Minimality::CompleteButNotMinimal, size > bound)
    } else {
        (Minimality::Minimal, size == bound)
    };
    Ok(MinimalityReport {
        class,
        size,
        bound,
        size_law_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::complete::is_complete_partition;

    fn set(dim: usize, pts: &[&str]) -> Subposet {
        Subposet::parse_points(dim, pts).unwrap()
    }

    #[test]
    fn layer_examples() {
        assert_eq!(
            construct_layer_subset(3, Parity::Even).unwrap(),
            set(3, &["000", "011", "101", "110"])
        );
        assert_eq!(construct_layer_subset(4, Parity::Even).unwrap().len(), 8);
        assert_eq!(
            construct_layer_subset(3, Parity::Odd).unwrap(),
            set(3, &["001", "010", "100", "111"])
        );
        assert!(construct_layer_subset(1, Parity::Even).is_err());
    }

    #[test]
    fn lifting_inserts_the_coordinate() {
        let seed = set(2, &["01"]);
        assert_eq!(lift_seed(3, 1, &seed).unwrap(), set(3, &["101"]));
        assert_eq!(lift_seed(3, 2, &seed).unwrap(), set(3, &["011"]));
        assert_eq!(lift_seed(3, 3, &seed).unwrap(), set(3, &["011"]));
        assert_eq!(lift_seed(3, 3, &set(2, &["10"])).unwrap(), set(3, &["101"]));
    }

    #[test]
    fn construction_on_the_square() {
        for mode in [CoverMode::Ambient, CoverMode::Induced] {
            let a = construct_recursive_partition(2, 2, &set(2, &["11"]), mode).unwrap();
            assert_eq!(a, set(2, &["00", "11"]));
            assert!(is_complete_partition(&a, &Subposet::cube(2).unwrap(), mode).unwrap());
        }
    }

    #[test]
    fn construction_from_even_face() {
        let seed = construct_layer_subset(2, Parity::Even).unwrap();
        let a = construct_recursive_partition(3, 3, &seed, CoverMode::Ambient).unwrap();
        assert_eq!(a.len(), 4);
        assert!(is_complete_partition(&a, &Subposet::cube(3).unwrap(), CoverMode::Ambient).unwrap());
    }

    #[test]
    fn full_upper_face_is_rejected() {
        let face = Subposet::subcube(3, 3, true).unwrap();
        let err = construct_recursive_partition(3, 3, &face, CoverMode::Ambient).unwrap_err();
        assert!(matches!(err, Error::Precondition(ref m) if m.contains("V3")), "{err}");
        // Without the checks the union leaves the whole lower face uncovered.
        let forced = mirror_complement_union(3, 3, &face).unwrap();
        assert_eq!(forced, face);
        assert!(!is_complete_partition(&forced, &Subposet::cube(3).unwrap(), CoverMode::Ambient).unwrap());
    }

    #[test]
    fn minimality_examples() {
        let layer = construct_layer_subset(4, Parity::Even).unwrap();
        let r = minimality_check(&layer, 4, CoverMode::Ambient).unwrap();
        assert_eq!((r.class, r.size, r.size_law_holds), (Minimality::Minimal, 8, true));
        for n in 2..=4 {
            let r = minimality_check(&Subposet::cube(n).unwrap(), n, CoverMode::Ambient).unwrap();
            assert_eq!(r.class, Minimality::CompleteButNotMinimal);
            assert!(r.size_law_holds);
        }
        let r = minimality_check(&Subposet::empty(2).unwrap(), 2, CoverMode::Ambient).unwrap();
        assert_eq!(r.class, Minimality::NotComplete);
    }
}
