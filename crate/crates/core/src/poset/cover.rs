use std::fmt;

use serde::Serialize;

use crate::poset::{Point, Subposet};

/// Which cover relation a predicate is evaluated under.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CoverMode {
    /// `x < y` inside the subposet with no member strictly between them.
    Induced,
    /// The cube's own relation: `x < y` with a weight gap of one. This is
    /// the reading under which the layer constructions are complete.
    #[default]
    Ambient,
}

impl std::str::FromStr for CoverMode {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "induced" => Ok(CoverMode::Induced),
            "ambient" => Ok(CoverMode::Ambient),
            other => Err(crate::Error::InvalidArgument(format!(
                "unknown cover mode {other:?}"
            ))),
        }
    }
}

impl fmt::Display for CoverMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoverMode::Induced => "induced",
            CoverMode::Ambient => "ambient",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CoverPair {
    pub lower: Point,
    pub upper: Point,
    pub mode: CoverMode,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// Apex below both arms.
    Up,
    /// Apex above both arms.
    Down,
}

/// A three-point V: an apex covered by (or covering) two arms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct V3Witness {
    pub apex: Point,
    /// Stored with the numerically smaller arm first.
    pub arms: (Point, Point),
    pub orientation: Orientation,
}

impl V3Witness {
    pub fn points(&self) -> [Point; 3] {
        [self.apex, self.arms.0, self.arms.1]
    }
}

impl fmt::Display for V3Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dir = match self.orientation {
            Orientation::Up => "up",
            Orientation::Down => "down",
        };
        write!(
            f,
            "apex {} arms {{{}, {}}} ({dir})",
            self.apex, self.arms.0, self.arms.1
        )
    }
}

#[inline]
fn below(x: usize, y: usize) -> bool {
    x != y && x & !y == 0
}

#[inline]
fn ambient_below(x: usize, y: usize) -> bool {
    below(x, y) && (y ^ x).count_ones() == 1
}

/// Upper and lower cover neighbours of every member, indexed like `points`.
pub(crate) struct CoverTable {
    pub points: Vec<Point>,
    pub up: Vec<Vec<usize>>,
    pub down: Vec<Vec<usize>>,
}

impl CoverTable {
    pub fn new(s: &Subposet, mode: CoverMode) -> Self {
        let points = s.points();
        let bits: Vec<usize> = points.iter().map(|p| p.bits()).collect();
        let m = bits.len();
        let mut up = vec![Vec::new(); m];
        let mut down = vec![Vec::new(); m];
        for i in 0..m {
            for j in i + 1..m {
                // Numeric order is a linear extension, so only j > i can be above i.
                let is_cover = match mode {
                    CoverMode::Ambient => ambient_below(bits[i], bits[j]),
                    CoverMode::Induced => {
                        below(bits[i], bits[j])
                            && !(i + 1..j).any(|k| below(bits[i], bits[k]) && below(bits[k], bits[j]))
                    }
                };
                if is_cover {
                    up[i].push(j);
                    down[j].push(i);
                }
            }
        }
        CoverTable { points, up, down }
    }

    pub fn pairs(&self, mode: CoverMode) -> Vec<CoverPair> {
        let mut out = Vec::new();
        for (i, ups) in self.up.iter().enumerate() {
            for &j in ups {
                out.push(CoverPair {
                    lower: self.points[i],
                    upper: self.points[j],
                    mode,
                });
            }
        }
        out
    }
}

/// Cover pairs of `s` under its own induced order, sorted by (lower, upper).
pub fn induced_cover_pairs(s: &Subposet) -> Vec<CoverPair> {
    CoverTable::new(s, CoverMode::Induced).pairs(CoverMode::Induced)
}

/// Pairs of members that are covers in the ambient cube.
pub fn ambient_cover_pairs(s: &Subposet) -> Vec<CoverPair> {
    CoverTable::new(s, CoverMode::Ambient).pairs(CoverMode::Ambient)
}

/// Find the smallest V3 pattern in `s` under the given cover reading.
///
/// Apexes are scanned in ascending order; for one apex the numerically
/// smallest pair of arms wins, which is always a downward pair when both
/// orientations exist.
pub fn find_v3(s: &Subposet, mode: CoverMode) -> Option<V3Witness> {
    let table = CoverTable::new(s, mode);
    for (i, &apex) in table.points.iter().enumerate() {
        let pick = |nbrs: &[usize], orientation| {
            (nbrs.len() >= 2).then(|| V3Witness {
                apex,
                arms: (table.points[nbrs[0]], table.points[nbrs[1]]),
                orientation,
            })
        };
        let found = pick(&table.down[i], Orientation::Down).or_else(|| pick(&table.up[i], Orientation::Up));
        if let Some(w) = found {
            debug_assert!(!w.arms.0.comparable(w.arms.1).unwrap());
            if mode == CoverMode::Ambient {
                debug_assert_eq!(w.arms.0.weight(), w.arms.1.weight());
            }
            return Some(w);
        }
    }
    None
}
