//! Memoized recursive counting of local Dedekind numbers.
//!
//! `D(S)` is split on one pivot point at a time: mapping the pivot to 1 fixes
//! its up-set, mapping it to 0 fixes its down-set, and the two residuals are
//! counted recursively. Incomparable components multiply, antichains
//! contribute `2^k` directly, and residuals are cached under their canonical
//! form in the cube's symmetry group.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::count::BigCount;
use crate::error::{Error, Result};
use crate::frame::{slots, Frame};
use crate::partition::construct::{construct_layer_subset, Parity};
use crate::partition::memo::{canonical_mask, MemoKey, MemoTable};
use crate::partition::terms::{check_subset, for_each_pivot_map, mask_in, DEFAULT_TERM_LIMIT};
use crate::poset::Subposet;

/// How the recursion picks its pivots.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum PivotStrategy {
    /// One point of median weight with the most induced cover neighbours.
    #[default]
    MedianDegree,
    /// One point comparable with the most other members.
    MaxComparability,
    /// Split once on a caller-supplied pivot set, then recurse by default.
    Fixed(Subposet),
    /// Split once on the alternating weight layers of the given parity.
    Layer(Parity),
}

impl fmt::Display for PivotStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PivotStrategy::MedianDegree => f.write_str("median-degree"),
            PivotStrategy::MaxComparability => f.write_str("max-comparability"),
            PivotStrategy::Fixed(a) => write!(f, "fixed({} points)", a.len()),
            PivotStrategy::Layer(p) => write!(f, "layer-{p}"),
        }
    }
}

impl FromStr for PivotStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "median-degree" | "default" => Ok(PivotStrategy::MedianDegree),
            "max-comparability" => Ok(PivotStrategy::MaxComparability),
            "layer-even" => Ok(PivotStrategy::Layer(Parity::Even)),
            "layer-odd" => Ok(PivotStrategy::Layer(Parity::Odd)),
            other => Err(Error::InvalidArgument(format!("unknown strategy {other:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct EngineConfig {
    /// Worker threads; 1 runs everything on the calling thread.
    pub threads: usize,
    /// Maximum number of expanded (uncached) recursion nodes.
    pub node_budget: Option<u64>,
    pub time_limit: Option<Duration>,
    /// Fold order duality into cache keys.
    pub duality: bool,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            threads: 1,
            node_budget: None,
            time_limit: None,
            duality: true,
        }
    }
}

/// Exact `D(S)` with the default single-threaded configuration.
pub fn count_via_partition(
    s: &Subposet,
    strategy: &PivotStrategy,
    cache: Option<&MemoTable>,
) -> Result<BigCount> {
    count_via_partition_with(s, strategy, cache, &EngineConfig::default())
}

pub fn count_via_partition_with(
    s: &Subposet,
    strategy: &PivotStrategy,
    cache: Option<&MemoTable>,
    config: &EngineConfig,
) -> Result<BigCount> {
    let (frame, members) = Frame::for_subposet(s)?;
    let engine = Engine {
        frame: &frame,
        cache,
        point_rule: match strategy {
            PivotStrategy::MaxComparability => PointRule::MaxComparability,
            _ => PointRule::MedianDegree,
        },
        budget: Budget::new(config),
        duality: config.duality,
        parallel: config.threads > 1,
    };
    let top = |engine: &Engine| -> Result<BigCount> {
        match strategy {
            PivotStrategy::MedianDegree | PivotStrategy::MaxComparability => {
                engine.count(members, 0)
            }
            PivotStrategy::Fixed(pivots) => {
                check_subset(pivots, s)?;
                engine.count_split(members, mask_in(&frame, pivots).expect("pivots in frame"))
            }
            PivotStrategy::Layer(parity) => {
                let layer = construct_layer_subset(s.dim().max(2), *parity)?;
                let pivots = if s.dim() >= 2 {
                    layer.intersection(s)?
                } else {
                    Subposet::empty(s.dim())?
                };
                engine.count_split(members, mask_in(&frame, &pivots).expect("pivots in frame"))
            }
        }
    };
    if engine.parallel {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.threads)
            .build()
            .map_err(|e| Error::InvalidArgument(e.to_string()))?;
        pool.install(|| top(&engine))
    } else {
        top(&engine)
    }
}

#[derive(Clone, Copy)]
enum PointRule {
    MedianDegree,
    MaxComparability,
}

struct Budget {
    nodes: AtomicU64,
    limit: u64,
    deadline: Option<Instant>,
    tripped: AtomicBool,
}

impl Budget {
    fn new(config: &EngineConfig) -> Self {
        Budget {
            nodes: AtomicU64::new(0),
            limit: config.node_budget.unwrap_or(u64::MAX),
            deadline: config.time_limit.map(|t| Instant::now() + t),
            tripped: AtomicBool::new(false),
        }
    }

    fn tick(&self) -> Result<()> {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed);
        if self.tripped.load(Ordering::Relaxed) {
            return Err(Error::BudgetExceeded("recursion stopped".into()));
        }
        if n >= self.limit {
            self.tripped.store(true, Ordering::Relaxed);
            return Err(Error::BudgetExceeded(format!("more than {} recursion nodes", self.limit)));
        }
        if n.is_multiple_of(1024) {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.tripped.store(true, Ordering::Relaxed);
                    return Err(Error::BudgetExceeded("time limit reached".into()));
                }
            }
        }
        Ok(())
    }
}

/// Depth below which branches are handed to the thread pool.
const PARALLEL_DEPTH: usize = 14;

struct Engine<'a> {
    frame: &'a Frame,
    cache: Option<&'a MemoTable>,
    point_rule: PointRule,
    budget: Budget,
    duality: bool,
    parallel: bool,
}

impl Engine<'_> {
    fn count(&self, mask: u128, depth: usize) -> Result<BigCount> {
        if mask == 0 {
            return Ok(BigCount::one());
        }
        let comps = self.frame.components(mask);
        if comps.len() == 1 {
            return self.count_connected(mask, depth);
        }
        if self.parallel && depth < PARALLEL_DEPTH {
            comps
                .into_par_iter()
                .map(|c| self.count_connected(c, depth + 1))
                .try_reduce(BigCount::one, |a, b| Ok(a * b))
        } else {
            comps
                .into_iter()
                .map(|c| self.count_connected(c, depth + 1))
                .product()
        }
    }

    fn key(&self, mask: u128) -> MemoKey {
        if self.frame.cube {
            MemoKey::Cube {
                dim: self.frame.dim as u8,
                mask: canonical_mask(self.frame.dim, mask, self.duality),
            }
        } else {
            MemoKey::Identity {
                dim: self.frame.dim as u8,
                points: slots(mask).map(|s| self.frame.points[s].bits() as u16).collect(),
            }
        }
    }

    fn count_connected(&self, mask: u128, depth: usize) -> Result<BigCount> {
        if self.frame.is_antichain(mask) {
            return Ok(BigCount::pow2(mask.count_ones() as usize));
        }
        let key = self.cache.map(|_| self.key(mask));
        if let (Some(cache), Some(key)) = (self.cache, key.as_ref()) {
            if let Some(v) = cache.get(key) {
                return Ok(v);
            }
        }
        self.budget.tick()?;
        let x = self.pivot(mask);
        let raised = mask & !self.frame.up[x];
        let lowered = mask & !self.frame.down[x];
        let (a, b) = if self.parallel && depth < PARALLEL_DEPTH {
            rayon::join(|| self.count(raised, depth + 1), || self.count(lowered, depth + 1))
        } else {
            (self.count(raised, depth + 1), self.count(lowered, depth + 1))
        };
        let total = a? + &b?;
        if let (Some(cache), Some(key)) = (self.cache, key) {
            cache.insert(key, total.clone());
        }
        Ok(total)
    }

    fn pivot(&self, mask: u128) -> usize {
        match self.point_rule {
            PointRule::MedianDegree => self.median_degree_pivot(mask),
            PointRule::MaxComparability => slots(mask)
                .max_by_key(|&s| {
                    let reach = (self.frame.up[s] | self.frame.down[s]) & mask;
                    (reach.count_ones(), std::cmp::Reverse(s))
                })
                .expect("non-empty mask"),
        }
    }

    fn median_degree_pivot(&self, mask: u128) -> usize {
        let weight = |s: usize| self.frame.points[s].weight();
        let mut weights: Vec<usize> = slots(mask).map(weight).collect();
        weights.sort_unstable();
        let median = weights[(weights.len() - 1) / 2];
        slots(mask)
            .filter(|&s| weight(s) == median)
            .max_by_key(|&s| {
                let degree = self.frame.covers_within(s, mask, true).count_ones()
                    + self.frame.covers_within(s, mask, false).count_ones();
                (degree, std::cmp::Reverse(s))
            })
            .expect("median weight occurs in the mask")
    }

    /// Split once over every monotone map on `pivots`, then recurse.
    fn count_split(&self, members: u128, pivots: u128) -> Result<BigCount> {
        let mut residuals = Vec::new();
        for_each_pivot_map(self.frame, members, pivots, DEFAULT_TERM_LIMIT, |_, r| {
            residuals.push(r);
            Ok(())
        })?;
        if self.parallel {
            residuals
                .into_par_iter()
                .map(|r| self.count(r, 1))
                .try_reduce(BigCount::zero, |a, b| Ok(a + &b))
        } else {
            residuals.into_iter().map(|r| self.count(r, 1)).sum()
        }
    }
}

/// `(D(E^n - S_{a,1}), D(E^n - S_{a,0}))`; the two parts sum to `D_n`.
pub fn corollary_split(a: crate::Point) -> Result<(BigCount, BigCount)> {
    let cube = Subposet::cube(a.dim())?;
    let cache = MemoTable::new();
    let strategy = PivotStrategy::default();
    let above = cube.difference(&Subposet::upper_set(a))?;
    let below = cube.difference(&Subposet::lower_set(a))?;
    Ok((
        count_via_partition(&above, &strategy, Some(&cache))?,
        count_via_partition(&below, &strategy, Some(&cache))?,
    ))
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::count_monotone_oracle;
    use crate::Point;

    fn set(dim: usize, pts: &[&str]) -> Subposet {
        Subposet::parse_points(dim, pts).unwrap()
    }

    #[test]
    fn empty_and_small_cubes() {
        let strat = PivotStrategy::default();
        assert_eq!(count_via_partition(&Subposet::empty(3).unwrap(), &strat, None).unwrap(), 1);
        let expected = [2u64, 3, 6, 20, 168];
        for (n, &d) in expected.iter().enumerate() {
            let cube = Subposet::cube(n).unwrap();
            assert_eq!(count_monotone_oracle(&cube).unwrap(), d);
            assert_eq!(count_via_partition(&cube, &strat, None).unwrap(), d);
        }
    }

    #[test]
    fn corollary_examples() {
        let (a, b) = corollary_split("01".parse().unwrap()).unwrap();
        assert_eq!((a, b), (BigCount::from(3), BigCount::from(3)));
        let (a, b) = corollary_split("1".parse().unwrap()).unwrap();
        assert_eq!((a, b), (BigCount::from(2), BigCount::from(1)));
        for bits in 0..8 {
            let (a, b) = corollary_split(Point::new(3, bits).unwrap()).unwrap();
            assert_eq!(a + b, BigCount::from(20));
        }
    }

    #[test]
    fn strategies_agree() {
        let s = set(4, &["0000", "1000", "1100", "0110", "0111", "1111", "0101", "0010"]);
        let oracle = count_monotone_oracle(&s).unwrap();
        let strategies = [
            PivotStrategy::MedianDegree,
            PivotStrategy::MaxComparability,
            PivotStrategy::Layer(Parity::Even),
            PivotStrategy::Layer(Parity::Odd),
            PivotStrategy::Fixed(set(4, &["1100", "0111"])),
        ];
        for strat in &strategies {
            for cached in [false, true] {
                let cache = MemoTable::new();
                let got = count_via_partition(&s, strat, cached.then_some(&cache)).unwrap();
                assert_eq!(got, oracle, "{strat}");
            }
        }
    }

    #[test]
    fn fixed_pivots_must_be_inside() {
        let s = set(2, &["00", "01"]);
        let r = count_via_partition(&s, &PivotStrategy::Fixed(set(2, &["11"])), None);
        assert_eq!(r, Err(Error::NotASubset));
    }

    #[test]
    fn node_budget_is_enforced() {
        let cfg = EngineConfig {
            node_budget: Some(3),
            ..EngineConfig::default()
        };
        let r = count_via_partition_with(&Subposet::cube(5).unwrap(), &PivotStrategy::default(), None, &cfg);
        assert!(matches!(r, Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn threaded_counts_match() {
        let cube = Subposet::cube(5).unwrap();
        let cfg = EngineConfig {
            threads: 4,
            ..EngineConfig::default()
        };
        let cache = MemoTable::new();
        let v = count_via_partition_with(&cube, &PivotStrategy::default(), Some(&cache), &cfg).unwrap();
        assert_eq!(v, 7581);
    }

    #[test]
    fn counts_above_dim_seven() {
        // chain of 9 points in E^8 plus an antichain pair elsewhere
        let mut s = Subposet::empty(8).unwrap();
        for w in 0..=8 {
            s.insert(Point::new(8, (1 << w) - 1).unwrap());
        }
        let v = count_via_partition(&s, &PivotStrategy::default(), Some(&MemoTable::new())).unwrap();
        assert_eq!(v, 10);
        let layer = Subposet::filter_cube(8, |p| p.weight() == 4).unwrap();
        assert_eq!(count_via_partition(&layer, &PivotStrategy::default(), None).unwrap(), BigCount::pow2(70));
    }
}
