//! Canonical keys for residual subposets and the shared memo table.

use std::hash::{DefaultHasher, Hash, Hasher};
use std::num::NonZeroUsize;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::OnceLock;

use lru::LruCache;
use parking_lot::Mutex;
use serde::Serialize;

use crate::count::BigCount;
use crate::poset::Subposet;

/// Largest dimension canonicalized under the full coordinate permutation group.
pub const CANONICAL_MAX_DIM: usize = 7;

/// Cache key for a subposet. Equal keys imply equal local Dedekind numbers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MemoKey {
    /// Minimum membership mask over the symmetry orbit of a subset of `E^dim`.
    Cube { dim: u8, mask: u128 },
    /// Raw member list, used above `CANONICAL_MAX_DIM`.
    Identity { dim: u8, points: Box<[u16]> },
}

/// Canonical key with duality folding enabled.
pub fn canonical_key(s: &Subposet) -> MemoKey {
    canonical_key_with(s, true)
}

pub fn canonical_key_with(s: &Subposet, duality: bool) -> MemoKey {
    if s.dim() <= CANONICAL_MAX_DIM {
        MemoKey::Cube {
            dim: s.dim() as u8,
            mask: canonical_mask(s.dim(), s.to_mask128(), duality),
        }
    } else {
        MemoKey::Identity {
            dim: s.dim() as u8,
            points: s.iter().map(|p| p.bits() as u16).collect(),
        }
    }
}

/// One transposition of coordinates as a delta swap on the truth-table mask.
#[derive(Clone, Copy)]
struct DeltaSwap {
    select: u128,
    shift: u32,
}

impl DeltaSwap {
    fn new(dim: usize, i: usize, j: usize) -> Self {
        let (i, j) = (i.min(j), i.max(j));
        let mut select = 0u128;
        for p in 0..1usize << dim {
            if p >> i & 1 == 1 && p >> j & 1 == 0 {
                select |= 1 << p;
            }
        }
        DeltaSwap {
            select,
            shift: ((1u32 << j) - (1u32 << i)),
        }
    }

    #[inline]
    fn apply(self, m: u128) -> u128 {
        let t = ((m >> self.shift) ^ m) & self.select;
        m ^ t ^ (t << self.shift)
    }
}

/// Transposition sequence visiting every coordinate permutation (Heap's order).
fn heap_swaps(dim: usize) -> Vec<DeltaSwap> {
    let mut out = Vec::new();
    let mut c = vec![0usize; dim];
    let mut i = 1;
    while i < dim {
        if c[i] < i {
            let j = if i % 2 == 0 { 0 } else { c[i] };
            out.push(DeltaSwap::new(dim, j, i));
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

fn swaps_for(dim: usize) -> &'static [DeltaSwap] {
    static TABLES: OnceLock<Vec<Vec<DeltaSwap>>> = OnceLock::new();
    &TABLES.get_or_init(|| (0..=CANONICAL_MAX_DIM).map(heap_swaps).collect())[dim]
}

/// Reverse the `2^dim` low bits: the image under complementing every coordinate.
#[inline]
pub(crate) fn dual_mask(dim: usize, m: u128) -> u128 {
    m.reverse_bits() >> (128 - (1u32 << dim))
}

pub(crate) fn canonical_mask(dim: usize, mask: u128, duality: bool) -> u128 {
    debug_assert!(dim <= CANONICAL_MAX_DIM);
    let mut m = mask;
    let mut best = m;
    if duality {
        let mut d = dual_mask(dim, mask);
        best = best.min(d);
        for s in swaps_for(dim) {
            m = s.apply(m);
            d = s.apply(d);
            best = best.min(m).min(d);
        }
    } else {
        for s in swaps_for(dim) {
            m = s.apply(m);
            best = best.min(m);
        }
    }
    best
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CacheStats {
    pub hits: u64,
    pub misses: u64,
}

const SHARDS: usize = 64;

/// Concurrent memo table keyed by `MemoKey`, optionally bounded with
/// least-recently-used eviction. Inserting the same key twice is harmless.
pub struct MemoTable {
    shards: Vec<Mutex<LruCache<MemoKey, BigCount>>>,
    hits: AtomicU64,
    misses: AtomicU64,
}

impl Default for MemoTable {
    fn default() -> Self {
        MemoTable::new()
    }
}

impl MemoTable {
    pub fn new() -> Self {
        MemoTable::build(LruCache::unbounded)
    }

    /// Table holding at most roughly `capacity` entries.
    pub fn bounded(capacity: usize) -> Self {
        let per_shard = NonZeroUsize::new(capacity.div_ceil(SHARDS).max(1)).expect("non-zero");
        MemoTable::build(|| LruCache::new(per_shard))
    }

    fn build(make: impl Fn() -> LruCache<MemoKey, BigCount>) -> Self {
        MemoTable {
            shards: (0..SHARDS).map(|_| Mutex::new(make())).collect(),
            hits: AtomicU64::new(0),
            misses: AtomicU64::new(0),
        }
    }

    fn shard(&self, key: &MemoKey) -> &Mutex<LruCache<MemoKey, BigCount>> {
        let mut h = DefaultHasher::new();
        key.hash(&mut h);
        &self.shards[h.finish() as usize % SHARDS]
    }

    pub fn get(&self, key: &MemoKey) -> Option<BigCount> {
        let found = self.shard(key).lock().get(key).cloned();
        let counter = if found.is_some() { &self.hits } else { &self.misses };
        counter.fetch_add(1, Ordering::Relaxed);
        found
    }

    pub fn insert(&self, key: MemoKey, value: BigCount) {
        self.shard(&key).lock().put(key, value);
    }

    pub fn len(&self) -> usize {
        self.shards.iter().map(|s| s.lock().len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn stats(&self) -> CacheStats {
        CacheStats {
            hits: self.hits.load(Ordering::Relaxed),
            misses: self.misses.load(Ordering::Relaxed),
        }
    }
}
