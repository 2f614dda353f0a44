//! Count monotone Boolean functions on E^n with the memoized engine and
//! compare against the direct oracle.
//!
//!     cargo run --release --example count_cube -- 5

use dedekind::partition::{count_via_partition, MemoTable, PivotStrategy};
use dedekind::{count_monotone_oracle, Subposet};

fn main() -> dedekind::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let cube = Subposet::cube(n)?;
    let cache = MemoTable::new();
    let engine = count_via_partition(&cube, &PivotStrategy::default(), Some(&cache))?;
    println!("D_{n} = {engine}");
    println!("cache: {} entries, {:?}", cache.len(), cache.stats());
    if n <= 6 {
        println!("oracle agrees: {}", count_monotone_oracle(&cube)? == engine);
    }
    Ok(())
}
