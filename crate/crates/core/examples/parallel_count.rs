//! Run the engine on several threads with a time budget. The count does not
//! depend on the thread count.
//!
//!     cargo run --release --example parallel_count -- 7 4 600

use std::time::{Duration, Instant};

use dedekind::partition::{count_via_partition_with, EngineConfig, MemoTable, PivotStrategy};
use dedekind::{Error, Subposet};

fn main() -> dedekind::Result<()> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<u64>().ok());
    let n = args.next().flatten().unwrap_or(6) as usize;
    let threads = args.next().flatten().unwrap_or(4) as usize;
    let seconds = args.next().flatten().unwrap_or(60);
    let config = EngineConfig {
        threads,
        time_limit: Some(Duration::from_secs(seconds)),
        ..EngineConfig::default()
    };
    let cache = MemoTable::new();
    let started = Instant::now();
    match count_via_partition_with(&Subposet::cube(n)?, &PivotStrategy::default(), Some(&cache), &config) {
        Ok(d) => println!("D_{n} = {d} on {threads} threads in {:?}", started.elapsed()),
        Err(Error::BudgetExceeded(why)) => println!("gave up after {seconds}s: {why}"),
        Err(e) => return Err(e),
    }
    println!("{:?}", cache.stats());
    Ok(())
}
