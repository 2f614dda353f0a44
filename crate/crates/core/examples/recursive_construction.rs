//! Grow a complete partition of E^n from one of the upper subcube E^(n-1)
//! by adding the mirror complement below.

use dedekind::partition::{
    construct_layer_subset, construct_recursive_partition, is_complete_partition, Parity,
};
use dedekind::{CoverMode, Subposet};

fn main() -> dedekind::Result<()> {
    let mode = CoverMode::Ambient;
    for n in 3..=6 {
        let seed = construct_layer_subset(n - 1, Parity::Odd)?;
        let a = construct_recursive_partition(n, n, &seed, mode)?;
        println!(
            "n = {n}: |A| = {}, complete = {}",
            a.len(),
            is_complete_partition(&a, &Subposet::cube(n)?, mode)?
        );
    }
    let face = Subposet::subcube(3, 1, true)?;
    match construct_recursive_partition(3, 1, &face, mode) {
        Ok(_) => println!("full face accepted"),
        Err(e) => println!("full face rejected: {e}"),
    }
    Ok(())
}
