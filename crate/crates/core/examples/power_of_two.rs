//! Expand D_n as a sum of powers of two by splitting on a parity layer.

use dedekind::partition::{decompose_power_of_two, Parity};

fn main() -> dedekind::Result<()> {
    for n in 2..=5 {
        for parity in [Parity::Even, Parity::Odd] {
            let poly = decompose_power_of_two(n, parity)?;
            println!("n = {n} {parity}: {poly} = {}", poly.value());
        }
    }
    let six = decompose_power_of_two(6, Parity::Even)?;
    println!("n = 6 even: {} terms, value {}", six.term_count(), six.value());
    Ok(())
}
