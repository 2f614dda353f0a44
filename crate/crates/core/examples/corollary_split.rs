//! D_n = D(E^n - up(a)) + D(E^n - down(a)) for every point a.

use dedekind::partition::corollary_split;
use dedekind::Subposet;

fn main() -> dedekind::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    for a in Subposet::cube(n)?.iter() {
        let (above, below) = corollary_split(a)?;
        println!("a = {a}: {above} + {below} = {}", &above + &below);
    }
    Ok(())
}
