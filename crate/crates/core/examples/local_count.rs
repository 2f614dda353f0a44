//! Local Dedekind numbers of a few hand-built subposets, including one read
//! from the `n=<dim>` text format.

use dedekind::partition::{count_via_partition, PivotStrategy};
use dedekind::poset::{parse_poset, write_poset};
use dedekind::{count_monotone_oracle, enumerate_monotone, Subposet};

fn main() -> dedekind::Result<()> {
    let chain = Subposet::parse_points(3, &["000", "100", "110", "111"])?;
    println!("4-chain: D = {}", count_monotone_oracle(&chain)?);

    let vee = parse_poset("n=3\n# apex and two arms\n000\n100\n010\n")?;
    print!("{}", write_poset(&vee));
    for f in enumerate_monotone(&vee)? {
        println!("  ones = {:?}", f.ones().points().iter().map(|p| p.to_string()).collect::<Vec<_>>());
    }

    let middle = Subposet::filter_cube(4, |p| (1..=3).contains(&p.weight()))?;
    let d = count_via_partition(&middle, &PivotStrategy::default(), None)?;
    println!("E^4 without top and bottom: D = {d}");
    Ok(())
}
