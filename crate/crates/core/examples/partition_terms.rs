//! Split D(S) over the monotone maps on a pivot set: every term is the count
//! of what is left after fixing the pivots.

use dedekind::partition::partition_terms;
use dedekind::{count_monotone_oracle, BigCount, Subposet};

fn main() -> dedekind::Result<()> {
    let cube = Subposet::cube(3)?;
    let pivots = Subposet::parse_points(3, &["100", "010", "001"])?;
    let mut total = BigCount::zero();
    for term in partition_terms(&cube, &pivots)? {
        let d = count_monotone_oracle(&term.residual)?;
        println!(
            "pivot values {:?} -> residual of {} points, D = {d}",
            term.pivot_values.values(),
            term.residual.len()
        );
        total += &d;
    }
    println!("sum = {total}, D_3 = {}", count_monotone_oracle(&cube)?);
    Ok(())
}
