//! Decide complete partitions with the V3 and square-face criteria and
//! classify them by minimality.

use dedekind::partition::{
    completeness_witness, construct_layer_subset, e2_condition_check, minimality_check, Parity,
};
use dedekind::{CoverMode, Subposet};

fn main() -> dedekind::Result<()> {
    let n = 4;
    let cube = Subposet::cube(n)?;
    let candidates = [
        ("even layers", construct_layer_subset(n, Parity::Even)?),
        ("weight 2 only", Subposet::filter_cube(n, |p| p.weight() == 2)?),
        ("empty", Subposet::empty(n)?),
    ];
    for mode in [CoverMode::Ambient, CoverMode::Induced] {
        println!("{mode} covers:");
        for (name, a) in &candidates {
            let witness = completeness_witness(a, &cube, mode)?;
            let report = minimality_check(a, n, mode)?;
            println!(
                "  {name}: {} (squares agree: {}), {}",
                witness.map_or("complete".to_string(), |w| format!("V3 {w}")),
                e2_condition_check(a, n, mode)? == witness.is_none(),
                report.class
            );
        }
    }
    Ok(())
}
