//! Memo keys identify subposets up to coordinate permutation and, when
//! enabled, order duality.

use dedekind::partition::{canonical_key, canonical_key_with};
use dedekind::Subposet;

fn main() -> dedekind::Result<()> {
    let a = Subposet::parse_points(3, &["000", "100", "110"])?;
    let b = a.permute_coords(&[2, 0, 1])?;
    let c = a.dual();
    println!("a = {a:?}\nb = {b:?}\nc = {c:?}");
    println!("a ~ b: {}", canonical_key(&a) == canonical_key(&b));
    println!("a ~ dual(a): {}", canonical_key(&a) == canonical_key(&c));
    println!(
        "a ~ dual(a) without duality: {}",
        canonical_key_with(&a, false) == canonical_key_with(&c, false)
    );
    Ok(())
}
