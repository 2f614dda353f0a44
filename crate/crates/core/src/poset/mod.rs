//! Points and subposets of the n-cube with their order predicates.

pub mod cover;
pub mod format;
pub mod iso;
mod point;
mod subposet;

pub use cover::{
    ambient_cover_pairs, find_v3, induced_cover_pairs, CoverMode, CoverPair, Orientation,
    V3Witness,
};
pub use format::{parse_poset, write_poset};
pub use iso::{cover_preserving_isomorphic, cover_preserving_isomorphic_with_limit};
pub use point::Point;
pub use subposet::Subposet;

pub(crate) use subposet::submasks as subposet_submasks;
