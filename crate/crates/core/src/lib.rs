//! Exact counting of monotone Boolean functions on subposets of the n-cube.
//!
//! The local Dedekind number `D(S)` of a subposet `S` is counted by
//! splitting on the monotone maps of a pivot set `A`: every map on `A`
//! fixes an up-set or down-set around each pivot and leaves a smaller free
//! residual, and `D(S)` is the sum of the residual counts. The crate also
//! decides when such a split is complete (every term a product of Dedekind
//! numbers), builds minimal complete pivot sets, and expands `D_n` as an
//! exact polynomial in powers of two.

pub mod cli;
mod count;
mod error;
mod frame;
pub mod monotone;
pub mod partition;
pub mod poset;

pub use count::BigCount;
pub use error::{Error, Result};
pub use monotone::{count_monotone_oracle, enumerate_monotone, is_monotone, MonotoneMap};
pub use poset::{CoverMode, Point, Subposet};

/// Largest supported cube dimension.
pub const MAX_DIM: usize = 16;
