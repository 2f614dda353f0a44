//! The recursive partition formula and the theory of complete partitions.

pub mod complete;
pub mod construct;
pub mod decompose;
pub mod engine;
pub mod memo;
pub mod terms;

pub use complete::{
    completeness_witness, definitional_completeness_oracle, e2_condition_check, is_complete_partition,
    structural_completeness_oracle, DEDEKIND_7, DEDEKIND_SEQUENCE,
};
pub use construct::{
    construct_layer_subset, construct_recursive_partition, minimality_check, Minimality,
    MinimalityReport, Parity,
};
pub use decompose::{decompose_power_of_two, TwoAdicPolynomial};
pub use engine::{
    corollary_split, count_via_partition, count_via_partition_with, EngineConfig, PivotStrategy,
};
pub use memo::{canonical_key, canonical_key_with, CacheStats, MemoKey, MemoTable};
pub use terms::{partition_terms, PartitionTerm};
