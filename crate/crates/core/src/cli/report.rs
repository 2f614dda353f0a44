use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::partition::{CacheStats, TwoAdicPolynomial};

/// Machine-readable record of one CLI run.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub n: Option<usize>,
    pub input_digest: String,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<TwoAdicPolynomial>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<Value>>,
    pub elapsed_ms: u64,
    pub threads: usize,
    pub cache: CacheStats,
}

impl RunReport {
    pub fn new(command: &str, n: Option<usize>, input: &[u8], result: Value) -> Self {
        RunReport {
            command: command.to_string(),
            n,
            input_digest: digest(input),
            result,
            polynomial: None,
            witnesses: None,
            elapsed_ms: 0,
            threads: 1,
            cache: CacheStats::default(),
        }
    }

    /// The parts of the report that depend only on the input: no command
    /// echo, timing, thread count, or cache statistics.
    pub fn payload(&self) -> Value {
        serde_json::json!({
            "n": self.n,
            "input_digest": self.input_digest,
            "result": self.result,
            "polynomial": self.polynomial,
            "witnesses": self.witnesses,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn digest(input: &[u8]) -> String {
    hex::encode(Sha256::digest(input))
}
