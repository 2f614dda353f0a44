use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::count::BigCount;
use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::partition::construct::{construct_layer_subset, Parity};
use crate::partition::terms::{for_each_pivot_map, mask_in};

/// `sum c_j * 2^j` with strictly positive coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct TwoAdicPolynomial {
    coeffs: BTreeMap<u32, BigCount>,
}

impl TwoAdicPolynomial {
    pub fn new() -> Self {
        TwoAdicPolynomial::default()
    }

    pub fn add_term(&mut self, exponent: u32, coefficient: BigCount) {
        if coefficient.is_zero() {
            return;
        }
        *self.coeffs.entry(exponent).or_default() += &coefficient;
    }

    pub fn coefficient(&self, exponent: u32) -> BigCount {
        self.coeffs.get(&exponent).cloned().unwrap_or_default()
    }

    pub fn coefficients(&self) -> &BTreeMap<u32, BigCount> {
        &self.coeffs
    }

    /// Number of terms of the underlying sum, `sum c_j`.
    pub fn term_count(&self) -> BigCount {
        self.coeffs.values().cloned().sum()
    }

    pub fn value(&self) -> BigCount {
        self.coeffs
            .iter()
            .map(|(&j, c)| c * &BigCount::pow2(j as usize))
            .sum()
    }
}

impl fmt::Display for TwoAdicPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (k, (j, c)) in self.coeffs.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*2^{j}")?;
        }
        Ok(())
    }
}

pub const DECOMPOSE_MAX_DIM: usize = 7;

/// Expand `D_n` over the weight layers of one parity. Every residual must be
/// an antichain of `k` points and contributes `2^k`; a residual with a
/// comparable pair is reported as a falsification.
pub fn decompose_power_of_two(n: usize, parity: Parity) -> Result<TwoAdicPolynomial> {
    if n > DECOMPOSE_MAX_DIM {
        return Err(Error::DimensionOutOfRange(n));
    }
    let pivots = construct_layer_subset(n, parity)?;
    let frame = Frame::cube(n);
    let members = crate::frame::full(frame.len());
    let pivot_mask = mask_in(&frame, &pivots).expect("cube frame");
    let mut counts: BTreeMap<u32, u64> = BTreeMap::new();
    for_each_pivot_map(&frame, members, pivot_mask, u64::MAX, |ones, residual| {
        if !frame.is_antichain(residual) {
            return Err(Error::Falsified(format!(
                "layer split of E^{n} ({parity}) left comparable points in {:?} (pivots at 1: {:?})",
                frame.subposet(residual),
                frame.subposet(ones)
            )));
        }
        *counts.entry(residual.count_ones()).or_default() += 1;
        Ok(())
    })?;
    let mut poly = TwoAdicPolynomial::new();
    for (j, c) in counts {
        poly.add_term(j, BigCount::from(c));
    }
    Ok(poly)
}
