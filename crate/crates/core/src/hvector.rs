//! h-vectors from Ehrhart tables and the inverse reconstruction.
//!
//! With `d = 2s + 2`, the h-vector is the numerator of the Hilbert series:
//! `(1 - t)^d * sum_n H(n) t^n = sum_i h_i t^i`, so
//! `h_i = sum_{j <= min(i, d)} (-1)^j C(d, j) H(i - j)`.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::binomial::{binomial, binomial_signed};
use crate::counting::EhrhartTable;
use crate::error::{Error, Result};

/// Non-negative h-vector with `h_0 = 1`, trimmed after the last nonzero entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HVector {
    entries: Vec<BigUint>,
    d: usize,
}

impl HVector {
    pub fn new(mut entries: Vec<BigUint>, d: usize) -> Result<Self> {
        if entries.first() != Some(&BigUint::one()) {
            return Err(Error::InvalidSequence("h_0 must be 1".into()));
        }
        while entries.last().is_some_and(Zero::is_zero) {
            entries.pop();
        }
        Ok(Self { entries, d })
    }

    pub fn from_u64(entries: &[u64], d: usize) -> Result<Self> {
        Self::new(entries.iter().map(|&x| BigUint::from(x)).collect(), d)
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.entries
    }

    /// Denominator exponent of the Hilbert series.
    pub fn d(&self) -> usize {
        self.d
    }

    /// Index of the last nonzero entry.
    pub fn degree(&self) -> usize {
        self.entries.len() - 1
    }

    /// Sum of entries, the normalized volume of the polytope.
    pub fn sum(&self) -> BigUint {
        self.entries.iter().sum()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.entries.iter().map(ToString::to_string).collect()
    }
}

/// Raw coefficients of `(1 - t)^d * sum_n values[n] t^n` up to `t^{len-1}`, signed.
pub fn numerator_coefficients(values: &[BigUint], d: usize) -> Vec<BigInt> {
    (0..values.len())
        .map(|i| {
            (0..=i.min(d)).fold(BigInt::zero(), |acc, j| {
                let term = BigInt::from(binomial(d as u64, j as u64))
                    * BigInt::from(values[i - j].clone());
                if j % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            })
        })
        .collect()
}

/// Extracts the h-vector of `K[C_{2s+1}]` from its Ehrhart table.
///
/// The transform is evaluated for every `n` in the table. All coefficients
/// must be non-negative and every coefficient at index `>= 2s` must vanish;
/// the table must reach `n = 2s + 1` so at least two of these trailing
/// zeros are actually computed.
pub fn h_vector(table: &EhrhartTable) -> Result<HVector> {
    let s = table.s as usize;
    let d = 2 * s + 2;
    let need = 2 * s + 1;
    if table.max_n() < need {
        return Err(Error::TableTooShort {
            have: table.max_n(),
            need,
        });
    }
    let coeffs = numerator_coefficients(&table.closed, d);
    let mut entries = Vec::with_capacity(coeffs.len());
    for (i, c) in coeffs.into_iter().enumerate() {
        if c.is_negative() {
            return Err(Error::Inconsistent(format!(
                "s={s}: h_{i} = {c} is negative"
            )));
        }
        if i >= 2 * s && !c.is_zero() {
            return Err(Error::Inconsistent(format!(
                "s={s}: h_{i} = {c} beyond expected degree {}",
                2 * s - 1
            )));
        }
        entries.push(c.to_biguint().expect("non-negative"));
    }
    HVector::new(entries, d).map_err(|e| Error::Inconsistent(format!("s={s}: {e}")))
}

/// `H(n) = sum_i h_i C(n - i + d - 1, d - 1)` for `n = 0..=n_max`.
pub fn reconstruct_hilbert(h: &HVector, n_max: usize) -> Vec<BigUint> {
    let d = h.d as u64;
    (0..=n_max as i64)
        .map(|n| {
            let v: BigInt = h
                .entries
                .iter()
                .enumerate()
                .map(|(i, hi)| {
                    BigInt::from(hi.clone()) * binomial_signed(n - i as i64 + d as i64 - 1, d - 1)
                })
                .sum();
            to_unsigned(v)
        })
        .collect()
}

/// Interior counts predicted by Ehrhart reciprocity:
/// `sum_{n>=1} I(n) t^n = t^d h(1/t) / (1 - t)^d`, i.e.
/// `I(n) = sum_i h_i C(n + i - 1, d - 1)` for `n >= 1`, and `I(0) = 0`.
pub fn interior_from_hvector(h: &HVector, n_max: usize) -> Vec<BigUint> {
    let d = h.d as u64;
    (0..=n_max as i64)
        .map(|n| {
            if n == 0 {
                return BigUint::zero();
            }
            let v: BigInt = h
                .entries
                .iter()
                .enumerate()
                .map(|(i, hi)| BigInt::from(hi.clone()) * binomial_signed(n + i as i64 - 1, d - 1))
                .sum();
            to_unsigned(v)
        })
        .collect()
}

fn to_unsigned(v: BigInt) -> BigUint {
    debug_assert!(v.sign() != Sign::Minus);
    v.to_biguint().unwrap_or_default()
}

/// `reconstruct_hilbert(h) == table.closed`.
pub fn check_round_trip(table: &EhrhartTable, h: &HVector) -> Result<()> {
    let rebuilt = reconstruct_hilbert(h, table.max_n());
    match rebuilt.iter().zip(&table.closed).position(|(a, b)| a != b) {
        None => Ok(()),
        Some(n) => Err(Error::Inconsistent(format!(
            "s={}: round trip gives H({n}) = {}, table has {}",
            table.s, rebuilt[n], table.closed[n]
        ))),
    }
}

/// Interior counts in the table agree with the reciprocity prediction from `h`.
pub fn check_reciprocity(table: &EhrhartTable, h: &HVector) -> Result<()> {
    let predicted = interior_from_hvector(h, table.max_n());
    match predicted
        .iter()
        .zip(&table.interior)
        .position(|(a, b)| a != b)
    {
        None => Ok(()),
        Some(n) => Err(Error::Inconsistent(format!(
            "s={}: reciprocity predicts I({n}) = {}, table has {}",
            table.s, predicted[n], table.interior[n]
        ))),
    }
}
