//! Verdicts on finite integer sequences: Macaulay's O-sequence bound,
//! flawlessness, symmetry, and the alternating near-symmetric shape
//! observed for odd-cycle h-vectors.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::binomial::binomial;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictKind {
    OSequence,
    Flawless,
    Symmetric,
    ConjectureShape,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub index: usize,
    pub explanation: String,
}

/// Outcome of one check. `holds` is true exactly when `witnesses` is empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub kind: VerdictKind,
    pub holds: bool,
    pub witnesses: Vec<Witness>,
}

impl Verdict {
    fn from_witnesses(kind: VerdictKind, witnesses: Vec<Witness>) -> Self {
        Self {
            kind,
            holds: witnesses.is_empty(),
            witnesses,
        }
    }
}

fn witness(index: usize, explanation: impl Into<String>) -> Witness {
    Witness {
        index,
        explanation: explanation.into(),
    }
}

/// Greedy `i`-th Macaulay representation `h = C(a_i, i) + C(a_{i-1}, i-1) + ... + C(a_j, j)`
/// with `a_i > a_{i-1} > ... > a_j >= j >= 1`. Returns `(a_k, k)` pairs, top first.
pub fn macaulay_representation(h: &BigUint, i: u64) -> Vec<(u64, u64)> {
    assert!(i >= 1, "Macaulay representation needs i >= 1");
    let mut rem = h.clone();
    let mut out = Vec::new();
    let mut k = i;
    while !rem.is_zero() && k >= 1 {
        let a = largest_top(&rem, k);
        rem -= binomial(a, k);
        out.push((a, k));
        k -= 1;
    }
    out
}

/// Largest `a >= k` with `C(a, k) <= rem`, for `rem >= 1`.
fn largest_top(rem: &BigUint, k: u64) -> u64 {
    let mut lo = k; // C(k, k) = 1 <= rem
    let mut hi = k + 1;
    while binomial(hi, k) <= *rem {
        lo = hi;
        hi = k + 2 * (hi - k);
    }
    // C(lo, k) <= rem < C(hi, k)
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if binomial(mid, k) <= *rem {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// `h^{<i>} = C(a_i + 1, i + 1) + C(a_{i-1} + 1, i) + ...`, the maximal growth
/// from degree `i` to `i + 1`.
pub fn macaulay_bound(h: &BigUint, i: u64) -> BigUint {
    macaulay_representation(h, i)
        .into_iter()
        .map(|(a, k)| binomial(a + 1, k + 1))
        .sum()
}

/// O-sequence test via Macaulay's bound `h_{i+1} <= h_i^{<i>}` for `i >= 1`.
///
/// Rejects empty input and `h_0 != 1`.
pub fn macaulay_check(h: &[BigUint]) -> Result<Verdict> {
    match h.first() {
        None => return Err(Error::InvalidSequence("empty sequence".into())),
        Some(h0) if !h0.is_one() => {
            return Err(Error::InvalidSequence(format!("h_0 = {h0}, expected 1")))
        }
        _ => {}
    }
    let mut witnesses = Vec::new();
    for i in 1..h.len().saturating_sub(1) {
        let next = &h[i + 1];
        if h[i].is_zero() {
            if !next.is_zero() {
                witnesses.push(witness(
                    i + 1,
                    format!("h_{i} = 0 but h_{} = {next}", i + 1),
                ));
            }
            continue;
        }
        let bound = macaulay_bound(&h[i], i as u64);
        if *next > bound {
            witnesses.push(witness(
                i + 1,
                format!("h_{} = {next} exceeds h_{i}^<{i}> = {bound}", i + 1),
            ));
        }
    }
    Ok(Verdict::from_witnesses(VerdictKind::OSequence, witnesses))
}

/// Index of the last nonzero entry; the sequence is read as `(h_0, ..., h_s)`.
fn last_nonzero(h: &[BigUint]) -> Option<usize> {
    h.iter().rposition(|x| !x.is_zero())
}

/// Flawless: (i) `h_i <= h_{s-i}` for `0 <= i <= [s/2]` and (ii)
/// `h_0 <= h_1 <= ... <= h_{[s/2]}`, with `s` the index of the last nonzero entry.
///
/// At most one witness per violated condition, at its first failing index.
pub fn flawless_check(h: &[BigUint]) -> Verdict {
    let Some(s) = last_nonzero(h) else {
        return Verdict::from_witnesses(
            VerdictKind::Flawless,
            vec![witness(0, "sequence has no nonzero entry")],
        );
    };
    let half = s / 2;
    let mut witnesses = Vec::new();
    if let Some(i) = (0..=half).find(|&i| h[i] > h[s - i]) {
        witnesses.push(witness(
            i,
            format!("(i) h_{i} = {} > h_{} = {}", h[i], s - i, h[s - i]),
        ));
    }
    if let Some(i) = (1..=half).find(|&i| h[i - 1] > h[i]) {
        witnesses.push(witness(
            i,
            format!("(ii) h_{} = {} > h_{i} = {}", i - 1, h[i - 1], h[i]),
        ));
    }
    Verdict::from_witnesses(VerdictKind::Flawless, witnesses)
}

/// `h_i = h_{s-i}` for every `i`, reporting each mismatch with `i <= [s/2]`.
pub fn symmetry_check(h: &[BigUint]) -> Verdict {
    let s = last_nonzero(h).unwrap_or(0);
    let witnesses = (0..=s / 2)
        .filter(|&i| h[i] != h[s - i])
        .map(|i| witness(i, format!("h_{i} = {} != h_{} = {}", h[i], s - i, h[s - i])))
        .collect();
    Verdict::from_witnesses(VerdictKind::Symmetric, witnesses)
}

/// Checks the shape `(1, h_1, ..., h_{s-1}, h_{s-1} + (-1)^{s-1}, ..., h_2 + 1, h_1, 1)`:
/// length `2s`, `h_0 = 1`, (i) `h_0 <= ... <= h_{s-1}`, (ii) `h_{2s-1} = h_0` and
/// `h_{2s-2} = h_1`, (iii) `h_{2s-1-i} = h_i + (-1)^i` for `2 <= i <= s-1`.
///
/// Input is the trimmed h-vector. A wrong length is reported as a failure
/// and the remaining conditions are not evaluated.
pub fn conjecture_check(h: &[BigUint], s: u32) -> Verdict {
    let kind = VerdictKind::ConjectureShape;
    let s = s as usize;
    let len = 2 * s;
    if h.len() != len {
        return Verdict::from_witnesses(
            kind,
            vec![witness(
                h.len().saturating_sub(1),
                format!("length {} != 2s = {len}", h.len()),
            )],
        );
    }
    let mut witnesses = Vec::new();
    if !h[0].is_one() {
        witnesses.push(witness(0, format!("h_0 = {} != 1", h[0])));
    }
    for i in 1..s {
        if h[i - 1] > h[i] {
            witnesses.push(witness(
                i,
                format!("(i) h_{} = {} > h_{i} = {}", i - 1, h[i - 1], h[i]),
            ));
        }
    }
    for (hi, lo) in [(len - 1, 0), (len - 2, 1)] {
        if h[hi] != h[lo] {
            witnesses.push(witness(
                hi,
                format!("(ii) h_{hi} = {} != h_{lo} = {}", h[hi], h[lo]),
            ));
        }
    }
    for i in 2..s {
        let sign = if i % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        let expected = BigInt::from(h[i].clone()) + sign;
        let mirror = len - 1 - i;
        if BigInt::from(h[mirror].clone()) != expected {
            witnesses.push(witness(
                mirror,
                format!(
                    "(iii) h_{mirror} = {} != h_{i} + (-1)^{i} = {expected}",
                    h[mirror]
                ),
            ));
        }
    }
    Verdict::from_witnesses(kind, witnesses)
}
