//! Exact lattice-point counts of `nQ` and of its interior.
//!
//! Two independent engines: [`count_bruteforce`] scans the box `[0, n]^{2s+1}`
//! against the H-representation, and [`count_dp`] runs a transfer-matrix sweep
//! around the cycle. Counts are arbitrary precision throughout.

pub mod cache;

use std::env;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cycle::CycleInstance;
use crate::error::{Error, Result};
use crate::polytope::{self, Membership};

pub use cache::{CacheKey, CacheRecord, EhrhartCache};

/// Default cap on the number of candidate points scanned by [`count_bruteforce`].
pub const DEFAULT_BRUTEFORCE_BUDGET: u128 = 100_000_000;

/// Environment variable overriding [`DEFAULT_BRUTEFORCE_BUDGET`].
pub const BUDGET_ENV: &str = "ODDCYCLE_BRUTEFORCE_BUDGET";

/// Budget from [`BUDGET_ENV`], falling back to the default when unset or unparsable.
pub fn bruteforce_budget_from_env() -> u128 {
    env::var(BUDGET_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_BRUTEFORCE_BUDGET)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CountMode {
    Closed,
    Interior,
}

impl CountMode {
    pub fn as_str(self) -> &'static str {
        match self {
            CountMode::Closed => "closed",
            CountMode::Interior => "interior",
        }
    }
}

/// Number of candidate points `(n + 1)^{2s+1}`, saturating.
fn box_size(inst: &CycleInstance, n: u64) -> u128 {
    u128::from(n + 1).saturating_pow(inst.n_vertices() as u32)
}

/// Counts lattice points of `nQ` (closed) or its interior by scanning every
/// integer vector of `[0, n]^{2s+1}`.
///
/// Refuses with [`Error::BudgetExceeded`] when the box holds more than `budget` points.
pub fn count_bruteforce(
    inst: &CycleInstance,
    n: u64,
    mode: CountMode,
    budget: u128,
) -> Result<BigUint> {
    let required = box_size(inst, n);
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    let sys = polytope::q_system(inst, n as i64);
    let membership = match mode {
        CountMode::Closed => Membership::Closed,
        CountMode::Interior => Membership::Strict,
    };
    let m = inst.n_vertices();
    let top = n as i64;
    let mut p = vec![0i64; m];
    let mut count = 0u64;
    loop {
        if sys.contains_unchecked(&p, membership) {
            count += 1;
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == m {
                return Ok(BigUint::from(count));
            }
            if p[i] < top {
                p[i] += 1;
                break;
            }
            p[i] = 0;
            i += 1;
        }
    }
}

/// Per-coordinate, pair and sum bounds for the DP.
#[derive(Clone, Copy, Debug)]
struct Bounds {
    lo: i64,
    hi: i64,
    pair: i64,
    sum: i64,
}

impl Bounds {
    fn new(inst: &CycleInstance, n: u64, mode: CountMode) -> Self {
        let n = n as i64;
        let s = i64::from(inst.s());
        match mode {
            CountMode::Closed => Bounds {
                lo: 0,
                hi: n,
                pair: n,
                sum: s * n,
            },
            // strict on every row, including redundant ones
            CountMode::Interior => Bounds {
                lo: 1,
                hi: n - 1,
                pair: n - 1,
                sum: s * n - 1,
            },
        }
    }
}

/// Counts split by the value of `x_1`: entry `a` is the number of points with `x_1 = a`.
///
/// The returned vector has length `n + 1`.
pub fn count_dp_by_anchor(inst: &CycleInstance, n: u64, mode: CountMode) -> Vec<BigUint> {
    let b = Bounds::new(inst, n, mode);
    let mut out = vec![BigUint::zero(); n as usize + 1];
    if b.hi < b.lo || b.sum < 0 {
        return out;
    }
    for a in b.lo..=b.hi {
        out[a as usize] = sweep_from_anchor(inst.n_vertices(), b, a);
    }
    out
}

/// Transfer-matrix sweep over positions `2..=m` with `x_1 = anchor` fixed.
///
/// State `(v, t)`: value of the current coordinate and running coordinate sum.
/// Moving to value `w` needs `v + w <= pair`; prefix sums over `v` make each
/// step `O(values * sums)`.
fn sweep_from_anchor(m: usize, b: Bounds, anchor: i64) -> BigUint {
    let width = (b.hi - b.lo + 1) as usize;
    let sums = b.sum as usize + 1;
    if anchor > b.sum {
        return BigUint::zero();
    }
    let mut table = vec![vec![BigUint::zero(); sums]; width];
    table[(anchor - b.lo) as usize][anchor as usize] = BigUint::one();

    for _ in 2..=m {
        // prefix[u][t] = sum of table[v][t] over v <= u
        let mut prefix = table;
        for u in 1..width {
            let (done, rest) = prefix.split_at_mut(u);
            for (acc, prev) in rest[0].iter_mut().zip(&done[u - 1]) {
                *acc += prev;
            }
        }
        let mut next = vec![vec![BigUint::zero(); sums]; width];
        for (wi, row) in next.iter_mut().enumerate() {
            let w = b.lo + wi as i64;
            let max_prev = (b.pair - w).min(b.hi);
            if max_prev < b.lo {
                continue;
            }
            let src = &prefix[(max_prev - b.lo) as usize];
            for t in w as usize..sums {
                row[t] = src[t - w as usize].clone();
            }
        }
        table = next;
    }

    let mut total = BigUint::zero();
    for (wi, row) in table.iter().enumerate() {
        let w = b.lo + wi as i64;
        if w + anchor <= b.pair {
            for c in row {
                total += c;
            }
        }
    }
    total
}

/// Exact count of lattice points of `nQ` (closed) or of its interior.
pub fn count_dp(inst: &CycleInstance, n: u64, mode: CountMode) -> BigUint {
    count_dp_by_anchor(inst, n, mode).into_iter().sum()
}

/// Interior lattice points of `nQ`, at most `limit` of them, in lexicographic order.
pub fn interior_points(inst: &CycleInstance, n: u64, limit: usize) -> Vec<Vec<i64>> {
    let b = Bounds::new(inst, n, CountMode::Interior);
    let m = inst.n_vertices();
    let sys = polytope::q_system(inst, n as i64);
    let mut found = Vec::new();
    let mut p = Vec::with_capacity(m);

    fn go(
        m: usize,
        b: Bounds,
        sum: i64,
        p: &mut Vec<i64>,
        limit: usize,
        found: &mut Vec<Vec<i64>>,
        sys: &polytope::HalfspaceSystem,
    ) {
        if found.len() >= limit {
            return;
        }
        if p.len() == m {
            if p[0] + p[m - 1] <= b.pair && sys.contains_unchecked(p, Membership::Strict) {
                found.push(p.clone());
            }
            return;
        }
        for v in b.lo..=b.hi {
            if sum + v > b.sum {
                break;
            }
            if let Some(&last) = p.last() {
                if last + v > b.pair {
                    break;
                }
            }
            p.push(v);
            go(m, b, sum + v, p, limit, found, sys);
            p.pop();
        }
    }
    if b.lo <= b.hi {
        go(m, b, 0, &mut p, limit, &mut found, &sys);
    }
    found
}

/// Closed and interior counts of `nQ` for `n = 0..=max_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EhrhartTable {
    pub s: u32,
    pub closed: Vec<BigUint>,
    pub interior: Vec<BigUint>,
}

impl EhrhartTable {
    pub fn max_n(&self) -> usize {
        self.closed.len() - 1
    }

    /// Checks `H(0) = 1`, `I(0) = 0`, monotone `H` and `I(n) <= H(n)`.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Inconsistent(format!("s={}: {msg}", self.s)));
        if self.closed.first() != Some(&BigUint::one()) {
            return bad("H(0) != 1".into());
        }
        if !self.interior.first().is_some_and(Zero::is_zero) {
            return bad("I(0) != 0".into());
        }
        if self.closed.len() != self.interior.len() {
            return bad("closed and interior tables differ in length".into());
        }
        for n in 1..self.closed.len() {
            if self.closed[n] < self.closed[n - 1] {
                return bad(format!("H({n}) < H({})", n - 1));
            }
        }
        for (n, (h, i)) in self.closed.iter().zip(&self.interior).enumerate() {
            if i > h {
                return bad(format!("I({n}) > H({n})"));
            }
        }
        Ok(())
    }
}

/// Fills the table with [`count_dp`], consulting and updating `cache` when given.
///
/// Missing entries for distinct `n` are computed in parallel.
pub fn ehrhart_table(
    inst: &CycleInstance,
    max_n: usize,
    cache: Option<&EhrhartCache>,
) -> Result<EhrhartTable> {
    let s = inst.s();
    let jobs: Vec<(u64, CountMode)> = (0..=max_n as u64)
        .flat_map(|n| [(n, CountMode::Closed), (n, CountMode::Interior)])
        .collect();
    let values: Vec<BigUint> = jobs
        .par_iter()
        .map(|&(n, mode)| -> Result<BigUint> {
            let key = CacheKey { s, n, mode };
            if let Some(hit) = cache.and_then(|c| c.get(&key)) {
                return Ok(hit);
            }
            let count = count_dp(inst, n, mode);
            if let Some(c) = cache {
                c.insert(key, count.clone())?;
            }
            Ok(count)
        })
        .collect::<Result<_>>()?;
    let mut closed = Vec::with_capacity(max_n + 1);
    let mut interior = Vec::with_capacity(max_n + 1);
    for (v, &(_, mode)) in values.into_iter().zip(&jobs) {
        match mode {
            CountMode::Closed => closed.push(v),
            CountMode::Interior => interior.push(v),
        }
    }
    let table = EhrhartTable {
        s,
        closed,
        interior,
    };
    table.validate()?;
    Ok(table)
}

/// The same table computed by [`count_bruteforce`] only.
pub fn ehrhart_table_bruteforce(
    inst: &CycleInstance,
    max_n: usize,
    budget: u128,
) -> Result<EhrhartTable> {
    let mut closed = Vec::with_capacity(max_n + 1);
    let mut interior = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n as u64 {
        closed.push(count_bruteforce(inst, n, CountMode::Closed, budget)?);
        interior.push(count_bruteforce(inst, n, CountMode::Interior, budget)?);
    }
    let table = EhrhartTable {
        s: inst.s(),
        closed,
        interior,
    };
    table.validate()?;
    Ok(table)
}
