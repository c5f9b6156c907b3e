//! Exact binomial coefficients over arbitrary-precision integers.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// `C(n, k)` for non-negative `n`. Zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    // acc * (n - k + i) / i stays integral: it is C(n - k + i, i) after each step.
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// `C(n, k)` with a signed top argument; zero whenever `n < k` or `n < 0`.
///
/// This is the convention used for Hilbert series coefficients, where
/// `C(n - i + d - 1, d - 1)` must vanish for `n < i`.
pub fn binomial_signed(n: i64, k: u64) -> BigInt {
    if n < 0 {
        return BigInt::zero();
    }
    BigInt::from(binomial(n as u64, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(binomial(0, 0), BigUint::one());
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(8, 7), BigUint::from(8u32));
        assert_eq!(binomial(3, 4), BigUint::zero());
        assert_eq!(binomial_signed(-1, 0), BigInt::zero());
    }

    #[test]
    fn pascal_rule() {
        for n in 1..40u64 {
            for k in 1..=n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }

    #[test]
    fn exceeds_u64() {
        // C(100, 50) = 100891344545564193334812497256
        assert_eq!(
            binomial(100, 50).to_string(),
            "100891344545564193334812497256"
        );
    }
}
