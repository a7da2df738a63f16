//! Exact combinatorics shared by every counting routine.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;

/// `C(n, k)` for all `0 <= n, k <= 64`.
///
/// `C(64, 32)` is about `1.83e18`, so every entry fits in a `u64`.
static SMALL: Lazy<Box<[[u64; 65]; 65]>> = Lazy::new(|| {
    let mut t = Box::new([[0u64; 65]; 65]);
    for n in 0..=64usize {
        t[n][0] = 1;
        for k in 1..=n {
            t[n][k] = t[n - 1][k - 1] + if k < n { t[n - 1][k] } else { 0 };
        }
    }
    t
});

/// Binomial coefficient `C(n, k)` as an exact arbitrary-precision integer.
///
/// Out-of-range arguments (`n < 0`, `k < 0` or `k > n`) give 0, so displayed
/// formulas with terms like `C(h, r-2)` can be evaluated verbatim.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let (n, k) = (n as u64, k as u64);
    let k = k.min(n - k);
    if n <= 64 {
        return BigUint::from(SMALL[n as usize][k as usize]);
    }
    // Running product; each partial result C(n-k+i, i) is an integer, so the
    // division is exact at every step.
    let mut res = BigUint::one();
    for i in 1..=k {
        res = res * (n - k + i) / i;
    }
    res
}

/// Fast small-range binomial used in inner loops. Requires `n <= 64`.
#[inline]
pub(crate) fn binom_u64(n: usize, k: usize) -> u64 {
    if k > n || n > 64 {
        0
    } else {
        SMALL[n][k]
    }
}
