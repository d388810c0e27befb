//! Binomial coefficients, factorials, and Eulerian numbers.
//!
//! All values are exact [`BigInt`]s. The Eulerian number `eulerian(k, n)`
//! counts permutations of `1..=n` with exactly `k` descents, so
//! `eulerian(k, n) / n!` is the volume of the cube slice
//! `{x in [0,1]^n : k <= x_1 + ... + x_n <= k + 1}`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Binomial coefficient `C(n, k)`.
///
/// Out-of-range arguments (`k < 0`, `k > n`, or `n < 0`) yield `0`, which is
/// the convention the binomial-representation formulas rely on at boundary
/// terms.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `n!` as an exact integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Eulerian number `A(k, n)`: permutations of `1..=n` with exactly `k`
/// descents. Zero for `k < 0` or `k >= n`. Panics if `n == 0`.
pub fn eulerian(k: i64, n: u64) -> BigInt {
    assert!(n >= 1, "eulerian: n must be positive");
    if k < 0 || k as u64 >= n {
        return BigInt::zero();
    }
    // Row-by-row recurrence A(k, n) = (k+1) A(k, n-1) + (n-k) A(k-1, n-1).
    let mut row = vec![BigInt::one()];
    for m in 2..=n {
        let mut next = vec![BigInt::zero(); m as usize];
        for (j, value) in row.iter().enumerate() {
            next[j] += BigInt::from(j as u64 + 1) * value;
            next[j + 1] += BigInt::from(m - 1 - j as u64) * value;
        }
        row = next;
    }
    row[k as usize].clone()
}
