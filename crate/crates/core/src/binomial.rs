//! Binomial coefficients over arbitrary-precision integers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `C(i, k)`, zero when `k > i`.
///
/// Multiplicative formula; each partial product `C(i-k+j, j)` is itself an
/// integer so the running division is exact.
pub fn binomial(i: u64, k: u64) -> BigInt {
    if k > i {
        return BigInt::zero();
    }
    let k = k.min(i - k);
    let mut acc = BigInt::one();
    for j in 1..=k {
        acc *= i - k + j;
        acc /= j;
    }
    acc
}

/// Row `i` of Pascal's triangle: `[C(i,0), ..., C(i,i)]`.
pub fn pascal_row(i: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for _ in 0..i {
        row = next_pascal_row(&row);
    }
    row
}

/// Given row `i`, returns row `i + 1`.
pub fn next_pascal_row(row: &[BigInt]) -> Vec<BigInt> {
    let mut next = Vec::with_capacity(row.len() + 1);
    next.push(BigInt::one());
    for w in row.windows(2) {
        next.push(&w[0] + &w[1]);
    }
    next.push(BigInt::one());
    next
}

/// `C(n, 2)` as an exponent.
pub fn choose2(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}
