use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `C(n, k)`, with the convention that it vanishes outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    // acc = C(n - k + i, i) after step i, so every division is exact.
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}
