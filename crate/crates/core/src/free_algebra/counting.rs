//! Closed-form counting: necklace dimensions, Möbius function, Lyndon counts.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

/// Möbius function by trial factorization.
pub fn mobius(mut n: u64) -> i64 {
    assert!(n >= 1, "mobius(0) is undefined");
    let mut result = 1i64;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= BigUint::from((n - i) as u64);
        acc /= BigUint::from((i + 1) as u64);
    }
    acc
}

/// Dimension of the degree-`k` part of the necklace space on `2d` letters:
/// `(1/k) Σ_{i=1}^{k} (2d)^{gcd(k,i)}`. By convention degree 0 has
/// dimension 1 (the unit necklace).
pub fn necklace_dimension(d: u64, k: u64) -> BigUint {
    assert!(d >= 1, "need at least one symbol pair");
    if k == 0 {
        return BigUint::one();
    }
    let beads = BigUint::from(2 * d);
    let total: BigUint = (1..=k).map(|i| Pow::pow(&beads, k.gcd(&i) as u32)).sum();
    let (q, r) = total.div_rem(&BigUint::from(k));
    debug_assert!(r.is_zero());
    q
}

/// Number of aperiodic binary necklaces of length `l` with `j` marked
/// beads: `(1/l) Σ_{k | gcd(l,j)} μ(k) C(l/k, j/k)`.
pub fn lyndon_count(l: u64, j: u64) -> BigUint {
    assert!(l >= 1 && j <= l, "need 1 <= l and j <= l");
    let g = l.gcd(&j);
    let mut sum = BigInt::zero();
    for k in divisors(g) {
        let mu = mobius(k);
        if mu != 0 {
            sum += BigInt::from(mu) * BigInt::from(binomial((l / k) as i64, (j / k) as i64));
        }
    }
    let (q, r) = sum.div_rem(&BigInt::from(l));
    debug_assert!(r.is_zero());
    q.to_biguint().expect("Lyndon count is non-negative")
}
