//! Integer helpers: factorization and π-parts of group orders.

use alloc::vec::Vec;

/// Prime divisors of `n` in increasing order.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `(p, k)` pairs with `n = ∏ p^k`.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut k = 0;
            while n.is_multiple_of(p) {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// The largest divisor of `n` whose prime divisors all satisfy `in_set`.
pub fn part_where(n: u64, mut in_set: impl FnMut(u64) -> bool) -> u64 {
    factorize(n)
        .into_iter()
        .filter(|&(p, _)| in_set(p))
        .map(|(p, k)| p.pow(k))
        .product()
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && prime_divisors(n) == [n]
}

pub fn is_prime_power(n: u64) -> bool {
    prime_divisors(n).len() == 1
}
