//! Small integer helpers shared by the field, bound and construction code.

pub use num_integer::gcd;

/// Factors `q = p^e` with `p` prime, by trial division.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            break;
        }
        p += 1;
    }
    if p * p > q {
        // q itself is prime
        return Some((q, 1));
    }
    let mut rest = q;
    let mut e = 0;
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

pub fn is_prime(n: u64) -> bool {
    matches!(prime_power(n), Some((_, 1)))
}

pub fn is_prime_power(n: u64) -> bool {
    prime_power(n).is_some()
}

/// Smallest prime power `>= n`.
pub fn next_prime_power(n: u64) -> u64 {
    let mut q = n.max(2);
    while !is_prime_power(q) {
        q += 1;
    }
    q
}

/// All primes strictly below `n`.
pub fn primes_below(n: u64) -> Vec<u64> {
    (2..n).filter(|&p| is_prime(p)).collect()
}

/// `floor(log_base(x))` for `x >= 1`, by repeated multiplication.
pub fn floor_log(base: u64, x: u64) -> u32 {
    assert!(base >= 2 && x >= 1);
    let mut t = 0;
    let mut power = base;
    while power <= x {
        t += 1;
        match power.checked_mul(base) {
            Some(next) => power = next,
            None => break,
        }
    }
    t
}
