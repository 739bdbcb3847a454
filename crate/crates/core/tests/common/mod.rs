#![allow(dead_code)]

use cfgsg_core::arith::{gcd, is_prime_power, next_prime_power};
use cfgsg_core::NumericalSemigroup;
use rand::Rng;

/// The semigroup of all prime powers `>= n`, truncated to what decides
/// whether its conductor is at most `bound`.
///
/// Membership of `x` only depends on generators `<= x`, and the conductor is
/// `<= bound` iff `[bound, bound + m)` are members, `m` the smallest
/// generator. So generators up to `bound + m` give the exact answer.
pub fn prime_power_semigroup(n: u64, bound: u64) -> NumericalSemigroup {
    let m = next_prime_power(n);
    let gens: Vec<u64> = (n..=bound + m).filter(|&q| is_prime_power(q)).collect();
    NumericalSemigroup::from_generators(&gens).expect("prime powers >= n are coprime")
}

/// Between one and five generators in `[2, max]` with gcd 1.
pub fn random_generators(rng: &mut impl Rng, max: u64) -> Vec<u64> {
    loop {
        let count = rng.random_range(1..=5);
        let gens: Vec<u64> = (0..count).map(|_| rng.random_range(2..=max)).collect();
        if gens.iter().copied().fold(0, gcd) == 1 {
            return gens;
        }
    }
}
