//! Numerical semigroups: construction from generators, the usual invariants
//! (multiplicity, conductor, genus, gaps) and pattern admission.
//!
//! Membership is decided by an additive sieve. The table is grown until a run
//! of `multiplicity` consecutive members is seen, after which every larger
//! integer is a member as well.

mod pattern;

pub use pattern::{admits_pattern, LinearPattern, PatternVerdict};

use crate::arith::gcd;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    conductor: u64,
    genus: u64,
    multiplicity: u64,
    /// `membership[x]` for `0 <= x <= conductor`.
    membership: Vec<bool>,
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `gens`. The input may be redundant
    /// and unordered; the stored generating set is the minimal one.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if gens.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let mut gens = gens.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let g = gens.iter().copied().fold(0, gcd);
        if g != 1 {
            return Err(Error::NonCoprimeGenerators { gcd: g });
        }

        let multiplicity = gens[0];
        if multiplicity == 1 {
            return Ok(Self {
                generators: vec![1],
                conductor: 0,
                genus: 0,
                multiplicity: 1,
                membership: vec![true],
            });
        }

        let largest = *gens.last().unwrap();
        let mut upper = (multiplicity - 1) * (largest - 1) + multiplicity;
        let (table, conductor) = loop {
            let table = sieve(&gens, upper);
            let last_gap = (0..=upper as usize).rev().find(|&x| !table[x]).unwrap() as u64;
            if upper - last_gap >= multiplicity {
                break (table, last_gap + 1);
            }
            upper *= 2;
        };

        let membership = table[..=conductor as usize].to_vec();
        let genus = membership.iter().filter(|&&m| !m).count() as u64;
        let generators = gens
            .iter()
            .copied()
            .filter(|&x| !is_sum_of_two_nonzero(&table, x))
            .collect();

        Ok(Self {
            generators,
            conductor,
            genus,
            multiplicity,
            membership,
        })
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }

    /// Frobenius number, the largest gap; `-1` for the full semigroup.
    pub fn frobenius_number(&self) -> i64 {
        self.conductor as i64 - 1
    }

    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            false
        } else if x as u64 >= self.conductor {
            true
        } else {
            self.membership[x as usize]
        }
    }

    /// All non-members in increasing order.
    pub fn gaps(&self) -> Vec<u64> {
        (0..self.conductor)
            .filter(|&x| !self.membership[x as usize])
            .collect()
    }

    /// Members in `[0, bound]`, increasing.
    pub fn members_up_to(&self, bound: u64) -> impl Iterator<Item = u64> + '_ {
        (0..=bound).filter(move |&x| self.contains(x as i64))
    }
}

/// Additive sieve over `[0, upper]`.
fn sieve(gens: &[u64], upper: u64) -> Vec<bool> {
    let upper = upper as usize;
    let mut table = vec![false; upper + 1];
    table[0] = true;
    for x in 1..=upper {
        table[x] = gens
            .iter()
            .take_while(|&&g| g as usize <= x)
            .any(|&g| table[x - g as usize]);
    }
    table
}

fn is_sum_of_two_nonzero(table: &[bool], x: u64) -> bool {
    let x = x as usize;
    (1..=x / 2).any(|a| table[a] && table[x - a])
}

/// `(a-1)(b-1)`, the conductor of a semigroup with two coprime generators.
pub fn two_generator_conductor(a: u64, b: u64) -> Result<u64> {
    if a < 2 || b < 2 {
        return Err(Error::InvalidParameter(format!(
            "two-generator conductor needs a, b >= 2 (got {a}, {b})"
        )));
    }
    let g = gcd(a, b);
    if g != 1 {
        return Err(Error::NonCoprimeGenerators { gcd: g });
    }
    Ok((a - 1) * (b - 1))
}
