//! Closed-form bounds on multiplicity and conductor, and regeneration of the
//! two comparison tables (balanced and coprime parameters).
//!
//! Everything here is integer arithmetic; logarithm floors are computed by
//! repeated multiplication.

use std::fmt::Write;

use serde::Serialize;

use crate::arith::{floor_log, gcd, next_prime_power, primes_below};
use crate::error::Result;
use crate::golomb::golomb_bound_with;

/// `r² - r + 1`, the least possible multiplicity for balanced configurations.
pub fn projective_bound(r: u64) -> u64 {
    r * r - r + 1
}

/// `2 · Π_{p prime, p < n} (⌊log_p(n-1)⌋ + 1)`: conductor bound for a
/// semigroup containing every prime power `>= n`.
pub fn prime_power_conductor_bound(n: u64) -> u64 {
    assert!(n >= 2, "n must be at least 2");
    2 * primes_below(n)
        .into_iter()
        .map(|p| floor_log(p, n - 1) as u64 + 1)
        .product::<u64>()
}

/// `(x+1)·m - x·gcd(r,k)` with `x = ⌊(m-2)/gcd(r,k)⌋`.
pub fn pattern_conductor_bound(r: u64, k: u64, m: u64) -> u64 {
    assert!(m >= 2, "multiplicity must be at least 2");
    let g = gcd(r, k);
    let x = (m - 2) / g;
    (x + 1) * m - x * g
}

/// `q·gcd(r,k)` with `q` the smallest prime power `>= max(r,k)`; the
/// associated integer of an affine restriction, hence a multiplicity bound.
pub fn multiplicity_seed(r: u64, k: u64) -> u64 {
    next_prime_power(r.max(k)) * gcd(r, k)
}

/// `G(r)` values as printed in the published comparison table.
const PUBLISHED_G: [(usize, u64); 7] = [(3, 7), (4, 13), (5, 23), (6, 35), (7, 48), (8, 63), (9, 80)];

/// Rows of the coprime comparison table.
pub const TABLE2_PARAMS: [(u64, u64); 20] = [
    (3, 4),
    (3, 5),
    (3, 7),
    (3, 8),
    (3, 10),
    (3, 11),
    (3, 13),
    (4, 5),
    (4, 7),
    (4, 9),
    (4, 11),
    (4, 13),
    (5, 6),
    (5, 7),
    (5, 8),
    (5, 9),
    (5, 11),
    (5, 12),
    (5, 13),
    (5, 14),
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1Row {
    pub r: u64,
    pub projective: u64,
    /// `2L + 1` from the shortest ruler found or bundled.
    pub golomb: u64,
    pub ruler_length: u32,
    /// Whether `golomb` comes from an exhaustive search in this run.
    pub golomb_certified: bool,
    /// The published `G(r)`, when known.
    pub golomb_published: Option<u64>,
    pub pattern_bound: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Table2Row {
    pub r: u64,
    pub k: u64,
    pub prime_power_bound: u64,
    pub pattern_bound: u64,
}

/// Balanced bounds for `r = 3..=r_max`; rulers are searched for orders up to
/// `search_up_to` and read from the bundled table above that.
pub fn emit_table1(r_max: u64, search_up_to: usize) -> Result<Vec<Table1Row>> {
    (3..=r_max)
        .map(|r| {
            let g = golomb_bound_with(r as usize, search_up_to)?;
            Ok(Table1Row {
                r,
                projective: projective_bound(r),
                golomb: g.bound(),
                ruler_length: g.length(),
                golomb_certified: g.certified(),
                golomb_published: PUBLISHED_G
                    .iter()
                    .find(|(order, _)| *order as u64 == r)
                    .map(|&(_, v)| v),
                pattern_bound: pattern_conductor_bound(r, r, multiplicity_seed(r, r)),
            })
        })
        .collect()
}

pub fn emit_table2() -> Vec<Table2Row> {
    TABLE2_PARAMS
        .iter()
        .map(|&(r, k)| Table2Row {
            r,
            k,
            prime_power_bound: prime_power_conductor_bound(r.max(k)),
            pattern_bound: pattern_conductor_bound(r, k, multiplicity_seed(r, k)),
        })
        .collect()
}

pub fn table1_csv(rows: &[Table1Row]) -> String {
    let mut out = String::from("r,P,G,G_published,G_certified,thm12\n");
    for row in rows {
        let published = row.golomb_published.map(|v| v.to_string()).unwrap_or_default();
        writeln!(
            out,
            "{},{},{},{},{},{}",
            row.r, row.projective, row.golomb, published, row.golomb_certified, row.pattern_bound
        )
        .unwrap();
    }
    out
}

pub fn table1_text(rows: &[Table1Row]) -> String {
    let mut out = format!("{:>3}  {:>5}  {:>5}  {:>7}  {}\n", "r", "P(r)", "G(r)", "pattern", "note");
    for row in rows {
        let mut note = if row.golomb_certified {
            format!("L={} searched", row.ruler_length)
        } else {
            format!("L={} from table", row.ruler_length)
        };
        if let Some(published) = row.golomb_published.filter(|&p| p != row.golomb) {
            write!(note, "; published G(r) = {published}").unwrap();
        }
        writeln!(
            out,
            "{:>3}  {:>5}  {:>5}  {:>7}  {}",
            row.r, row.projective, row.golomb, row.pattern_bound, note
        )
        .unwrap();
    }
    out
}

/// Header `r,k,thm9,thm12`, one line per row, trailing newline.
pub fn table2_csv(rows: &[Table2Row]) -> String {
    let mut out = String::from("r,k,thm9,thm12\n");
    for row in rows {
        writeln!(out, "{},{},{},{}", row.r, row.k, row.prime_power_bound, row.pattern_bound).unwrap();
    }
    out
}

pub fn table2_text(rows: &[Table2Row]) -> String {
    let mut out = format!("{:>3}  {:>3}  {:>11}  {:>7}\n", "r", "k", "prime-power", "pattern");
    for row in rows {
        writeln!(
            out,
            "{:>3}  {:>3}  {:>11}  {:>7}",
            row.r, row.k, row.prime_power_bound, row.pattern_bound
        )
        .unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective() {
        assert_eq!(projective_bound(3), 7);
        assert_eq!(projective_bound(7), 43);
        assert_eq!(projective_bound(2), 3);
    }

    #[test]
    fn prime_power_bound_examples() {
        assert_eq!(prime_power_conductor_bound(2), 2);
        assert_eq!(prime_power_conductor_bound(4), 8);
        assert_eq!(prime_power_conductor_bound(7), 24);
        assert_eq!(prime_power_conductor_bound(14), 384);
    }

    #[test]
    fn pattern_bound_examples() {
        assert_eq!(pattern_conductor_bound(3, 3, 9), 21);
        assert_eq!(pattern_conductor_bound(3, 4, 4), 10);
        assert_eq!(pattern_conductor_bound(5, 14, 16), 226);
        assert_eq!(pattern_conductor_bound(3, 4, 2), 2);
    }

    #[test]
    fn seeds() {
        assert_eq!(multiplicity_seed(3, 3), 9);
        assert_eq!(multiplicity_seed(3, 4), 4);
        assert_eq!(multiplicity_seed(5, 14), 16);
        assert_eq!(multiplicity_seed(5, 5), 25);
    }

    #[test]
    fn table2_rows() {
        let rows = emit_table2();
        let find = |r, k| rows.iter().find(|row| row.r == r && row.k == k).unwrap();
        assert_eq!((find(3, 10).prime_power_bound, find(3, 10).pattern_bound), (96, 101));
        assert_eq!((find(4, 9).prime_power_bound, find(4, 9).pattern_bound), (64, 65));
        assert_eq!((find(5, 12).prime_power_bound, find(5, 12).pattern_bound), (192, 145));
        assert!(table2_csv(&rows).starts_with("r,k,thm9,thm12\n3,4,8,10\n"));
    }

    #[test]
    fn table1_rows() {
        let rows = emit_table1(9, 6).unwrap();
        let r4 = &rows[1];
        assert_eq!((r4.projective, r4.golomb, r4.pattern_bound), (13, 13, 52));
        let r6 = &rows[3];
        assert_eq!((r6.projective, r6.golomb, r6.pattern_bound), (31, 35, 258));
        assert!(r6.golomb_certified);
        let r9 = &rows[6];
        assert_eq!((r9.projective, r9.golomb, r9.pattern_bound), (73, 89, 657));
        assert_eq!(r9.golomb_published, Some(80));
        assert!(!r9.golomb_certified);
        assert!(table1_text(&rows).contains("published G(r) = 80"));
        for row in &rows {
            assert!(row.projective <= row.golomb);
        }
    }
}
