//! Incidence structures and their validation as `(v, b, r, k)`-configurations.
//!
//! Points are the dense indices `0..v`. Lines are stored sorted, and the line
//! list itself is kept in lexicographic order, so two structures with the same
//! line set compare equal and serialize to the same bytes.

mod json;
mod search;

pub use json::ConfigurationFile;
pub use search::{brute_force_exists, Existence};

use std::collections::BTreeMap;

use serde::Serialize;

use crate::arith::gcd;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IncidenceStructure {
    v: usize,
    lines: Vec<Vec<usize>>,
}

impl IncidenceStructure {
    /// Sorts each line and the line list. Fails on out-of-range points,
    /// repeated points within a line and repeated lines.
    pub fn new(v: usize, lines: Vec<Vec<usize>>) -> Result<Self> {
        let mut lines = lines;
        for (i, line) in lines.iter_mut().enumerate() {
            line.sort_unstable();
            if let Some(&p) = line.iter().find(|&&p| p >= v) {
                return Err(Error::MalformedStructure(format!(
                    "line {i} contains point {p} but v = {v}"
                )));
            }
            if line.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::MalformedStructure(format!(
                    "line {i} repeats a point: {line:?}"
                )));
            }
        }
        lines.sort();
        if let Some(w) = lines.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::MalformedStructure(format!("duplicate line {:?}", w[0])));
        }
        Ok(Self { v, lines })
    }

    pub fn num_points(&self) -> usize {
        self.v
    }

    pub fn num_lines(&self) -> usize {
        self.lines.len()
    }

    pub fn lines(&self) -> &[Vec<usize>] {
        &self.lines
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut degree = vec![0; self.v];
        for p in self.lines.iter().flatten() {
            degree[*p] += 1;
        }
        degree
    }

    /// Indices of the lines through `point`, increasing.
    pub fn lines_through(&self, point: usize) -> Vec<usize> {
        (0..self.lines.len())
            .filter(|&i| self.lines[i].binary_search(&point).is_ok())
            .collect()
    }

    /// Checks every axiom and collects all violations.
    pub fn validate(&self, r: usize, k: usize) -> ValidationReport {
        let mut failures = Vec::new();

        for (point, degree) in self.degrees().into_iter().enumerate() {
            if degree != r {
                failures.push(Finding::PointDegree {
                    point,
                    expected: r,
                    actual: degree,
                });
            }
        }
        for (line, points) in self.lines.iter().enumerate() {
            if points.len() != k {
                failures.push(Finding::LineSize {
                    line,
                    expected: k,
                    actual: points.len(),
                });
            }
        }

        // first line covering each pair, 1-based; 0 = uncovered
        let mut cover = vec![0u32; self.v * self.v.saturating_sub(1) / 2];
        let mut repeated: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (index, line) in self.lines.iter().enumerate() {
            for (j, &hi) in line.iter().enumerate() {
                for &lo in &line[..j] {
                    let slot = &mut cover[hi * (hi - 1) / 2 + lo];
                    if *slot == 0 {
                        *slot = index as u32 + 1;
                    } else {
                        repeated
                            .entry((lo, hi))
                            .or_insert_with(|| vec![*slot as usize - 1])
                            .push(index);
                    }
                }
            }
        }
        failures.extend(
            repeated
                .into_iter()
                .map(|(points, lines)| Finding::RepeatedPair { points, lines }),
        );

        ValidationReport { r, k, failures }
    }

    /// Associated integer `d = v·gcd(r,k)/k` of a validated configuration.
    pub fn associated_integer(&self, r: usize, k: usize) -> Result<u64> {
        let report = self.validate(r, k);
        if !report.is_configuration() {
            return Err(Error::NotAConfiguration {
                r,
                k,
                reason: report.failures[0].to_string(),
            });
        }
        let (v, b) = (self.v as u64, self.lines.len() as u64);
        let (r, k) = (r as u64, k as u64);
        let g = gcd(r, k);
        if v * r != b * k {
            return Err(Error::NonIntegralParameter(format!("v·r = {} but b·k = {}", v * r, b * k)));
        }
        if (v * g) % k != 0 || (b * g) % r != 0 {
            return Err(Error::NonIntegralParameter(format!(
                "v·gcd/k = {v}·{g}/{k} is not an integer"
            )));
        }
        let d = v * g / k;
        debug_assert_eq!(d, b * g / r);
        Ok(d)
    }

    /// Disjoint union; points of `other` are shifted past ours.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let shift = self.v;
        let lines = self
            .lines
            .iter()
            .cloned()
            .chain(
                other
                    .lines
                    .iter()
                    .map(|l| l.iter().map(|p| p + shift).collect()),
            )
            .collect();
        Self::new(self.v + other.v, lines).expect("disjoint union of valid structures")
    }

    /// Whether every pair of distinct points lies on some line.
    pub fn covers_all_pairs(&self) -> bool {
        let mut covered = vec![false; self.v * self.v];
        for line in &self.lines {
            for &a in line {
                for &b in line {
                    covered[a * self.v + b] = true;
                }
            }
        }
        (0..self.v).all(|a| (0..self.v).all(|b| a == b || covered[a * self.v + b]))
    }
}

/// One violated axiom, with the offending point, line or pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Finding {
    PointDegree {
        point: usize,
        expected: usize,
        actual: usize,
    },
    LineSize {
        line: usize,
        expected: usize,
        actual: usize,
    },
    RepeatedPair {
        points: (usize, usize),
        lines: Vec<usize>,
    },
}

impl std::fmt::Display for Finding {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Finding::PointDegree {
                point,
                expected,
                actual,
            } => write!(f, "point {point} is on {actual} lines, expected {expected}"),
            Finding::LineSize {
                line,
                expected,
                actual,
            } => write!(f, "line {line} has {actual} points, expected {expected}"),
            Finding::RepeatedPair { points, lines } => write!(
                f,
                "points {} and {} share lines {:?}",
                points.0, points.1, lines
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub r: usize,
    pub k: usize,
    /// Point findings first (by point), then lines, then pairs.
    pub failures: Vec<Finding>,
}

impl ValidationReport {
    pub fn is_configuration(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `(d, r, k)` together with the derived point and line counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConfigurationParams {
    pub d: u64,
    pub r: u64,
    pub k: u64,
    pub v: u64,
    pub b: u64,
    /// `v >= r(k-1)+1` and `b >= k(r-1)+1`.
    pub necessary_conditions_hold: bool,
}

impl ConfigurationParams {
    pub fn from_d(d: u64, r: u64, k: u64) -> Result<Self> {
        if d < 1 || r < 2 || k < 2 {
            return Err(Error::InvalidParameter(format!(
                "need d >= 1 and r, k >= 2 (got d={d}, r={r}, k={k})"
            )));
        }
        let g = gcd(r, k);
        let v = d * k / g;
        let b = d * r / g;
        debug_assert_eq!(v * r, b * k);
        Ok(Self {
            d,
            r,
            k,
            v,
            b,
            necessary_conditions_hold: v > r * (k - 1) && b > k * (r - 1),
        })
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::IncidenceStructure;

    pub fn fano() -> IncidenceStructure {
        let lines = (0..7).map(|t| [0, 1, 3].iter().map(|a| (a + t) % 7).collect()).collect();
        IncidenceStructure::new(7, lines).unwrap()
    }

    /// Pappus: points A0..A2 = 0..2, B0..B2 = 3..5, cross points 6..8.
    pub fn pappus() -> IncidenceStructure {
        IncidenceStructure::new(
            9,
            vec![
                vec![0, 1, 2],
                vec![3, 4, 5],
                vec![6, 7, 8],
                vec![0, 4, 6],
                vec![1, 3, 6],
                vec![0, 5, 7],
                vec![2, 3, 7],
                vec![1, 5, 8],
                vec![2, 4, 8],
            ],
        )
        .unwrap()
    }

    /// Four lines in general position: 6 intersection points, 3 per line.
    pub fn four_lines() -> IncidenceStructure {
        IncidenceStructure::new(
            6,
            vec![vec![0, 1, 2], vec![0, 3, 4], vec![1, 3, 5], vec![2, 4, 5]],
        )
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn canonical_form() {
        let a = IncidenceStructure::new(4, vec![vec![3, 1], vec![0, 2]]).unwrap();
        assert_eq!(a.lines(), &[vec![0, 2], vec![1, 3]]);
        assert!(matches!(
            IncidenceStructure::new(3, vec![vec![0, 3]]),
            Err(Error::MalformedStructure(_))
        ));
        assert!(matches!(
            IncidenceStructure::new(3, vec![vec![0, 0]]),
            Err(Error::MalformedStructure(_))
        ));
        assert!(matches!(
            IncidenceStructure::new(3, vec![vec![0, 1], vec![1, 0]]),
            Err(Error::MalformedStructure(_))
        ));
    }

    #[test]
    fn fano_is_a_configuration() {
        let fano = fano();
        assert!(fano.validate(3, 3).is_configuration());
        assert!(fano.covers_all_pairs());
        assert_eq!(fano.associated_integer(3, 3), Ok(7));
    }

    #[test]
    fn single_line_has_degree_defects() {
        let s = IncidenceStructure::new(3, vec![vec![0, 1, 2]]).unwrap();
        let report = s.validate(2, 3);
        assert!(!report.is_configuration());
        assert_eq!(report.failures.len(), 3);
        assert_eq!(
            report.failures[0],
            Finding::PointDegree {
                point: 0,
                expected: 2,
                actual: 1
            }
        );
        assert!(matches!(
            s.associated_integer(2, 3),
            Err(Error::NotAConfiguration { .. })
        ));
    }

    #[test]
    fn complete_quadrilateral() {
        let mut lines = Vec::new();
        for a in 0..4 {
            for b in a + 1..4 {
                lines.push(vec![a, b]);
            }
        }
        let s = IncidenceStructure::new(4, lines).unwrap();
        assert!(s.validate(3, 2).is_configuration());
        // independent pair check: each pair on exactly one line
        for a in 0..4 {
            for b in a + 1..4 {
                let on = s.lines().iter().filter(|l| l.contains(&a) && l.contains(&b)).count();
                assert_eq!(on, 1);
            }
        }
        assert_eq!(s.associated_integer(3, 2), Ok(2));
    }

    #[test]
    fn repeated_pairs_are_reported() {
        let s = IncidenceStructure::new(4, vec![vec![0, 1, 2], vec![0, 1, 3]]).unwrap();
        let report = s.validate(2, 3);
        assert!(report.failures.contains(&Finding::RepeatedPair {
            points: (0, 1),
            lines: vec![0, 1]
        }));
    }

    #[test]
    fn figure_one_examples() {
        assert_eq!(four_lines().associated_integer(2, 3), Ok(2));
        assert_eq!(pappus().associated_integer(3, 3), Ok(9));
        assert!(!pappus().covers_all_pairs());
    }

    #[test]
    fn params_from_d() {
        let p = ConfigurationParams::from_d(7, 3, 3).unwrap();
        assert_eq!((p.v, p.b, p.necessary_conditions_hold), (7, 7, true));
        let p = ConfigurationParams::from_d(5, 3, 5).unwrap();
        assert_eq!((p.v, p.b, p.necessary_conditions_hold), (25, 15, true));
        let p = ConfigurationParams::from_d(1, 3, 3).unwrap();
        assert_eq!((p.v, p.b, p.necessary_conditions_hold), (1, 1, false));
        let p = ConfigurationParams::from_d(2, 2, 3).unwrap();
        assert_eq!((p.v, p.b), (6, 4));
        assert!(ConfigurationParams::from_d(0, 3, 3).is_err());
    }

    #[test]
    fn double_counting() {
        for s in [fano(), pappus(), four_lines()] {
            let incidences: usize = s.lines().iter().map(Vec::len).sum();
            assert_eq!(incidences, s.degrees().iter().sum::<usize>());
        }
    }
}
