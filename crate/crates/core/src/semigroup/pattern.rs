use std::fmt;
use std::str::FromStr;

use super::NumericalSemigroup;
use crate::error::{Error, Result};

/// `c_1 X_1 + ... + c_n X_n + constant`, with every `c_i` non-zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearPattern {
    coefficients: Vec<i64>,
    constant: i64,
}

impl LinearPattern {
    pub fn new(coefficients: Vec<i64>, constant: i64) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::InvalidPattern("pattern needs at least one variable".into()));
        }
        if let Some(i) = coefficients.iter().position(|&c| c == 0) {
            return Err(Error::InvalidPattern(format!("coefficient of X{} is zero", i + 1)));
        }
        Ok(Self {
            coefficients,
            constant,
        })
    }

    /// `X1 + X2 - n`.
    pub fn sum_minus(n: i64) -> Self {
        Self {
            coefficients: vec![1, 1],
            constant: -n,
        }
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn constant(&self) -> i64 {
        self.constant
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn evaluate(&self, values: &[u64]) -> i128 {
        debug_assert_eq!(values.len(), self.coefficients.len());
        self.coefficients
            .iter()
            .zip(values)
            .map(|(&c, &s)| c as i128 * s as i128)
            .sum::<i128>()
            + self.constant as i128
    }
}

impl fmt::Display for LinearPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &c) in self.coefficients.iter().enumerate() {
            let sign = if c < 0 { "-" } else if i > 0 { "+" } else { "" };
            f.write_str(sign)?;
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "X{}", i + 1)?;
        }
        match self.constant {
            0 => Ok(()),
            c if c < 0 => write!(f, "-{}", -(c as i128)),
            c => write!(f, "+{c}"),
        }
    }
}

/// Parses strings such as `X1+X2-1` or `2X1 - X2 + 3`.
///
/// A term is `[+|-][coefficient]X<index>` and at most one bare integer
/// constant may appear anywhere in the sum. Indices must cover `1..=n`
/// exactly once each. Whitespace is ignored and `x` is accepted for `X`.
impl FromStr for LinearPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(Error::InvalidPattern("empty pattern".into()));
        }
        let bad = |msg: String| Error::InvalidPattern(format!("{msg} in {s:?}"));

        let mut terms: Vec<(usize, i64)> = Vec::new();
        let mut constant: Option<i64> = None;
        let mut pos = 0;
        while pos < text.len() {
            let negative = match text[pos] {
                '+' => {
                    pos += 1;
                    false
                }
                '-' => {
                    pos += 1;
                    true
                }
                _ if pos == 0 => false,
                c => return Err(bad(format!("expected '+' or '-' before {c:?}"))),
            };
            let digits = take_digits(&text, &mut pos);
            let has_var = pos < text.len() && matches!(text[pos], 'X' | 'x');
            if !has_var {
                let Some(digits) = digits else {
                    return Err(bad("expected a number or a variable".into()));
                };
                if constant.is_some() {
                    return Err(bad("more than one constant".into()));
                }
                let value = parse_int(&digits).ok_or_else(|| bad("constant out of range".into()))?;
                constant = Some(if negative { -value } else { value });
                continue;
            }
            pos += 1;
            let index = take_digits(&text, &mut pos)
                .ok_or_else(|| bad("variable without index".into()))?;
            let index: usize = index.parse().map_err(|_| bad("bad variable index".into()))?;
            let magnitude = match digits {
                Some(d) => parse_int(&d).ok_or_else(|| bad("coefficient out of range".into()))?,
                None => 1,
            };
            if magnitude == 0 {
                return Err(bad(format!("zero coefficient on X{index}")));
            }
            terms.push((index, if negative { -magnitude } else { magnitude }));
        }

        terms.sort_by_key(|&(i, _)| i);
        for (expected, &(index, _)) in (1..).zip(&terms) {
            if index != expected {
                return Err(bad(format!(
                    "variable indices must be exactly 1..={} once each",
                    terms.len()
                )));
            }
        }
        LinearPattern::new(
            terms.into_iter().map(|(_, c)| c).collect(),
            constant.unwrap_or(0),
        )
    }
}

fn take_digits(text: &[char], pos: &mut usize) -> Option<String> {
    let start = *pos;
    while *pos < text.len() && text[*pos].is_ascii_digit() {
        *pos += 1;
    }
    (*pos > start).then(|| text[start..*pos].iter().collect())
}

fn parse_int(digits: &str) -> Option<i64> {
    digits.parse().ok()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PatternVerdict {
    /// No violation among tuples drawn from `[window.0, window.1]`.
    /// `conclusive` is set when the coefficients sum to at least one, in
    /// which case tuples outside the window cannot violate the pattern.
    Admitted { window: (u64, u64), conclusive: bool },
    /// Lexicographically smallest violating non-increasing tuple.
    Counterexample { tuple: Vec<u64>, value: i128 },
}

impl PatternVerdict {
    pub fn is_admitted(&self) -> bool {
        matches!(self, PatternVerdict::Admitted { .. })
    }
}

/// Checks `p(s_1, ..., s_n) ∈ S` for every non-increasing tuple of members.
///
/// Members are taken from `[m, c + B]` with `B = |constant| + Σ|c_i|·(c+1)`;
/// zero is added only when `include_zero` is set.
pub fn admits_pattern(
    semigroup: &NumericalSemigroup,
    pattern: &LinearPattern,
    include_zero: bool,
) -> PatternVerdict {
    let c = semigroup.conductor();
    let slack = pattern.constant().unsigned_abs()
        + pattern
            .coefficients()
            .iter()
            .map(|x| x.unsigned_abs() * (c + 1))
            .sum::<u64>();
    let low = semigroup.multiplicity();
    let high = c + slack;

    let mut elements: Vec<u64> = Vec::new();
    if include_zero {
        elements.push(0);
    }
    elements.extend((low..=high).filter(|&x| semigroup.contains(x as i64)));

    let mut tuple = Vec::with_capacity(pattern.len());
    if let Some(value) = search(semigroup, pattern, &elements, elements.len(), &mut tuple) {
        return PatternVerdict::Counterexample { tuple, value };
    }
    let conclusive = pattern.coefficients().iter().sum::<i64>() >= 1;
    PatternVerdict::Admitted {
        window: (if include_zero { 0 } else { low }, high),
        conclusive,
    }
}

/// Depth-first over non-increasing tuples in lexicographic order; `limit` is
/// the number of candidates allowed at this position (those `<=` the
/// previous entry). Leaves the violating tuple in `tuple`.
fn search(
    semigroup: &NumericalSemigroup,
    pattern: &LinearPattern,
    elements: &[u64],
    limit: usize,
    tuple: &mut Vec<u64>,
) -> Option<i128> {
    for (i, &x) in elements[..limit].iter().enumerate() {
        tuple.push(x);
        if tuple.len() == pattern.len() {
            let value = pattern.evaluate(tuple);
            if value < 0 || !semigroup.contains(value as i64) {
                return Some(value);
            }
        } else if let Some(v) = search(semigroup, pattern, elements, i + 1, tuple) {
            return Some(v);
        }
        tuple.pop();
    }
    None
}
