//! Gluing two `(r,k)`-configurations into one with associated integer
//! `d_A + d_B - n`, for `1 <= n <= gcd(r,k)`.
//!
//! With `g = gcd(r,k)`, `a = nk/g` and `b = nr/g`:
//!
//! 1. delete `a` points `p_1..p_a` of a line `L` of `A`;
//! 2. delete `b` lines `l_1..l_b` through a point `p` of `B`;
//! 3. refill `L` with `p` and `a - 1` other points of `l_1`;
//! 4. route `b - 1` of the lines that lost `p_1` through `p`;
//! 5. give each remaining line that lost a point one of the `B` points
//!    that lost a line.
//!
//! The counts in step 5 agree because `ar = bk`. Step 5 is a backtracking
//! assignment that rejects any choice putting a pair on two lines; every
//! candidate is re-validated before it is returned.

use std::collections::HashSet;

use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::incidence::IncidenceStructure;

/// Assignment nodes tried per choice of `(L, p)` before moving on.
const ASSIGNMENT_BUDGET: u64 = 1_000_000;

pub fn glue(
    a: &IncidenceStructure,
    b: &IncidenceStructure,
    r: usize,
    k: usize,
    n: usize,
) -> Result<IncidenceStructure> {
    for (name, s) in [("A", a), ("B", b)] {
        let report = s.validate(r, k);
        if !report.is_configuration() {
            return Err(Error::NotAConfiguration {
                r,
                k,
                reason: format!("input {name}: {}", report.failures[0]),
            });
        }
    }
    let g = gcd(r, k);
    if n < 1 || n > g {
        return Err(Error::InvalidParameter(format!(
            "n must lie in [1, gcd(r,k)] = [1, {g}], got {n}"
        )));
    }

    // L = first line of A and p = point 0 of B first; others only as fallback
    for line in 0..a.num_lines() {
        for point in 0..b.num_points() {
            if let Some(s) = attempt(a, b, r, k, n * k / g, n * r / g, line, point) {
                return Ok(s);
            }
        }
    }
    Err(Error::RepairFailed(format!(
        "no assignment validated for r={r}, k={k}, n={n}"
    )))
}

#[allow(clippy::too_many_arguments)]
fn attempt(
    a: &IncidenceStructure,
    b: &IncidenceStructure,
    r: usize,
    k: usize,
    cut_points: usize,
    cut_lines: usize,
    line: usize,
    point: usize,
) -> Option<IncidenceStructure> {
    // points of B are numbered after those of A
    let shift = a.num_points();
    let mut a_lines: Vec<Vec<usize>> = a.lines().to_vec();
    let removed: Vec<usize> = a_lines[line][..cut_points].to_vec();

    // step 1: dangling lines, grouped by the removed point they lost
    let mut dangling: Vec<Vec<usize>> = Vec::with_capacity(cut_points);
    for &q in &removed {
        let through: Vec<usize> = (0..a_lines.len())
            .filter(|&i| i != line && a_lines[i].contains(&q))
            .collect();
        dangling.push(through);
    }
    for l in a_lines.iter_mut() {
        l.retain(|q| !removed.contains(q));
    }

    // step 2
    let through_p = b.lines_through(point);
    let cut: Vec<usize> = through_p[..cut_lines].to_vec();
    let p = point + shift;
    let mut b_lines: Vec<Vec<usize>> = Vec::with_capacity(b.num_lines() - cut_lines);
    let mut deficient: Vec<usize> = Vec::new();
    for (i, l) in b.lines().iter().enumerate() {
        let shifted: Vec<usize> = l.iter().map(|&q| q + shift).collect();
        if cut.contains(&i) {
            deficient.extend(shifted.into_iter().filter(|&q| q != p));
        } else {
            b_lines.push(shifted);
        }
    }

    // step 3: deficient[..k-1] are the other points of l_1
    a_lines[line].push(p);
    a_lines[line].extend(deficient.drain(..cut_points - 1));

    // step 4
    let mut open: Vec<usize> = dangling.concat();
    for &i in open.iter().take(cut_lines - 1) {
        a_lines[i].push(p);
    }
    open.drain(..cut_lines - 1);
    assert_eq!(
        open.len(),
        deficient.len(),
        "dangling lines and deficient points must match"
    );

    // step 5
    let mut covered: HashSet<(usize, usize)> = HashSet::new();
    for l in a_lines.iter().chain(&b_lines) {
        cover(&mut covered, l, true);
    }
    let mut assignment = vec![usize::MAX; open.len()];
    let mut taken = vec![false; deficient.len()];
    let mut nodes = 0;
    if !assign(
        &open, &deficient, &a_lines, &mut covered, &mut assignment, &mut taken, 0, &mut nodes,
    ) {
        return None;
    }
    for (slot, &line_index) in open.iter().enumerate() {
        a_lines[line_index].push(deficient[assignment[slot]]);
    }

    // relabel: surviving A points, then B points
    let total = shift + b.num_points();
    let mut label = vec![usize::MAX; total];
    let mut next = 0;
    for (q, slot) in label.iter_mut().enumerate() {
        if !removed.contains(&q) {
            *slot = next;
            next += 1;
        }
    }
    let lines = a_lines
        .into_iter()
        .chain(b_lines)
        .map(|l| l.into_iter().map(|q| label[q]).collect())
        .collect();
    let glued = IncidenceStructure::new(next, lines).ok()?;
    glued.validate(r, k).is_configuration().then_some(glued)
}

fn cover(covered: &mut HashSet<(usize, usize)>, line: &[usize], on: bool) {
    for (i, &x) in line.iter().enumerate() {
        for &y in &line[..i] {
            let key = (x.min(y), x.max(y));
            if on {
                covered.insert(key);
            } else {
                covered.remove(&key);
            }
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn assign(
    open: &[usize],
    deficient: &[usize],
    a_lines: &[Vec<usize>],
    covered: &mut HashSet<(usize, usize)>,
    assignment: &mut [usize],
    taken: &mut [bool],
    slot: usize,
    nodes: &mut u64,
) -> bool {
    if slot == open.len() {
        return true;
    }
    let line = &a_lines[open[slot]];
    for j in 0..deficient.len() {
        if taken[j] {
            continue;
        }
        *nodes += 1;
        if *nodes > ASSIGNMENT_BUDGET {
            return false;
        }
        let x = deficient[j];
        if line.iter().any(|&y| covered.contains(&(x.min(y), x.max(y)))) {
            continue;
        }
        let pairs: Vec<(usize, usize)> = line.iter().map(|&y| (x.min(y), x.max(y))).collect();
        covered.extend(pairs.iter().copied());
        taken[j] = true;
        assignment[slot] = j;
        if assign(open, deficient, a_lines, covered, assignment, taken, slot + 1, nodes) {
            return true;
        }
        taken[j] = false;
        for pair in &pairs {
            covered.remove(pair);
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::affine_restriction;
    use crate::incidence::fixtures::{fano, pappus};

    #[test]
    fn fano_with_fano() {
        for n in 1..=3 {
            let s = glue(&fano(), &fano(), 3, 3, n).unwrap();
            assert_eq!(s.associated_integer(3, 3), Ok(14 - n as u64), "n = {n}");
        }
    }

    #[test]
    fn figure_two_scenario() {
        let a = affine_restriction(3, 5, 5).unwrap();
        let s = glue(&a, &a, 3, 5, 1).unwrap();
        assert_eq!(s.num_points(), 45);
        assert_eq!(s.associated_integer(3, 5), Ok(9));
    }

    #[test]
    fn mixed_inputs() {
        let s = glue(&fano(), &pappus(), 3, 3, 2).unwrap();
        assert_eq!(s.associated_integer(3, 3), Ok(14));
        let four = affine_restriction(2, 4, 4).unwrap(); // d = 8, gcd 2
        for n in 1..=2 {
            let s = glue(&four, &four, 2, 4, n).unwrap();
            assert_eq!(s.associated_integer(2, 4), Ok(16 - n as u64));
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(
            glue(&fano(), &fano(), 3, 3, 4),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            glue(&fano(), &fano(), 3, 3, 0),
            Err(Error::InvalidParameter(_))
        ));
        let broken = IncidenceStructure::new(3, vec![vec![0, 1, 2]]).unwrap();
        assert!(matches!(
            glue(&broken, &fano(), 3, 3, 1),
            Err(Error::NotAConfiguration { .. })
        ));
    }

    #[test]
    fn parameter_grid() {
        for q in [3u64, 4, 5] {
            for r in 2..=q as usize {
                for k in 2..=q as usize {
                    let s = affine_restriction(r, k, q).unwrap();
                    let d = s.associated_integer(r, k).unwrap();
                    for n in 1..=gcd(r, k) {
                        let glued = glue(&s, &s, r, k, n).unwrap();
                        assert_eq!(
                            glued.associated_integer(r, k),
                            Ok(2 * d - n as u64),
                            "r={r} k={k} q={q} n={n}"
                        );
                    }
                }
            }
        }
    }
}
