//! Exhaustive search for small configurations.
//!
//! Lines are chosen in lexicographic order with the first line fixed to
//! `{0, .., k-1}` (any configuration can be relabelled that way). Since line
//! minima never decrease, every line must start at the smallest point that
//! still lacks lines; this is what keeps the search small.

use super::IncidenceStructure;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Existence {
    Exists(IncidenceStructure),
    /// The whole canonical search space was exhausted.
    NotExists,
    /// The node budget ran out first.
    Unknown { nodes: u64 },
}

pub fn brute_force_exists(v: usize, b: usize, r: usize, k: usize, node_budget: u64) -> Existence {
    if r == 0 || k == 0 || k > v || v * r != b * k {
        return Existence::NotExists;
    }
    let mut search = Search {
        v,
        b,
        r,
        k,
        degree: vec![0; v],
        paired: vec![false; v * v],
        lines: Vec::with_capacity(b),
        nodes: 0,
        budget: node_budget,
    };
    let first: Vec<usize> = (0..k).collect();
    search.place(&first);
    match search.extend() {
        Step::Found => {
            let s = IncidenceStructure::new(v, search.lines).expect("search emits distinct lines");
            Existence::Exists(s)
        }
        Step::Exhausted => Existence::NotExists,
        Step::OutOfBudget => Existence::Unknown {
            nodes: search.nodes,
        },
    }
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

struct Search {
    v: usize,
    b: usize,
    r: usize,
    k: usize,
    degree: Vec<usize>,
    paired: Vec<bool>,
    lines: Vec<Vec<usize>>,
    nodes: u64,
    budget: u64,
}

impl Search {
    fn place(&mut self, line: &[usize]) {
        self.set(line, true);
        self.lines.push(line.to_vec());
    }

    fn remove(&mut self) {
        let line = self.lines.pop().unwrap();
        self.set(&line, false);
    }

    fn set(&mut self, line: &[usize], on: bool) {
        for &p in line {
            if on {
                self.degree[p] += 1;
            } else {
                self.degree[p] -= 1;
            }
            for &q in line {
                if p != q {
                    self.paired[p * self.v + q] = on;
                }
            }
        }
    }

    fn extend(&mut self) -> Step {
        let Some(start) = (0..self.v).find(|&p| self.degree[p] < self.r) else {
            return if self.lines.len() == self.b {
                Step::Found
            } else {
                Step::Exhausted
            };
        };
        if self.lines.len() == self.b {
            return Step::Exhausted;
        }
        let mut line = vec![start];
        self.choose(&mut line, start + 1)
    }

    /// Completes `line` with points `>= from`, then recurses on the next line.
    fn choose(&mut self, line: &mut Vec<usize>, from: usize) -> Step {
        if line.len() == self.k {
            if self.lines.last().is_some_and(|last| line.as_slice() <= last.as_slice()) {
                return Step::Exhausted;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Step::OutOfBudget;
            }
            self.place(line);
            match self.extend() {
                Step::Exhausted => {}
                other => return other,
            }
            self.remove();
            return Step::Exhausted;
        }
        let missing = self.k - line.len();
        for p in from..=self.v - missing {
            if self.degree[p] >= self.r || line.iter().any(|&q| self.paired[q * self.v + p]) {
                continue;
            }
            line.push(p);
            let step = self.choose(line, p + 1);
            line.pop();
            if !matches!(step, Step::Exhausted) {
                return step;
            }
        }
        Step::Exhausted
    }
}
