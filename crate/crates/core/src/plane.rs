//! The Desarguesian planes `AG(2,q)` and `PG(2,q)`.

use crate::error::Result;
use crate::field::PrimePowerField;
use crate::incidence::{ConfigurationFile, IncidenceStructure};

/// `AG(2,q)`. Point `(x, y)` has index `x·q + y`. Class `m < q` holds the
/// lines `y = m·x + c` ordered by `c`; class `q` holds the verticals `x = c`.
#[derive(Debug, Clone)]
pub struct AffinePlane {
    q: usize,
    classes: Vec<Vec<Vec<usize>>>,
}

impl AffinePlane {
    pub fn new(q: u64) -> Result<Self> {
        let field = PrimePowerField::new(q)?;
        let q = field.order();
        let mut classes = Vec::with_capacity(q + 1);
        for m in 0..q {
            let class = (0..q)
                .map(|c| {
                    let mut line: Vec<usize> =
                        (0..q).map(|x| x * q + field.add(field.mul(m, x), c)).collect();
                    line.sort_unstable();
                    line
                })
                .collect();
            classes.push(class);
        }
        classes.push((0..q).map(|c| (0..q).map(|y| c * q + y).collect()).collect());
        Ok(Self { q, classes })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn num_points(&self) -> usize {
        self.q * self.q
    }

    pub fn num_lines(&self) -> usize {
        self.q * (self.q + 1)
    }

    /// The `q + 1` parallel classes of `q` lines each.
    pub fn parallel_classes(&self) -> &[Vec<Vec<usize>>] {
        &self.classes
    }

    pub fn to_structure(&self) -> IncidenceStructure {
        IncidenceStructure::new(self.num_points(), self.classes.concat())
            .expect("affine plane lines are distinct")
    }

    /// Interchange file with `classes` given as indices into the canonical
    /// line order.
    pub fn to_file(&self) -> ConfigurationFile {
        let structure = self.to_structure();
        let index_of = |line: &Vec<usize>| structure.lines().binary_search(line).unwrap();
        let classes = self
            .classes
            .iter()
            .map(|class| {
                let mut ids: Vec<usize> = class.iter().map(index_of).collect();
                ids.sort_unstable();
                ids
            })
            .collect();
        let mut file = ConfigurationFile::new(&structure, self.q + 1, self.q);
        file.classes = Some(classes);
        file
    }
}

/// `PG(2,q)` from homogeneous coordinates: points and lines are the non-zero
/// vectors of `GF(q)^3` whose first non-zero entry is 1, incident when their
/// dot product vanishes.
pub fn projective_plane(q: u64) -> Result<IncidenceStructure> {
    let field = PrimePowerField::new(q)?;
    let n = field.order();
    let mut normalized = Vec::with_capacity(n * n + n + 1);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lead = [a, b, c].into_iter().find(|&x| x != 0);
                if lead == Some(1) {
                    normalized.push([a, b, c]);
                }
            }
        }
    }
    let dot = |u: &[usize; 3], w: &[usize; 3]| {
        (0..3).fold(0, |acc, i| field.add(acc, field.mul(u[i], w[i])))
    };
    let lines = normalized
        .iter()
        .map(|l| {
            (0..normalized.len())
                .filter(|&i| dot(l, &normalized[i]) == 0)
                .collect()
        })
        .collect();
    IncidenceStructure::new(normalized.len(), lines)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn affine_counts() {
        for (q, classes) in [(2, 3), (3, 4), (4, 5)] {
            let plane = AffinePlane::new(q).unwrap();
            assert_eq!(plane.num_points(), (q * q) as usize);
            assert_eq!(plane.parallel_classes().len(), classes);
            let s = plane.to_structure();
            assert_eq!(s.num_lines(), plane.num_lines());
            assert!(s.validate(q as usize + 1, q as usize).is_configuration());
            assert!(s.covers_all_pairs());
        }
        // q = 2: every pair of points is a line
        let s = AffinePlane::new(2).unwrap().to_structure();
        assert_eq!(s.lines().len(), 6);
        assert!(s.lines().iter().all(|l| l.len() == 2));
    }

    #[test]
    fn classes_partition_points() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13] {
            let plane = AffinePlane::new(q).unwrap();
            let n = plane.num_points();
            assert!(plane
                .to_structure()
                .validate(q as usize + 1, q as usize)
                .is_configuration());
            for class in plane.parallel_classes() {
                assert_eq!(class.len(), q as usize);
                let mut hits = vec![0; n];
                for p in class.iter().flatten() {
                    hits[*p] += 1;
                }
                assert!(hits.iter().all(|&h| h == 1), "q = {q}");
            }
        }
    }

    #[test]
    fn classes_in_file_index_canonical_lines() {
        let file = AffinePlane::new(3).unwrap().to_file();
        let classes = file.classes.as_ref().unwrap();
        let mut all: Vec<usize> = classes.concat();
        all.sort_unstable();
        assert_eq!(all, (0..12).collect::<Vec<_>>());
        for class in classes {
            let mut seen: Vec<usize> = class.iter().flat_map(|&i| file.lines[i].clone()).collect();
            seen.sort_unstable();
            assert_eq!(seen, (0..9).collect::<Vec<_>>());
        }
    }

    #[test]
    fn projective_planes() {
        for (q, d) in [(2u64, 7u64), (3, 13), (4, 21), (5, 31), (7, 57), (8, 73)] {
            let s = projective_plane(q).unwrap();
            let r = q as usize + 1;
            assert_eq!(s.associated_integer(r, r), Ok(d));
            assert!(s.covers_all_pairs());
        }
        assert!(projective_plane(6).is_err());
    }
}
