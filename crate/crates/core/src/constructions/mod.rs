//! Configuration constructions: restrictions of affine planes, cyclic
//! configurations from Golomb rulers, and the gluing of two configurations
//! that realises `d_A + d_B - n`. The closure engine combines them into a
//! certified lower approximation of the semigroup of associated integers.

mod closure;
mod glue;

pub use closure::{d_closure, Closure, Recipe};
pub use glue::glue;

use crate::arith::{gcd, prime_power};
use crate::error::{Error, Result};
use crate::golomb::GolombRuler;
use crate::incidence::IncidenceStructure;
use crate::plane::AffinePlane;

/// Lines of `r` parallel classes of `AG(2,q)`, restricted to the points on
/// `k` lines of one further class.
///
/// Classes `0..r` supply the lines and the first `k` lines of class `r`
/// supply the points. The result has `kq` points, `rq` lines and associated
/// integer `q·gcd(r,k)`.
pub fn affine_restriction(r: usize, k: usize, q: u64) -> Result<IncidenceStructure> {
    if r < 2 || k < 2 {
        return Err(Error::InvalidParameter(format!("need r, k >= 2 (got {r}, {k})")));
    }
    if prime_power(q).is_none() {
        return Err(Error::NotAPrimePower(q));
    }
    let needed = r.max(k) as u64;
    if q < needed {
        return Err(Error::ParameterTooLarge { q, needed });
    }
    let plane = AffinePlane::new(q)?;
    let classes = plane.parallel_classes();

    let mut kept: Vec<usize> = classes[r][..k].concat();
    kept.sort_unstable();
    let mut index = vec![usize::MAX; plane.num_points()];
    for (i, &p) in kept.iter().enumerate() {
        index[p] = i;
    }
    let lines = classes[..r]
        .iter()
        .flatten()
        .map(|line| {
            line.iter()
                .filter(|&&p| index[p] != usize::MAX)
                .map(|&p| index[p])
                .collect()
        })
        .collect();
    IncidenceStructure::new(kept.len(), lines)
}

/// The `v` translates of the ruler's marks modulo `v`; a `(v, v, r, r)`
/// configuration whenever `v >= 2L + 1`.
pub fn cyclic_from_ruler(ruler: &GolombRuler, v: usize) -> Result<IncidenceStructure> {
    let needed = 2 * ruler.length() as usize + 1;
    if v < needed {
        return Err(Error::ModulusTooSmall { v, needed });
    }
    let lines = (0..v)
        .map(|t| ruler.marks().iter().map(|&a| (a as usize + t) % v).collect())
        .collect();
    IncidenceStructure::new(v, lines)
}

/// Associated integer of the affine restriction, without building it.
pub fn affine_restriction_d(r: usize, k: usize, q: u64) -> u64 {
    q * gcd(r as u64, k as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::golomb::known_ruler;
    use crate::incidence::fixtures::fano;

    #[test]
    fn affine_examples() {
        let s = affine_restriction(3, 5, 5).unwrap();
        assert_eq!((s.num_points(), s.num_lines()), (25, 15));
        assert_eq!(s.associated_integer(3, 5), Ok(5));

        let s = affine_restriction(3, 4, 4).unwrap();
        assert_eq!((s.num_points(), s.num_lines()), (16, 12));
        assert_eq!(s.associated_integer(3, 4), Ok(4));

        let s = affine_restriction(2, 2, 2).unwrap();
        assert_eq!((s.num_points(), s.num_lines()), (4, 4));
        // the 4-cycle: d = v·gcd(2,2)/2 = q·gcd(2,2) = 4
        assert_eq!(s.associated_integer(2, 2), Ok(4));
    }

    #[test]
    fn affine_errors() {
        assert_eq!(affine_restriction(3, 5, 6), Err(Error::NotAPrimePower(6)));
        assert_eq!(
            affine_restriction(3, 5, 4),
            Err(Error::ParameterTooLarge { q: 4, needed: 5 })
        );
        assert!(matches!(affine_restriction(1, 5, 5), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn affine_grid() {
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            for r in 2..=q as usize {
                for k in 2..=q as usize {
                    let s = affine_restriction(r, k, q).unwrap();
                    assert_eq!(
                        s.associated_integer(r, k),
                        Ok(affine_restriction_d(r, k, q)),
                        "r={r} k={k} q={q}"
                    );
                }
            }
        }
    }

    #[test]
    fn cyclic_examples() {
        let r3 = known_ruler(3).unwrap();
        let s = cyclic_from_ruler(&r3, 7).unwrap();
        assert_eq!(s, fano());
        let s = cyclic_from_ruler(&r3, 9).unwrap();
        assert_eq!(s.associated_integer(3, 3), Ok(9));
        let s = cyclic_from_ruler(&known_ruler(4).unwrap(), 13).unwrap();
        assert_eq!(s.associated_integer(4, 4), Ok(13));
        assert_eq!(
            cyclic_from_ruler(&r3, 6),
            Err(Error::ModulusTooSmall { v: 6, needed: 7 })
        );
    }

    #[test]
    fn cyclic_range() {
        for r in 2..=7 {
            let ruler = known_ruler(r).unwrap();
            let start = 2 * ruler.length() as usize + 1;
            for v in start..=start + 10 {
                let s = cyclic_from_ruler(&ruler, v).unwrap();
                assert_eq!(s.associated_integer(r, r), Ok(v as u64), "r={r} v={v}");
            }
        }
    }
}
