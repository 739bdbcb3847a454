//! Combinatorial `(r,k)`-configurations and the numerical semigroups of
//! their associated integers.
//!
//! The crate builds configurations (affine restrictions, cyclic
//! configurations from Golomb rulers, projective planes and the gluing
//! construction), validates them, and computes the semigroup invariants and
//! conductor bounds attached to them.

pub mod arith;
pub mod bounds;
pub mod constructions;
pub mod error;
pub mod field;
pub mod golomb;
pub mod incidence;
pub mod plane;
pub mod semigroup;

pub use constructions::{affine_restriction, cyclic_from_ruler, d_closure, glue, Closure, Recipe};
pub use error::{Error, Result};
pub use field::PrimePowerField;
pub use golomb::{golomb_bound, is_golomb, shortest_ruler, GolombBound, GolombRuler};
pub use incidence::{
    brute_force_exists, ConfigurationFile, ConfigurationParams, Existence, Finding,
    IncidenceStructure, ValidationReport,
};
pub use plane::{projective_plane, AffinePlane};
pub use semigroup::{
    admits_pattern, two_generator_conductor, LinearPattern, NumericalSemigroup, PatternVerdict,
};
