//! Lower approximation of the semigroup of associated integers.
//!
//! Base values come from projective planes, cyclic configurations and affine
//! restrictions; the set is then closed under `d1 + d2` (disjoint union) and
//! `d1 + d2 - n` (gluing). Every member keeps the recipe that first produced
//! it, so any member can be rebuilt and re-validated.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;
use serde_json::{json, Value};

use super::{affine_restriction, cyclic_from_ruler, glue};
use crate::arith::{gcd, is_prime_power};
use crate::error::{Error, Result};
use crate::golomb::{golomb_bound, GolombRuler};
use crate::incidence::IncidenceStructure;
use crate::plane::projective_plane;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Recipe {
    Projective { q: u64 },
    Cyclic { ruler: Vec<u32>, v: u64 },
    Affine { q: u64 },
    Union { left: u64, right: u64 },
    Glue { left: u64, right: u64, n: u64 },
}

#[derive(Debug, Clone)]
pub struct Closure {
    r: usize,
    k: usize,
    limit: u64,
    recipes: BTreeMap<u64, Recipe>,
}

/// Closure of the constructible associated integers, truncated at `limit`.
pub fn d_closure(r: usize, k: usize, limit: u64) -> Result<Closure> {
    if r < 2 || k < 2 {
        return Err(Error::InvalidParameter(format!("need r, k >= 2 (got {r}, {k})")));
    }
    let g = gcd(r, k) as u64;
    let mut recipes: BTreeMap<u64, Recipe> = BTreeMap::new();
    let offer = |d: u64, recipe: Recipe, recipes: &mut BTreeMap<u64, Recipe>| {
        if (1..=limit).contains(&d) {
            recipes.entry(d).or_insert(recipe);
        }
    };

    if r == k {
        let order = r as u64 - 1;
        if is_prime_power(order) {
            offer(order * order + order + 1, Recipe::Projective { q: order }, &mut recipes);
        }
        // any ruler works; a longer one only yields fewer bases
        if let Ok(bound) = golomb_bound(r) {
            let marks = bound.ruler.marks().to_vec();
            for v in bound.bound()..=limit {
                offer(
                    v,
                    Recipe::Cyclic {
                        ruler: marks.clone(),
                        v,
                    },
                    &mut recipes,
                );
            }
        }
    }
    let mut q = r.max(k) as u64;
    while q * g <= limit {
        if is_prime_power(q) {
            offer(q * g, Recipe::Affine { q }, &mut recipes);
        }
        q += 1;
    }

    // every combination exceeds both operands, so one ascending sweep closes
    for x in 1..=limit {
        if !recipes.contains_key(&x) {
            continue;
        }
        let smaller: Vec<u64> = recipes.range(..=x).map(|(&d, _)| d).collect();
        for y in smaller {
            for n in 1..=g {
                offer(x + y - n, Recipe::Glue { left: x, right: y, n }, &mut recipes);
            }
            offer(x + y, Recipe::Union { left: x, right: y }, &mut recipes);
        }
    }

    Ok(Closure {
        r,
        k,
        limit,
        recipes,
    })
}

impl Closure {
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn members(&self) -> Vec<u64> {
        self.recipes.keys().copied().collect()
    }

    pub fn contains(&self, d: u64) -> bool {
        self.recipes.contains_key(&d)
    }

    /// Smallest member, if any.
    pub fn multiplicity(&self) -> Option<u64> {
        self.recipes.keys().next().copied()
    }

    pub fn recipe(&self, d: u64) -> Option<&Recipe> {
        self.recipes.get(&d)
    }

    /// Recipe of `d` with every referenced member expanded, as JSON.
    pub fn recipe_tree(&self, d: u64) -> Option<Value> {
        let recipe = self.recipes.get(&d)?;
        Some(match recipe {
            Recipe::Union { left, right } => json!({
                "op": "union",
                "d": d,
                "left": self.recipe_tree(*left)?,
                "right": self.recipe_tree(*right)?,
            }),
            Recipe::Glue { left, right, n } => json!({
                "op": "glue",
                "d": d,
                "n": n,
                "left": self.recipe_tree(*left)?,
                "right": self.recipe_tree(*right)?,
            }),
            base => {
                let mut v = serde_json::to_value(base).expect("recipes serialize");
                v["d"] = json!(d);
                v
            }
        })
    }

    /// Builds a configuration with associated integer `d` by replaying its
    /// recipe. The result is validated by every construction on the way.
    pub fn materialize(&self, d: u64) -> Result<IncidenceStructure> {
        let mut memo = HashMap::new();
        self.build(d, &mut memo)
    }

    fn build(&self, d: u64, memo: &mut HashMap<u64, IncidenceStructure>) -> Result<IncidenceStructure> {
        if let Some(s) = memo.get(&d) {
            return Ok(s.clone());
        }
        let recipe = self
            .recipes
            .get(&d)
            .ok_or_else(|| Error::InvalidParameter(format!("{d} is not in the closure")))?;
        let built = match recipe {
            Recipe::Projective { q } => projective_plane(*q)?,
            Recipe::Cyclic { ruler, v } => {
                cyclic_from_ruler(&GolombRuler::new(ruler.clone())?, *v as usize)?
            }
            Recipe::Affine { q } => affine_restriction(self.r, self.k, *q)?,
            Recipe::Union { left, right } => {
                let a = self.build(*left, memo)?;
                let b = self.build(*right, memo)?;
                a.disjoint_union(&b)
            }
            Recipe::Glue { left, right, n } => {
                let a = self.build(*left, memo)?;
                let b = self.build(*right, memo)?;
                glue(&a, &b, self.r, self.k, *n as usize)?
            }
        };
        memo.insert(d, built.clone());
        Ok(built)
    }

    /// `{"r":..,"k":..,"limit":..,"members":[..]}`, plus `"recipes"` keyed by
    /// member when requested.
    pub fn to_json(&self, with_recipes: bool) -> Value {
        let mut out = json!({
            "r": self.r,
            "k": self.k,
            "limit": self.limit,
            "members": self.members(),
        });
        if with_recipes {
            let trees: serde_json::Map<String, Value> = self
                .recipes
                .keys()
                .map(|&d| (d.to_string(), self.recipe_tree(d).unwrap()))
                .collect();
            out["recipes"] = Value::Object(trees);
        }
        out
    }
}
