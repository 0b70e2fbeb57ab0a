//! Finite subgroups of `PGL_3(F_p)` given by generator matrices: closures,
//! presentations, and the records of the loci with large automorphisms.

mod binary;
mod matrix;
mod records;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::is_prime;

pub use binary::{mobius_maps, BinaryForm, Mobius};
pub use matrix::{closure, preserves_curve, ProjectiveMatrix};
pub use records::{
    check_record, large_locus, very_large_records, LargeKind, LargeLocus, LocusKind, RecordCheck, SpecialBranch,
    SpecialLocusRecord,
};

/// Default bound on closure sizes.
pub const CLOSURE_CAP: usize = 20_000;

/// A product of generator powers, `(index, exponent)` left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word(pub Vec<(usize, i64)>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn power(g: usize, k: i64) -> Self {
        Word(vec![(g, k)])
    }

    pub fn eval(&self, gens: &[ProjectiveMatrix]) -> Result<ProjectiveMatrix> {
        let first = gens.first().ok_or(Error::MissingGenerators)?;
        let mut acc = ProjectiveMatrix::identity(first.field());
        for &(g, k) in &self.0 {
            let m = gens.get(g).ok_or(Error::MissingGenerators)?;
            acc = acc.mul(&m.pow(k))?;
        }
        Ok(acc)
    }

    fn render(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        self.0
            .iter()
            .map(|&(g, k)| {
                let n = names.get(g).map_or_else(|| format!("g{g}"), Clone::clone);
                if k == 1 {
                    n
                } else {
                    format!("{n}^{k}")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// `lhs = rhs` in the group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub lhs: Word,
    pub rhs: Word,
}

impl Relation {
    pub fn new(lhs: Word, rhs: Word) -> Self {
        Relation { lhs, rhs }
    }

    pub fn holds(&self, gens: &[ProjectiveMatrix]) -> Result<bool> {
        Ok(self.lhs.eval(gens)? == self.rhs.eval(gens)?)
    }

    pub fn render(&self, names: &[String]) -> String {
        format!("{} = {}", self.lhs.render(names), self.rhs.render(names))
    }
}

/// A named finite group with a claimed order, a presentation and matrix
/// generators over `F_prime`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupDescriptor {
    pub name: String,
    pub order: u64,
    pub generator_names: Vec<String>,
    pub relations: Vec<Relation>,
    pub prime: u64,
    pub generators: Vec<ProjectiveMatrix>,
}

impl GroupDescriptor {
    pub fn relation_strings(&self) -> Vec<String> {
        self.relations.iter().map(|r| r.render(&self.generator_names)).collect()
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (order {}): <{} | {}> over F_{}",
            self.name,
            self.order,
            self.generator_names.join(", "),
            self.relation_strings().join(", "),
            self.prime
        )
    }
}

#[derive(Serialize)]
struct GroupWire<'a> {
    name: &'a str,
    order: u64,
    generator_names: &'a [String],
    relations: Vec<String>,
    prime: u64,
    generators: &'a [ProjectiveMatrix],
}

impl Serialize for GroupDescriptor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GroupWire {
            name: &self.name,
            order: self.order,
            generator_names: &self.generator_names,
            relations: self.relation_strings(),
            prime: self.prime,
            generators: &self.generators,
        }
        .serialize(s)
    }
}

/// True iff every relation holds and the generators close up to exactly the
/// declared order.
pub fn verify_presentation(g: &GroupDescriptor) -> Result<bool> {
    if g.generators.is_empty() {
        return Err(Error::MissingGenerators);
    }
    for r in &g.relations {
        if !r.holds(&g.generators)? {
            return Ok(false);
        }
    }
    let cap = usize::try_from(g.order).unwrap_or(usize::MAX).min(CLOSURE_CAP);
    match closure(&g.generators, cap) {
        Ok(set) => Ok(set.len() as u64 == g.order),
        Err(Error::ClosureCap(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Primes `p = 1 mod l` below `2^16` not dividing `d`, in increasing order.
pub fn primes_one_mod(l: u64, d: u64) -> impl Iterator<Item = u64> {
    (1..)
        .map(move |k| k * l + 1)
        .take_while(|&p| p < 1 << 16)
        .filter(move |&p| p > 2 && is_prime(p) && d % p != 0)
}
