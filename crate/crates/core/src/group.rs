//! Permutation groups given by generators.

use std::collections::HashSet;
use std::fmt;

use crate::perm::{enumerate_group, orbit, Perm};

/// Isomorphism type of a computed group, when the algorithm knows it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Structure {
    Trivial,
    Cyclic(usize),
    Dihedral(usize),
    Product(usize, usize),
    Semidirect,
    Sporadic,
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Structure::Trivial => write!(f, "trivial"),
            Structure::Cyclic(n) => write!(f, "cyclic({n})"),
            Structure::Dihedral(n) => write!(f, "dihedral({n})"),
            Structure::Product(a, b) => write!(f, "product({a},{b})"),
            Structure::Semidirect => write!(f, "semidirect"),
            Structure::Sporadic => write!(f, "sporadic"),
        }
    }
}

/// Generators of a group acting on `0..degree`, with its order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    pub degree: usize,
    pub gens: Vec<Perm>,
    pub order: usize,
    pub structure: Option<Structure>,
}

impl GeneratorSet {
    pub fn trivial(degree: usize) -> Self {
        GeneratorSet { degree, gens: Vec::new(), order: 1, structure: Some(Structure::Trivial) }
    }

    /// A group acting semiregularly (automorphisms of a connected map): the
    /// order is the orbit length of point 0. Redundant generators are dropped.
    pub fn semiregular(degree: usize, gens: Vec<Perm>) -> Self {
        let mut kept: Vec<Perm> = Vec::new();
        let mut reached: HashSet<usize> = HashSet::from([0]);
        let mut sorted = gens;
        sorted.sort_by(|a, b| a.images().cmp(b.images()));
        sorted.dedup();
        for g in sorted {
            if g.is_identity() || reached.contains(&g.apply(0)) {
                continue;
            }
            kept.push(g);
            reached = orbit(&kept, degree, 0).into_iter().collect();
        }
        let order = reached.len();
        let structure = if order == 1 { Some(Structure::Trivial) } else { None };
        let mut out = GeneratorSet { degree, gens: kept, order, structure };
        out.sort();
        out
    }

    /// A group whose order is known from its construction.
    pub fn with_order(degree: usize, gens: Vec<Perm>, order: usize) -> Self {
        let mut gens: Vec<Perm> = gens.into_iter().filter(|g| !g.is_identity()).collect();
        gens.sort_by(|a, b| a.images().cmp(b.images()));
        gens.dedup();
        let structure = if order == 1 { Some(Structure::Trivial) } else { None };
        GeneratorSet { degree, gens, order, structure }
    }

    /// Generators sorted by image arrays.
    pub fn sort(&mut self) {
        self.gens.sort_by(|a, b| a.images().cmp(b.images()));
    }

    pub fn with_structure(mut self, s: Structure) -> Self {
        self.structure = Some(s);
        self
    }

    /// All elements; intended for small groups.
    pub fn elements(&self) -> Vec<Perm> {
        enumerate_group(&self.gens, self.degree)
    }

    pub fn element_set(&self) -> HashSet<Perm> {
        self.elements().into_iter().collect()
    }
}
