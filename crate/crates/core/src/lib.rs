//! Automorphism groups and isomorphism testing for combinatorial maps on
//! closed surfaces, by reduction to irreducible maps.

pub mod build;
pub mod cli;
pub mod cycle;
pub mod degree;
pub mod group;
pub mod labels;
pub mod lattice;
pub mod maps;
pub mod nonorientable;
pub mod oracle;
pub mod perm;
pub mod pipeline;
pub mod reduce;
pub mod sphere;
pub mod torus;
