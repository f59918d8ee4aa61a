//! Finite ordered universal algebra.

pub mod algebra;
pub mod checks;
pub mod cli;
pub mod clone;
pub mod corpus;
pub mod demo;
pub mod oset;
pub mod relations;
pub mod syntax;
pub mod theory;
