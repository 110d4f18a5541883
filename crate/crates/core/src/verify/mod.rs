//! The verification layer: ring recipes, the corpus, the theorem registry,
//! the worked fixtures and the suite that runs them together.

pub mod corpus;
pub mod fixtures;
pub mod recipes;
pub mod suite;
pub mod theorems;
