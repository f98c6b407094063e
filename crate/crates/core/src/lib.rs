//! Proof search, continuation semantics and scope readings for the
//! Lambek-Grishin calculus extended with Galois and dual Galois negations.

pub mod cli;
pub mod cps;
pub mod lambda;
pub mod prover;
pub mod semantics;
pub mod structures;
pub mod syntax;
