//! Focused backward proof search over display sequents, proof replay and
//! the principal cut reductions.

mod cut;
mod proof;
mod rules;
mod search;

pub use cut::{compose_arrows, cut, reduce_principal_cut, CutError};
pub use proof::{Conn, Proof, RuleApp, Side};
pub use rules::replay;
pub use search::{arrow_goal, enumerate_proofs, prove, ProveError, Prover, SearchGraph, SearchStats};
