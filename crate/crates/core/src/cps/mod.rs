//! Continuation-passing translation of proofs into linear lambda terms.

mod translate;

pub use translate::{cps_proof, cps_raw, leaf_name, sequent_target_type, CpsError, TypedTerm};
