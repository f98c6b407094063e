//! The target calculus: untyped syntax with simple-type inference,
//! capture-avoiding substitution, β-normalization, α-equivalence and
//! linearity checks.

mod parse;
mod reduce;
mod term;
mod typing;

pub use parse::{parse_term, TermParseError};
pub use reduce::{beta_normalize, beta_normalize_innermost, fresh_name, is_normal, subst};
pub use term::{alpha_eq, is_fully_linear, is_linear, Term};
pub use typing::{check, typecheck, TypeError};
