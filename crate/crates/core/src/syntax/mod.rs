//! Formulas, their concrete syntax, the two symmetries and the type maps
//! into the target and semantic languages.

mod formula;
mod parse;
mod symmetry;
mod types;

pub use formula::{BinOp, Formula, UnOp, RESPONSE_ATOM};
pub use parse::{parse_arrow, parse_formula, ParseError};
pub use symmetry::{bowtie, bowtie_op, bowtie_unop, infinity, infinity_op, infinity_unop};
pub use types::{cps_type, lex_type, SemType, TargetType, Type, TypeMapError};
