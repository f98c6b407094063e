#![allow(dead_code)]

pub mod checks;
pub mod corpus;
pub mod gen;
pub mod oracle;
pub mod redex;

use lg_core::syntax::{parse_arrow, Formula};

pub fn arrow(s: &str) -> (Formula, Formula) {
    parse_arrow(s).unwrap_or_else(|e| panic!("{s}: {e}"))
}
