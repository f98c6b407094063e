use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use super::formula::{BinOp, Formula, UnOp, RESPONSE_ATOM};

/// A simple implicational type. Used both for the continuation target
/// language (atoms of the source plus the response atom `r`) and for the
/// lexical semantic types over `e` and `t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Type {
    Atom(String),
    Arrow(Box<Type>, Box<Type>),
}

/// Target-language type over source atoms and `r`.
pub type TargetType = Type;
/// Semantic type over `e` and `t`.
pub type SemType = Type;

impl Type {
    pub fn atom(name: impl Into<String>) -> Type {
        Type::Atom(name.into())
    }

    pub fn response() -> Type {
        Type::atom(RESPONSE_ATOM)
    }

    pub fn e() -> Type {
        Type::atom("e")
    }

    pub fn t() -> Type {
        Type::atom("t")
    }

    pub fn arrow(dom: Type, cod: Type) -> Type {
        Type::Arrow(Box::new(dom), Box::new(cod))
    }

    /// `A⊥`, i.e. `A -> r`.
    pub fn perp(self) -> Type {
        Type::arrow(self, Type::response())
    }

    pub fn atoms(&self) -> Vec<&str> {
        match self {
            Type::Atom(a) => vec![a.as_str()],
            Type::Arrow(d, c) => {
                let mut v = d.atoms();
                v.extend(c.atoms());
                v
            }
        }
    }
}

impl fmt::Display for Type {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Type::Atom(a) => f.write_str(a),
            Type::Arrow(d, c) => {
                if matches!(**d, Type::Arrow(..)) {
                    write!(f, "({d}) -> {c}")
                } else {
                    write!(f, "{d} -> {c}")
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TypeMapError {
    #[error("connective `{0}` has no continuation interpretation")]
    UnsupportedConnective(&'static str),
    #[error("atom `{0}` has no semantic type")]
    UnmappedAtom(String),
}

/// Value type `|A|` of a source formula.
pub fn cps_type(f: &Formula) -> Result<TargetType, TypeMapError> {
    Ok(match f {
        Formula::Atom(a) => Type::atom(a.clone()),
        Formula::Binary(op @ (BinOp::Prod | BinOp::Coprod), _, _) => {
            return Err(TypeMapError::UnsupportedConnective(op.symbol()))
        }
        // |A \ B| = |B|⊥ -> |A|⊥, and |B / A| = |A \ B|
        Formula::Binary(BinOp::Under, a, b) | Formula::Binary(BinOp::Over, b, a) => {
            Type::arrow(cps_type(b)?.perp(), cps_type(a)?.perp())
        }
        // |A (/) B| = |A \ B|⊥, and |B (\) A| = |A (/) B|
        Formula::Binary(BinOp::RDiff, a, b) | Formula::Binary(BinOp::LDiff, b, a) => {
            Type::arrow(cps_type(b)?.perp(), cps_type(a)?.perp()).perp()
        }
        Formula::Unary(UnOp::GalR | UnOp::GalL | UnOp::DGalR | UnOp::DGalL, a) => cps_type(a)?.perp(),
    })
}

/// Replaces atoms according to `atom_map`, which must also cover `r`.
pub fn lex_type(t: &TargetType, atom_map: &BTreeMap<String, SemType>) -> Result<SemType, TypeMapError> {
    match t {
        Type::Atom(a) => atom_map.get(a).cloned().ok_or_else(|| TypeMapError::UnmappedAtom(a.clone())),
        Type::Arrow(d, c) => Ok(Type::arrow(lex_type(d, atom_map)?, lex_type(c, atom_map)?)),
    }
}
