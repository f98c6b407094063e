//! The two derivability symmetries on formulas.
//!
//! `bowtie` mirrors left and right and preserves derivability; `infinity`
//! exchanges the product family with the coproduct family and reverses the
//! derivability arrow. Negations follow their unit-based readings
//! (`^1 A ~ 1 (/) A`, `A^1 ~ A (\) 1`, `^0 A ~ 0 / A`, `A^0 ~ A \ 0`).

use super::formula::{BinOp, Formula, UnOp};

pub fn bowtie_op(op: BinOp) -> BinOp {
    match op {
        BinOp::Prod => BinOp::Prod,
        BinOp::Coprod => BinOp::Coprod,
        BinOp::Over => BinOp::Under,
        BinOp::Under => BinOp::Over,
        BinOp::RDiff => BinOp::LDiff,
        BinOp::LDiff => BinOp::RDiff,
    }
}

pub fn bowtie_unop(op: UnOp) -> UnOp {
    match op {
        UnOp::GalR => UnOp::GalL,
        UnOp::GalL => UnOp::GalR,
        UnOp::DGalR => UnOp::DGalL,
        UnOp::DGalL => UnOp::DGalR,
    }
}

pub fn infinity_op(op: BinOp) -> BinOp {
    match op {
        BinOp::Prod => BinOp::Coprod,
        BinOp::Coprod => BinOp::Prod,
        BinOp::Over => BinOp::LDiff,
        BinOp::LDiff => BinOp::Over,
        BinOp::Under => BinOp::RDiff,
        BinOp::RDiff => BinOp::Under,
    }
}

pub fn infinity_unop(op: UnOp) -> UnOp {
    match op {
        UnOp::GalR => UnOp::DGalL,
        UnOp::DGalL => UnOp::GalR,
        UnOp::GalL => UnOp::DGalR,
        UnOp::DGalR => UnOp::GalL,
    }
}

/// Left-right mirror image. Both binary symmetries swap the operands.
pub fn bowtie(f: &Formula) -> Formula {
    match f {
        Formula::Atom(_) => f.clone(),
        Formula::Binary(op, l, r) => Formula::binary(bowtie_op(*op), bowtie(r), bowtie(l)),
        Formula::Unary(op, a) => Formula::unary(bowtie_unop(*op), bowtie(a)),
    }
}

/// Arrow-reversing duality between the product and coproduct families.
pub fn infinity(f: &Formula) -> Formula {
    match f {
        Formula::Atom(_) => f.clone(),
        Formula::Binary(op, l, r) => Formula::binary(infinity_op(*op), infinity(r), infinity(l)),
        Formula::Unary(op, a) => Formula::unary(infinity_unop(*op), infinity(a)),
    }
}
