//! Random formulas and structures.

use lg_core::structures::{bin_polarity, un_polarity, Polarity, Structure};
use lg_core::syntax::{BinOp, Formula, UnOp};
use proptest::prelude::*;

pub const BIN: [BinOp; 6] = [BinOp::Prod, BinOp::Over, BinOp::Under, BinOp::Coprod, BinOp::RDiff, BinOp::LDiff];
pub const CPS_BIN: [BinOp; 4] = [BinOp::Over, BinOp::Under, BinOp::RDiff, BinOp::LDiff];
pub const UN: [UnOp; 4] = [UnOp::GalR, UnOp::GalL, UnOp::DGalR, UnOp::DGalL];

fn atom() -> impl Strategy<Value = Formula> {
    prop_oneof![Just(Formula::atom("p")), Just(Formula::atom("q"))]
}

fn grow(ops: &'static [BinOp], depth: u32) -> BoxedStrategy<Formula> {
    if depth == 0 {
        return atom().boxed();
    }
    let sub = grow(ops, depth - 1);
    prop_oneof![
        2 => atom(),
        3 => (0..ops.len(), sub.clone(), sub.clone()).prop_map(move |(i, l, r)| Formula::binary(ops[i], l, r)),
        2 => (0..UN.len(), sub).prop_map(|(i, a)| Formula::unary(UN[i], a)),
    ]
    .boxed()
}

/// Formulas of depth at most `depth` over atoms `p`, `q`.
pub fn formula(depth: u32) -> BoxedStrategy<Formula> {
    grow(&BIN, depth)
}

/// Formulas without product and coproduct.
pub fn cps_formula(depth: u32) -> BoxedStrategy<Formula> {
    grow(&CPS_BIN, depth)
}

/// Well-polarized structures with distinct labels assigned left to right.
pub fn structure(pol: Polarity, depth: u32) -> BoxedStrategy<Structure> {
    shape(pol, depth).prop_map(|s| number(&s, &mut [0, 0])).boxed()
}

fn shape(pol: Polarity, depth: u32) -> BoxedStrategy<Structure> {
    let leaf = atom().prop_map(move |f| match pol {
        Polarity::Input => Structure::var(0, f),
        Polarity::Output => Structure::covar(0, f),
    });
    if depth == 0 {
        return leaf.boxed();
    }
    let bins: Vec<BinOp> = BIN.iter().copied().filter(|op| bin_polarity(*op).0 == pol).collect();
    let uns: Vec<UnOp> = UN.iter().copied().filter(|op| un_polarity(*op).0 == pol).collect();
    let bin = (0..bins.len()).prop_flat_map(move |i| {
        let op = bins[i];
        let (_, l, r) = bin_polarity(op);
        (shape(l, depth - 1), shape(r, depth - 1)).prop_map(move |(a, b)| Structure::binary(op, a, b))
    });
    let un = (0..uns.len()).prop_flat_map(move |i| {
        let op = uns[i];
        shape(un_polarity(op).1, depth - 1).prop_map(move |a| Structure::unary(op, a))
    });
    prop_oneof![1 => leaf, 2 => bin, 1 => un].boxed()
}

fn number(s: &Structure, next: &mut [u32; 2]) -> Structure {
    match s {
        Structure::Var(_, f) => {
            next[0] += 1;
            Structure::var(next[0], f.clone())
        }
        Structure::Covar(_, f) => {
            next[1] += 1;
            Structure::covar(next[1], f.clone())
        }
        Structure::Binary(op, l, r) => {
            let l = number(l, next);
            Structure::binary(*op, l, number(r, next))
        }
        Structure::Unary(op, a) => Structure::unary(*op, number(a, next)),
    }
}

fn un(op: UnOp, a: &Formula) -> Formula {
    Formula::unary(op, a.clone())
}

fn bin(op: BinOp, a: &Formula, b: &Formula) -> Formula {
    Formula::binary(op, a.clone(), b.clone())
}

/// Arrows of depth at most 3 mixing unrelated pairs with instances of
/// negation and interaction laws (and their converses), so that both
/// verdicts are common.
pub fn arrow() -> BoxedStrategy<(Formula, Formula)> {
    use BinOp::*;
    use UnOp::*;
    let templated = (0..14usize, formula(1), formula(1), formula(1), any::<bool>()).prop_map(|(k, x, y, z, flip)| {
        let (a, b) = match k {
            0 => (x.clone(), x),
            1 => (x.clone(), un(GalL, &un(GalR, &x))),
            2 => (x.clone(), un(GalR, &un(GalL, &x))),
            3 => (un(DGalR, &un(DGalL, &x)), x),
            4 => (un(DGalL, &un(DGalR, &x)), x),
            5 => (un(DGalL, &x), un(GalR, &x)),
            6 => (un(DGalR, &x), un(GalL, &x)),
            7 => (bin(Prod, &bin(LDiff, &x, &y), &z), bin(LDiff, &x, &bin(Prod, &y, &z))),
            8 => (bin(Prod, &z, &bin(RDiff, &y, &x)), bin(RDiff, &bin(Prod, &z, &y), &x)),
            9 => (bin(Prod, &bin(Coprod, &x, &y), &z), bin(Coprod, &x, &bin(Prod, &y, &z))),
            10 => (un(DGalR, &bin(Prod, &x, &y)), bin(Coprod, &un(GalL, &y), &un(GalL, &x))),
            11 => (bin(Under, &x, &y), bin(Coprod, &un(GalR, &x), &y)),
            12 => (bin(Prod, &y, &un(DGalL, &x)), bin(RDiff, &y, &x)),
            _ => (bin(Over, &x, &y), bin(Over, &un(GalL, &un(GalR, &x)), &y)),
        };
        if flip { (b, a) } else { (a, b) }
    });
    prop_oneof![1 => (formula(3), formula(3)), 2 => templated].boxed()
}

/// Arrows inside the continuation fragment, mostly instances of laws that
/// hold without interaction rules or with the default ones, at depth at
/// most 3.
pub fn cps_arrow() -> BoxedStrategy<(Formula, Formula)> {
    use BinOp::*;
    use UnOp::*;
    let templated = (0..14usize, cps_formula(1), cps_formula(1)).prop_map(|(k, x, y)| match k {
        0 => (x.clone(), x),
        1 => (x.clone(), un(GalL, &un(GalR, &x))),
        2 => (x.clone(), un(GalR, &un(GalL, &x))),
        3 => (un(DGalR, &un(DGalL, &x)), x),
        4 => (un(DGalL, &un(DGalR, &x)), x),
        5 => (un(DGalL, &x), un(GalR, &x)),
        6 => (un(DGalR, &x), un(GalL, &x)),
        7 => (x.clone(), bin(Over, &y, &bin(Under, &x, &y))),
        8 => (x.clone(), bin(Under, &bin(Over, &y, &x), &y)),
        9 => (bin(RDiff, &y, &bin(LDiff, &x, &y)), x),
        10 => (bin(LDiff, &bin(RDiff, &y, &x), &y), x),
        11 => (bin(Under, &x, &y), bin(Under, &un(GalL, &un(GalR, &x)), &y)),
        12 => (un(DGalR, &bin(Over, &x, &y)), un(DGalR, &x)),
        _ => (bin(Over, &x, &y), bin(Over, &x, &un(GalR, &un(GalL, &y)))),
    });
    prop_oneof![1 => (cps_formula(2), cps_formula(2)), 4 => templated].boxed()
}
