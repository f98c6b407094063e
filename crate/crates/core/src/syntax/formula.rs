use std::fmt;

use serde::Serialize;

/// The response atom of the target language. It may not occur in source formulas.
pub const RESPONSE_ATOM: &str = "r";

/// Binary type-forming operations: the residuated triple `*`, `/`, `\` and the
/// dual residuated triple `+`, `(/)`, `(\)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BinOp {
    /// `A * B`
    Prod,
    /// `A / B`
    Over,
    /// `A \ B`
    Under,
    /// `A + B`
    Coprod,
    /// `A (/) B`, right difference
    RDiff,
    /// `A (\) B`, left difference
    LDiff,
}

/// Unary negations. `GalR`/`GalL` form the Galois connected pair `A^0`, `^0 A`;
/// `DGalR`/`DGalL` the dual Galois connected pair `A^1`, `^1 A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum UnOp {
    /// postfix `A^0`
    GalR,
    /// prefix `^0 A`
    GalL,
    /// postfix `A^1`
    DGalR,
    /// prefix `^1 A`
    DGalL,
}

impl BinOp {
    pub const ALL: [BinOp; 6] = [
        BinOp::Prod,
        BinOp::Over,
        BinOp::Under,
        BinOp::Coprod,
        BinOp::RDiff,
        BinOp::LDiff,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            BinOp::Prod => "*",
            BinOp::Over => "/",
            BinOp::Under => "\\",
            BinOp::Coprod => "+",
            BinOp::RDiff => "(/)",
            BinOp::LDiff => "(\\)",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BinOp::Prod => "prod",
            BinOp::Over => "over",
            BinOp::Under => "under",
            BinOp::Coprod => "coprod",
            BinOp::RDiff => "rdiff",
            BinOp::LDiff => "ldiff",
        }
    }
}

impl UnOp {
    pub const ALL: [UnOp; 4] = [UnOp::GalR, UnOp::GalL, UnOp::DGalR, UnOp::DGalL];

    pub fn is_prefix(self) -> bool {
        matches!(self, UnOp::GalL | UnOp::DGalL)
    }

    pub fn digit(self) -> char {
        match self {
            UnOp::GalR | UnOp::GalL => '0',
            UnOp::DGalR | UnOp::DGalL => '1',
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            UnOp::GalR => "galr",
            UnOp::GalL => "gall",
            UnOp::DGalR => "dgalr",
            UnOp::DGalL => "dgall",
        }
    }
}

/// A syntactic type.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Formula {
    Atom(String),
    Binary(BinOp, Box<Formula>, Box<Formula>),
    Unary(UnOp, Box<Formula>),
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Formula {
        Formula::Atom(name.into())
    }

    pub fn binary(op: BinOp, l: Formula, r: Formula) -> Formula {
        Formula::Binary(op, Box::new(l), Box::new(r))
    }

    pub fn unary(op: UnOp, a: Formula) -> Formula {
        Formula::Unary(op, Box::new(a))
    }

    pub fn prod(l: Formula, r: Formula) -> Formula {
        Formula::binary(BinOp::Prod, l, r)
    }

    pub fn over(l: Formula, r: Formula) -> Formula {
        Formula::binary(BinOp::Over, l, r)
    }

    pub fn under(l: Formula, r: Formula) -> Formula {
        Formula::binary(BinOp::Under, l, r)
    }

    pub fn coprod(l: Formula, r: Formula) -> Formula {
        Formula::binary(BinOp::Coprod, l, r)
    }

    pub fn rdiff(l: Formula, r: Formula) -> Formula {
        Formula::binary(BinOp::RDiff, l, r)
    }

    pub fn ldiff(l: Formula, r: Formula) -> Formula {
        Formula::binary(BinOp::LDiff, l, r)
    }

    pub fn gal_r(a: Formula) -> Formula {
        Formula::unary(UnOp::GalR, a)
    }

    pub fn gal_l(a: Formula) -> Formula {
        Formula::unary(UnOp::GalL, a)
    }

    pub fn dgal_r(a: Formula) -> Formula {
        Formula::unary(UnOp::DGalR, a)
    }

    pub fn dgal_l(a: Formula) -> Formula {
        Formula::unary(UnOp::DGalL, a)
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, Formula::Atom(_))
    }

    /// Number of connectives.
    pub fn size(&self) -> usize {
        match self {
            Formula::Atom(_) => 0,
            Formula::Binary(_, l, r) => 1 + l.size() + r.size(),
            Formula::Unary(_, a) => 1 + a.size(),
        }
    }

    /// Nesting depth of connectives; atoms have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Formula::Atom(_) => 0,
            Formula::Binary(_, l, r) => 1 + l.depth().max(r.depth()),
            Formula::Unary(_, a) => 1 + a.depth(),
        }
    }

    pub fn atoms(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            Formula::Atom(a) => out.push(a),
            Formula::Binary(_, l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
            Formula::Unary(_, a) => a.collect_atoms(out),
        }
    }

    /// True when the formula lies in the fragment with a continuation
    /// interpretation, i.e. contains no `*` or `+`.
    pub fn in_cps_fragment(&self) -> bool {
        match self {
            Formula::Atom(_) => true,
            Formula::Binary(BinOp::Prod | BinOp::Coprod, _, _) => false,
            Formula::Binary(_, l, r) => l.in_cps_fragment() && r.in_cps_fragment(),
            Formula::Unary(_, a) => a.in_cps_fragment(),
        }
    }

    fn fmt_operand(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_atom() {
            write!(f, "{self}")
        } else {
            write!(f, "({self})")
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Atom(a) => f.write_str(a),
            Formula::Binary(op, l, r) => {
                l.fmt_operand(f)?;
                write!(f, " {} ", op.symbol())?;
                r.fmt_operand(f)
            }
            Formula::Unary(op, a) if op.is_prefix() => {
                if a.is_atom() {
                    write!(f, "^{} {a}", op.digit())
                } else {
                    write!(f, "^{}({a})", op.digit())
                }
            }
            Formula::Unary(op, a) => {
                a.fmt_operand(f)?;
                write!(f, "^{}", op.digit())
            }
        }
    }
}
