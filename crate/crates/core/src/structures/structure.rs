use std::collections::HashSet;
use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::syntax::{BinOp, Formula, UnOp};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Polarity {
    Input,
    Output,
}

/// Result polarity and operand polarities of a structural binary connective.
pub fn bin_polarity(op: BinOp) -> (Polarity, Polarity, Polarity) {
    use Polarity::*;
    match op {
        BinOp::Prod => (Input, Input, Input),
        BinOp::RDiff => (Input, Input, Output),
        BinOp::LDiff => (Input, Output, Input),
        BinOp::Coprod => (Output, Output, Output),
        BinOp::Under => (Output, Input, Output),
        BinOp::Over => (Output, Output, Input),
    }
}

/// Result polarity and operand polarity of a structural negation.
pub fn un_polarity(op: UnOp) -> (Polarity, Polarity) {
    match op {
        UnOp::DGalL | UnOp::DGalR => (Polarity::Input, Polarity::Output),
        UnOp::GalL | UnOp::GalR => (Polarity::Output, Polarity::Input),
    }
}

/// A (co)variable name. Input leaves print as `x<n>`, output leaves as `a<n>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Label(pub u32);

/// A sequent structure. Leaves carry passive labelled formulas; inner nodes
/// are the structural counterparts of the logical connectives.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Structure {
    /// `x:A`, an input leaf.
    Var(Label, Formula),
    /// `α:A`, an output leaf.
    Covar(Label, Formula),
    Binary(BinOp, Box<Structure>, Box<Structure>),
    Unary(UnOp, Box<Structure>),
}

impl Structure {
    pub fn var(label: u32, f: Formula) -> Structure {
        Structure::Var(Label(label), f)
    }

    pub fn covar(label: u32, f: Formula) -> Structure {
        Structure::Covar(Label(label), f)
    }

    pub fn binary(op: BinOp, l: Structure, r: Structure) -> Structure {
        Structure::Binary(op, Box::new(l), Box::new(r))
    }

    pub fn unary(op: UnOp, a: Structure) -> Structure {
        Structure::Unary(op, Box::new(a))
    }

    pub fn polarity(&self) -> Polarity {
        match self {
            Structure::Var(..) => Polarity::Input,
            Structure::Covar(..) => Polarity::Output,
            Structure::Binary(op, ..) => bin_polarity(*op).0,
            Structure::Unary(op, _) => un_polarity(*op).0,
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Structure::Var(..) | Structure::Covar(..))
    }

    /// Checks the polarity discipline of the structure grammar.
    pub fn well_polarized(&self) -> bool {
        match self {
            Structure::Var(..) | Structure::Covar(..) => true,
            Structure::Binary(op, l, r) => {
                let (_, lp, rp) = bin_polarity(*op);
                l.polarity() == lp && r.polarity() == rp && l.well_polarized() && r.well_polarized()
            }
            Structure::Unary(op, a) => a.polarity() == un_polarity(*op).1 && a.well_polarized(),
        }
    }

    /// Leaves in left-to-right order.
    pub fn leaves(&self) -> Vec<&Structure> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a Structure>) {
        match self {
            Structure::Var(..) | Structure::Covar(..) => out.push(self),
            Structure::Binary(_, l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
            Structure::Unary(_, a) => a.collect_leaves(out),
        }
    }

    pub fn leaf_formula(&self) -> Option<&Formula> {
        match self {
            Structure::Var(_, f) | Structure::Covar(_, f) => Some(f),
            _ => None,
        }
    }

    pub fn leaf_label(&self) -> Option<Label> {
        match self {
            Structure::Var(l, _) | Structure::Covar(l, _) => Some(*l),
            _ => None,
        }
    }

    /// Number of structural connectives.
    pub fn node_count(&self) -> usize {
        match self {
            Structure::Var(..) | Structure::Covar(..) => 0,
            Structure::Binary(_, l, r) => 1 + l.node_count() + r.node_count(),
            Structure::Unary(_, a) => 1 + a.node_count(),
        }
    }

    /// Applies `f` to every leaf, rebuilding the tree.
    pub fn map_leaves(&self, f: &mut impl FnMut(&Structure) -> Structure) -> Structure {
        match self {
            Structure::Var(..) | Structure::Covar(..) => f(self),
            Structure::Binary(op, l, r) => Structure::binary(*op, l.map_leaves(f), r.map_leaves(f)),
            Structure::Unary(op, a) => Structure::unary(*op, a.map_leaves(f)),
        }
    }

    pub(crate) fn render(&self, out: &mut String, labels: bool) {
        match self {
            Structure::Var(l, f) => {
                if labels {
                    write!(out, "x{}:", l.0).unwrap();
                } else {
                    out.push('+');
                }
                render_leaf_formula(out, f);
            }
            Structure::Covar(l, f) => {
                if labels {
                    write!(out, "a{}':", l.0).unwrap();
                } else {
                    out.push('-');
                }
                render_leaf_formula(out, f);
            }
            Structure::Binary(op, l, r) => {
                l.render_operand(out, labels);
                write!(out, " .{}. ", op.symbol()).unwrap();
                r.render_operand(out, labels);
            }
            Structure::Unary(op, a) if op.is_prefix() => {
                write!(out, ".^{} ", op.digit()).unwrap();
                a.render_operand(out, labels);
            }
            Structure::Unary(op, a) => {
                a.render_operand(out, labels);
                write!(out, " ^{}.", op.digit()).unwrap();
            }
        }
    }

    fn render_operand(&self, out: &mut String, labels: bool) {
        if self.is_leaf() {
            self.render(out, labels);
        } else {
            out.push('(');
            self.render(out, labels);
            out.push(')');
        }
    }
}

fn render_leaf_formula(out: &mut String, f: &Formula) {
    if f.is_atom() {
        write!(out, "{f}").unwrap();
    } else {
        write!(out, "({f})").unwrap();
    }
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.render(&mut s, true);
        f.write_str(&s)
    }
}

/// A display sequent: all passive, or with one active formula on either side.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sequent {
    /// `X ⊢ Y`
    Passive(Structure, Structure),
    /// `X ⊢ A`, active output formula.
    Right(Structure, Formula),
    /// `A ⊢ Y`, active input formula.
    Left(Formula, Structure),
}

impl Sequent {
    pub fn passive(ant: Structure, suc: Structure) -> Sequent {
        Sequent::Passive(ant, suc)
    }

    pub fn is_passive(&self) -> bool {
        matches!(self, Sequent::Passive(..))
    }

    pub fn structures(&self) -> Vec<&Structure> {
        match self {
            Sequent::Passive(a, s) => vec![a, s],
            Sequent::Right(a, _) => vec![a],
            Sequent::Left(_, s) => vec![s],
        }
    }

    pub fn active_formula(&self) -> Option<&Formula> {
        match self {
            Sequent::Passive(..) => None,
            Sequent::Right(_, f) | Sequent::Left(f, _) => Some(f),
        }
    }

    /// All passive leaves, antecedent first.
    pub fn leaves(&self) -> Vec<&Structure> {
        self.structures().into_iter().flat_map(|s| s.leaves()).collect()
    }

    /// Polarity discipline and label distinctness.
    pub fn well_formed(&self) -> bool {
        let sides_ok = match self {
            Sequent::Passive(a, s) => {
                a.polarity() == Polarity::Input
                    && s.polarity() == Polarity::Output
                    && a.well_polarized()
                    && s.well_polarized()
            }
            Sequent::Right(a, _) => a.polarity() == Polarity::Input && a.well_polarized(),
            Sequent::Left(_, s) => s.polarity() == Polarity::Output && s.well_polarized(),
        };
        let mut seen = HashSet::new();
        sides_ok
            && self.leaves().iter().all(|l| {
                let key = (l.polarity(), l.leaf_label().unwrap());
                seen.insert(key)
            })
    }

    /// Applies `f` to every passive leaf.
    pub fn map_leaves(&self, f: &mut impl FnMut(&Structure) -> Structure) -> Sequent {
        match self {
            Sequent::Passive(a, s) => Sequent::Passive(a.map_leaves(f), s.map_leaves(f)),
            Sequent::Right(a, g) => Sequent::Right(a.map_leaves(f), g.clone()),
            Sequent::Left(g, s) => Sequent::Left(g.clone(), s.map_leaves(f)),
        }
    }

    pub fn max_label(&self) -> u32 {
        self.leaves().iter().filter_map(|l| l.leaf_label()).map(|l| l.0).max().unwrap_or(0)
    }

    pub fn render(&self, labels: bool) -> String {
        let mut out = String::new();
        match self {
            Sequent::Passive(a, s) => {
                a.render(&mut out, labels);
                out.push_str(" |- ");
                s.render(&mut out, labels);
            }
            Sequent::Right(a, f) => {
                a.render(&mut out, labels);
                write!(out, " |- {f}").unwrap();
            }
            Sequent::Left(f, s) => {
                write!(out, "{f} |- ").unwrap();
                s.render(&mut out, labels);
            }
        }
        out
    }

    /// Label-free rendering, used as a search key.
    pub fn shape_key(&self) -> String {
        let mut key = match self {
            Sequent::Passive(..) => String::from("P "),
            Sequent::Right(..) => String::from("R "),
            Sequent::Left(..) => String::from("L "),
        };
        key.push_str(&self.render(false));
        key
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(true))
    }
}
