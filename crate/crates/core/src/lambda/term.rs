use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Serialize, Serializer};

/// Untyped lambda term. Variables are bound or free names; constants are
/// free names declared by a lexicon.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(String),
    Const(String),
    Abs(String, Box<Term>),
    App(Box<Term>, Box<Term>),
}

impl Serialize for Term {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn cnst(name: impl Into<String>) -> Term {
        Term::Const(name.into())
    }

    pub fn abs(var: impl Into<String>, body: Term) -> Term {
        Term::Abs(var.into(), Box::new(body))
    }

    pub fn app(f: Term, a: Term) -> Term {
        Term::App(Box::new(f), Box::new(a))
    }

    /// Left-nested application `f a1 .. an`.
    pub fn apps(f: Term, args: impl IntoIterator<Item = Term>) -> Term {
        args.into_iter().fold(f, Term::app)
    }

    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) | Term::Const(_) => 1,
            Term::Abs(_, b) => 1 + b.size(),
            Term::App(f, a) => 1 + f.size() + a.size(),
        }
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(x) => {
                if !bound.contains(x) {
                    out.insert(x.clone());
                }
            }
            Term::Const(_) => {}
            Term::Abs(x, b) => {
                bound.push(x.clone());
                b.collect_free(bound, out);
                bound.pop();
            }
            Term::App(f, a) => {
                f.collect_free(bound, out);
                a.collect_free(bound, out);
            }
        }
    }

    pub fn constants(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.walk(&mut |t| {
            if let Term::Const(c) = t {
                out.insert(c.clone());
            }
        });
        out
    }

    /// Every name used by the term, bound or free.
    pub fn all_names(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.walk(&mut |t| match t {
            Term::Var(x) | Term::Const(x) | Term::Abs(x, _) => {
                out.insert(x.clone());
            }
            Term::App(..) => {}
        });
        out
    }

    fn walk(&self, f: &mut impl FnMut(&Term)) {
        f(self);
        match self {
            Term::Abs(_, b) => b.walk(f),
            Term::App(g, a) => {
                g.walk(f);
                a.walk(f);
            }
            _ => {}
        }
    }

    /// Turns free variables named in `consts` into constants.
    pub fn close_over(&self, consts: &BTreeSet<String>) -> Term {
        fn go(t: &Term, consts: &BTreeSet<String>, bound: &mut Vec<String>) -> Term {
            match t {
                Term::Var(x) if !bound.contains(x) && consts.contains(x) => Term::Const(x.clone()),
                Term::Var(_) | Term::Const(_) => t.clone(),
                Term::Abs(x, b) => {
                    bound.push(x.clone());
                    let body = go(b, consts, bound);
                    bound.pop();
                    Term::abs(x.clone(), body)
                }
                Term::App(f, a) => Term::app(go(f, consts, bound), go(a, consts, bound)),
            }
        }
        go(self, consts, &mut Vec::new())
    }

    /// Replaces free variables by constants or terms, without capture
    /// checks. Intended for closed replacements.
    pub fn replace_free(&self, map: &BTreeMap<String, Term>) -> Term {
        let mut t = self.clone();
        for (x, v) in map {
            t = super::reduce::subst(&t, x, v);
        }
        t
    }
}

#[derive(PartialEq, Eq)]
enum Nameless<'a> {
    Free(&'a str),
    Const(&'a str),
    Bound(usize),
    Abs(Box<Nameless<'a>>),
    App(Box<Nameless<'a>>, Box<Nameless<'a>>),
}

fn nameless<'a>(t: &'a Term, bound: &mut Vec<&'a str>) -> Nameless<'a> {
    match t {
        Term::Var(x) => match bound.iter().rev().position(|b| b == x) {
            Some(i) => Nameless::Bound(i),
            None => Nameless::Free(x),
        },
        Term::Const(c) => Nameless::Const(c),
        Term::Abs(x, b) => {
            bound.push(x);
            let body = nameless(b, bound);
            bound.pop();
            Nameless::Abs(Box::new(body))
        }
        Term::App(f, a) => Nameless::App(Box::new(nameless(f, bound)), Box::new(nameless(a, bound))),
    }
}

/// Equality up to renaming of bound variables.
pub fn alpha_eq(t1: &Term, t2: &Term) -> bool {
    nameless(t1, &mut Vec::new()) == nameless(t2, &mut Vec::new())
}

/// Every name in `over` occurs exactly once: each binder for it binds one
/// occurrence, and free occurrences number one.
pub fn is_linear(t: &Term, over: &BTreeSet<String>) -> bool {
    fn count_free(t: &Term, x: &str) -> usize {
        match t {
            Term::Var(y) => usize::from(y == x),
            Term::Const(_) => 0,
            Term::Abs(y, b) => {
                if y == x {
                    0
                } else {
                    count_free(b, x)
                }
            }
            Term::App(f, a) => count_free(f, x) + count_free(a, x),
        }
    }
    fn binders_ok(t: &Term, over: &BTreeSet<String>, seen: &mut BTreeSet<String>) -> bool {
        match t {
            Term::Var(_) | Term::Const(_) => true,
            Term::Abs(x, b) => {
                if over.contains(x) {
                    seen.insert(x.clone());
                    if count_free(b, x) != 1 {
                        return false;
                    }
                }
                binders_ok(b, over, seen)
            }
            Term::App(f, a) => binders_ok(f, over, seen) && binders_ok(a, over, seen),
        }
    }
    let mut bound = BTreeSet::new();
    if !binders_ok(t, over, &mut bound) {
        return false;
    }
    let free = t.free_vars();
    over.iter().all(|x| if free.contains(x) { count_free(t, x) == 1 } else { bound.contains(x) })
}

/// Linearity over every variable of the term.
pub fn is_fully_linear(t: &Term) -> bool {
    let mut names = t.free_vars();
    t.walk(&mut |s| {
        if let Term::Abs(x, _) = s {
            names.insert(x.clone());
        }
    });
    is_linear(t, &names)
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(x) | Term::Const(x) => f.write_str(x),
            Term::Abs(..) => {
                let mut body = self;
                f.write_str("\\")?;
                let mut first = true;
                while let Term::Abs(x, b) = body {
                    if !first {
                        f.write_str(" ")?;
                    }
                    f.write_str(x)?;
                    first = false;
                    body = b;
                }
                write!(f, ". {body}")
            }
            Term::App(g, a) => {
                match **g {
                    Term::Abs(..) => write!(f, "({g})")?,
                    _ => write!(f, "{g}")?,
                }
                match **a {
                    Term::Var(_) | Term::Const(_) => write!(f, " {a}"),
                    _ => write!(f, " ({a})"),
                }
            }
        }
    }
}
