use std::collections::BTreeMap;

use thiserror::Error;

use super::term::Term;
use crate::syntax::Type;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TypeError {
    #[error("unbound name `{0}`")]
    Unbound(String),
    #[error("cannot unify {0} with {1}")]
    Mismatch(String, String),
    #[error("occurs check failed")]
    Occurs,
}

/// Inference type: metavariables stand for the types of bound variables.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Ty {
    Meta(usize),
    Atom(String),
    Arrow(Box<Ty>, Box<Ty>),
}

fn from_type(t: &Type) -> Ty {
    match t {
        Type::Atom(a) => Ty::Atom(a.clone()),
        Type::Arrow(d, c) => Ty::Arrow(Box::new(from_type(d)), Box::new(from_type(c))),
    }
}

#[derive(Default)]
struct Solver {
    subst: Vec<Option<Ty>>,
}

impl Solver {
    fn fresh(&mut self) -> Ty {
        self.subst.push(None);
        Ty::Meta(self.subst.len() - 1)
    }

    fn resolve(&self, t: &Ty) -> Ty {
        match t {
            Ty::Meta(i) => match &self.subst[*i] {
                Some(s) => self.resolve(s),
                None => t.clone(),
            },
            Ty::Atom(_) => t.clone(),
            Ty::Arrow(d, c) => Ty::Arrow(Box::new(self.resolve(d)), Box::new(self.resolve(c))),
        }
    }

    fn occurs(&self, i: usize, t: &Ty) -> bool {
        match self.resolve(t) {
            Ty::Meta(j) => i == j,
            Ty::Atom(_) => false,
            Ty::Arrow(d, c) => self.occurs(i, &d) || self.occurs(i, &c),
        }
    }

    fn unify(&mut self, a: &Ty, b: &Ty) -> Result<(), TypeError> {
        let (a, b) = (self.resolve(a), self.resolve(b));
        match (&a, &b) {
            (Ty::Meta(i), Ty::Meta(j)) if i == j => Ok(()),
            (Ty::Meta(i), other) | (other, Ty::Meta(i)) => {
                if self.occurs(*i, other) {
                    return Err(TypeError::Occurs);
                }
                self.subst[*i] = Some(other.clone());
                Ok(())
            }
            (Ty::Atom(x), Ty::Atom(y)) if x == y => Ok(()),
            (Ty::Arrow(d1, c1), Ty::Arrow(d2, c2)) => {
                self.unify(d1, d2)?;
                self.unify(c1, c2)
            }
            _ => Err(TypeError::Mismatch(self.show(&a), self.show(&b))),
        }
    }

    fn show(&self, t: &Ty) -> String {
        self.to_type(t).to_string()
    }

    /// Unsolved metavariables print as `?n`.
    fn to_type(&self, t: &Ty) -> Type {
        match self.resolve(t) {
            Ty::Meta(i) => Type::atom(format!("?{i}")),
            Ty::Atom(a) => Type::Atom(a),
            Ty::Arrow(d, c) => Type::arrow(self.to_type(&d), self.to_type(&c)),
        }
    }

    fn infer(&mut self, t: &Term, env: &BTreeMap<String, Type>, local: &mut Vec<(String, Ty)>) -> Result<Ty, TypeError> {
        match t {
            Term::Var(x) | Term::Const(x) => {
                if matches!(t, Term::Var(_)) {
                    if let Some((_, ty)) = local.iter().rev().find(|(y, _)| y == x) {
                        return Ok(ty.clone());
                    }
                }
                env.get(x).map(from_type).ok_or_else(|| TypeError::Unbound(x.clone()))
            }
            Term::Abs(x, b) => {
                let dom = self.fresh();
                local.push((x.clone(), dom.clone()));
                let cod = self.infer(b, env, local);
                local.pop();
                Ok(Ty::Arrow(Box::new(dom), Box::new(cod?)))
            }
            Term::App(f, a) => {
                let ft = self.infer(f, env, local)?;
                let at = self.infer(a, env, local)?;
                let res = self.fresh();
                self.unify(&ft, &Ty::Arrow(Box::new(at), Box::new(res.clone())))?;
                Ok(res)
            }
        }
    }
}

/// Infers the simple type of `t`; `env` types free variables and constants.
/// Types of unconstrained binders come back as `?n` atoms.
pub fn typecheck(t: &Term, env: &BTreeMap<String, Type>) -> Result<Type, TypeError> {
    let mut s = Solver::default();
    let ty = s.infer(t, env, &mut Vec::new())?;
    Ok(s.to_type(&ty))
}

/// Checks `t` against an expected type.
pub fn check(t: &Term, env: &BTreeMap<String, Type>, expected: &Type) -> Result<(), TypeError> {
    let mut s = Solver::default();
    let ty = s.infer(t, env, &mut Vec::new())?;
    s.unify(&ty, &from_type(expected))
}
