use std::collections::BTreeSet;

use super::term::Term;

/// First name `stem<n>` (n = 1, 2, ...) not in `avoid`, where `stem` is
/// `base` without trailing digits.
pub fn fresh_name(base: &str, avoid: &BTreeSet<String>) -> String {
    let stem = base.trim_end_matches(|c: char| c.is_ascii_digit());
    let stem = if stem.is_empty() { "v" } else { stem };
    (1..).map(|n| format!("{stem}{n}")).find(|c| !avoid.contains(c)).expect("unbounded supply")
}

/// Capture-avoiding substitution `t[x := v]`.
pub fn subst(t: &Term, x: &str, v: &Term) -> Term {
    let fv = v.free_vars();
    subst_with(t, x, v, &fv)
}

fn subst_with(t: &Term, x: &str, v: &Term, fv: &BTreeSet<String>) -> Term {
    match t {
        Term::Var(y) if y == x => v.clone(),
        Term::Var(_) | Term::Const(_) => t.clone(),
        Term::App(f, a) => Term::app(subst_with(f, x, v, fv), subst_with(a, x, v, fv)),
        Term::Abs(y, _) if y == x => t.clone(),
        Term::Abs(y, b) => {
            if !b.free_vars().contains(x) {
                return t.clone();
            }
            if fv.contains(y) {
                let mut avoid = fv.clone();
                avoid.extend(b.all_names());
                avoid.insert(x.to_string());
                let z = fresh_name(y, &avoid);
                let renamed = subst_with(b, y, &Term::Var(z.clone()), &BTreeSet::from([z.clone()]));
                Term::abs(z, subst_with(&renamed, x, v, fv))
            } else {
                Term::abs(y.clone(), subst_with(b, x, v, fv))
            }
        }
    }
}

fn whnf(t: &Term) -> Term {
    match t {
        Term::App(f, a) => match whnf(f) {
            Term::Abs(x, b) => whnf(&subst(&b, &x, a)),
            f2 => Term::app(f2, (**a).clone()),
        },
        _ => t.clone(),
    }
}

/// β-normal form by the normal-order (leftmost outermost) strategy.
pub fn beta_normalize(t: &Term) -> Term {
    match t {
        Term::Abs(x, b) => Term::abs(x.clone(), beta_normalize(b)),
        Term::App(f, a) => match whnf(f) {
            Term::Abs(x, b) => beta_normalize(&subst(&b, &x, a)),
            f2 => Term::app(beta_normalize(&f2), beta_normalize(a)),
        },
        _ => t.clone(),
    }
}

/// β-normal form by the innermost strategy: arguments are normalized
/// before they are substituted.
pub fn beta_normalize_innermost(t: &Term) -> Term {
    match t {
        Term::Abs(x, b) => Term::abs(x.clone(), beta_normalize_innermost(b)),
        Term::App(f, a) => {
            let f = beta_normalize_innermost(f);
            let a = beta_normalize_innermost(a);
            match f {
                Term::Abs(x, b) => beta_normalize_innermost(&subst(&b, &x, &a)),
                f => Term::app(f, a),
            }
        }
        _ => t.clone(),
    }
}

pub fn is_normal(t: &Term) -> bool {
    match t {
        Term::Var(_) | Term::Const(_) => true,
        Term::Abs(_, b) => is_normal(b),
        Term::App(f, a) => !matches!(**f, Term::Abs(..)) && is_normal(f) && is_normal(a),
    }
}
