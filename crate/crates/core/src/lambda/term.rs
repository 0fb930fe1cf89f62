use std::collections::BTreeSet;
use std::fmt;

use crate::abs::Abs;
use crate::atom::Atom;
use crate::swap::{swap_atom, Swap};
use crate::syntax;

/// An untyped λ-term over named atoms.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Term {
    Var(Atom),
    App(Box<Term>, Box<Term>),
    Lam(Box<Abs<Term>>),
}

impl Term {
    pub fn var(a: impl Into<Atom>) -> Term {
        Term::Var(a.into())
    }

    pub fn app(fun: Term, arg: Term) -> Term {
        Term::App(Box::new(fun), Box::new(arg))
    }

    pub fn lam(binder: impl Into<Atom>, body: Term) -> Term {
        Term::Lam(Box::new(Abs::new(binder.into(), body)))
    }

    /// Node count.
    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) => 1,
            Term::App(l, r) => 1 + l.size() + r.size(),
            Term::Lam(f) => 1 + f.body.size(),
        }
    }

    pub fn is_redex(&self) -> bool {
        matches!(self, Term::App(l, _) if matches!(**l, Term::Lam(_)))
    }

    /// Free atoms, sorted by index and without duplicates.
    pub fn free_atoms(&self) -> Vec<Atom> {
        fn go(t: &Term, bound: &mut Vec<Atom>, out: &mut BTreeSet<Atom>) {
            match t {
                Term::Var(z) => {
                    if !bound.contains(z) {
                        out.insert(*z);
                    }
                }
                Term::App(l, r) => {
                    go(l, bound, out);
                    go(r, bound, out);
                }
                Term::Lam(f) => {
                    bound.push(f.binder);
                    go(&f.body, bound, out);
                    bound.pop();
                }
            }
        }
        let mut out = BTreeSet::new();
        go(self, &mut Vec::new(), &mut out);
        out.into_iter().collect()
    }

    /// Every atom occurring in the term, binders included, sorted.
    pub fn all_atoms(&self) -> Vec<Atom> {
        fn go(t: &Term, out: &mut BTreeSet<Atom>) {
            match t {
                Term::Var(z) => {
                    out.insert(*z);
                }
                Term::App(l, r) => {
                    go(l, out);
                    go(r, out);
                }
                Term::Lam(f) => {
                    out.insert(f.binder);
                    go(&f.body, out);
                }
            }
        }
        let mut out = BTreeSet::new();
        go(self, &mut out);
        out.into_iter().collect()
    }
}

/// Free atoms of an abstraction over terms.
pub fn abs_free_atoms(f: &Abs<Term>) -> Vec<Atom> {
    f.support(Term::free_atoms)
}

// Constructor-wise: swapping commutes with Var, App and Lam.
impl Swap for Term {
    fn swap(&self, a: Atom, b: Atom) -> Self {
        match self {
            Term::Var(z) => Term::Var(swap_atom(a, b, *z)),
            Term::App(l, r) => Term::App(Box::new(l.swap(a, b)), Box::new(r.swap(a, b))),
            Term::Lam(f) => Term::Lam(Box::new(f.swap(a, b))),
        }
    }
}

/// Prints with every atom shown as `_<index>`.
impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        syntax::write_term(f, self, &|a: Atom| a.to_string())
    }
}
