//! Locally nameless terms: de Bruijn indices for bound variables, atoms for
//! free ones.
//!
//! This module is a reference implementation for checking the nominal one.
//! It depends on nothing from the crate but [`Atom`] and the [`Term`] shape
//! it converts from.

use crate::atom::Atom;
use crate::lambda::Term;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum DbTerm {
    BVar(usize),
    FVar(Atom),
    App(Box<DbTerm>, Box<DbTerm>),
    Lam(Box<DbTerm>),
}

impl DbTerm {
    pub fn app(fun: DbTerm, arg: DbTerm) -> DbTerm {
        DbTerm::App(Box::new(fun), Box::new(arg))
    }

    pub fn lam(body: DbTerm) -> DbTerm {
        DbTerm::Lam(Box::new(body))
    }

    /// True when every index points at an enclosing binder.
    pub fn is_locally_closed(&self) -> bool {
        fn go(t: &DbTerm, depth: usize) -> bool {
            match t {
                DbTerm::BVar(i) => *i < depth,
                DbTerm::FVar(_) => true,
                DbTerm::App(l, r) => go(l, depth) && go(r, depth),
                DbTerm::Lam(b) => go(b, depth + 1),
            }
        }
        go(self, 0)
    }
}

/// Converts a named term; `Var(a)` under `k` binders nearer than the innermost
/// one binding `a` becomes `BVar(k)`.
pub fn to_db(t: &Term) -> DbTerm {
    fn go(t: &Term, binders: &mut Vec<Atom>) -> DbTerm {
        match t {
            Term::Var(a) => match binders.iter().rev().position(|b| b == a) {
                Some(k) => DbTerm::BVar(k),
                None => DbTerm::FVar(*a),
            },
            Term::App(l, r) => DbTerm::app(go(l, binders), go(r, binders)),
            Term::Lam(f) => {
                binders.push(f.binder);
                let body = go(&f.body, binders);
                binders.pop();
                DbTerm::lam(body)
            }
        }
    }
    go(t, &mut Vec::new())
}

/// Replaces every `FVar(a)` by `n`, which must be locally closed.
pub fn db_subst(t: &DbTerm, a: Atom, n: &DbTerm) -> DbTerm {
    match t {
        DbTerm::FVar(b) if *b == a => n.clone(),
        DbTerm::FVar(_) | DbTerm::BVar(_) => t.clone(),
        DbTerm::App(l, r) => DbTerm::app(db_subst(l, a, n), db_subst(r, a, n)),
        DbTerm::Lam(b) => DbTerm::lam(db_subst(b, a, n)),
    }
}

/// Adds `by` to every index at or above `cutoff`.
fn shift(t: &DbTerm, by: isize, cutoff: usize) -> DbTerm {
    match t {
        DbTerm::BVar(i) if *i >= cutoff => {
            DbTerm::BVar(i.checked_add_signed(by).expect("index shifted below zero"))
        }
        DbTerm::BVar(_) | DbTerm::FVar(_) => t.clone(),
        DbTerm::App(l, r) => DbTerm::app(shift(l, by, cutoff), shift(r, by, cutoff)),
        DbTerm::Lam(b) => DbTerm::lam(shift(b, by, cutoff + 1)),
    }
}

/// Replaces index `j` by `s`, adjusting `s` under binders.
fn subst_index(t: &DbTerm, j: usize, s: &DbTerm) -> DbTerm {
    match t {
        DbTerm::BVar(i) if *i == j => s.clone(),
        DbTerm::BVar(_) | DbTerm::FVar(_) => t.clone(),
        DbTerm::App(l, r) => DbTerm::app(subst_index(l, j, s), subst_index(r, j, s)),
        DbTerm::Lam(b) => DbTerm::lam(subst_index(b, j + 1, &shift(s, 1, 0))),
    }
}

fn beta(body: &DbTerm, arg: &DbTerm) -> DbTerm {
    shift(&subst_index(body, 0, &shift(arg, 1, 0)), -1, 0)
}

/// Contracts the leftmost-outermost redex, if any.
fn step(t: &DbTerm) -> Option<DbTerm> {
    match t {
        DbTerm::App(l, r) => {
            if let DbTerm::Lam(body) = &**l {
                return Some(beta(body, r));
            }
            if let Some(l2) = step(l) {
                return Some(DbTerm::App(Box::new(l2), r.clone()));
            }
            step(r).map(|r2| DbTerm::App(l.clone(), Box::new(r2)))
        }
        DbTerm::Lam(b) => step(b).map(DbTerm::lam),
        DbTerm::BVar(_) | DbTerm::FVar(_) => None,
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DbNormalization {
    NormalForm { term: DbTerm, steps: usize },
    OutOfFuel(DbTerm),
}

pub fn db_normalize(t: &DbTerm, fuel: usize) -> DbNormalization {
    let mut current = t.clone();
    let mut steps = 0;
    loop {
        let Some(next) = step(&current) else {
            return DbNormalization::NormalForm {
                term: current,
                steps,
            };
        };
        if steps == fuel {
            return DbNormalization::OutOfFuel(current);
        }
        current = next;
        steps += 1;
    }
}
