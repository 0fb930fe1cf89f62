//! Capture-avoiding substitution.

use crate::atom::{fresh_atom, Atom};
use crate::lambda::term::{abs_free_atoms, Term};

/// `t[a := n]`.
///
/// Every abstraction is reopened at an atom fresh for `a`, the abstraction's
/// free atoms and the free atoms of `n`, whether or not capture threatens.
/// Concretion preserves size, so the recursion is on strictly smaller terms.
pub fn subst(t: &Term, a: Atom, n: &Term) -> Term {
    let n_free = n.free_atoms();
    go(t, a, n, &n_free)
}

fn go(t: &Term, a: Atom, n: &Term, n_free: &[Atom]) -> Term {
    match t {
        Term::Var(x) => {
            if *x == a {
                n.clone()
            } else {
                t.clone()
            }
        }
        Term::App(l, m) => Term::app(go(l, a, n, n_free), go(m, a, n, n_free)),
        Term::Lam(f) => {
            let mut avoid = vec![a];
            avoid.extend(abs_free_atoms(f));
            avoid.extend_from_slice(n_free);
            let z = fresh_atom(&avoid);
            Term::lam(z, go(&f.conc(z), a, n, n_free))
        }
    }
}
