//! Name-abstraction: a binder atom paired with a body.

use crate::atom::{fresh_atom, Atom};
use crate::swap::{swap_atom, Swap};

/// `binder` bound in `body`, stored exactly as given.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Abs<T> {
    pub binder: Atom,
    pub body: T,
}

impl<T> Abs<T> {
    pub fn new(binder: Atom, body: T) -> Self {
        Abs { binder, body }
    }

    /// Support of the abstraction given a support function for the body:
    /// the body's support without the binder.
    pub fn support<S>(&self, supp: S) -> Vec<Atom>
    where
        S: Fn(&T) -> Vec<Atom>,
    {
        let mut atoms = supp(&self.body);
        atoms.retain(|&a| a != self.binder);
        atoms
    }
}

impl<T: Swap> Abs<T> {
    /// Concretion at `b`: the body with `b` and the binder exchanged.
    ///
    /// Total; no freshness condition on `b`.
    pub fn conc(&self, b: Atom) -> T {
        self.body.swap(b, self.binder)
    }
}

impl<T: Swap> Swap for Abs<T> {
    fn swap(&self, a: Atom, b: Atom) -> Self {
        Abs {
            binder: swap_atom(a, b, self.binder),
            body: self.body.swap(a, b),
        }
    }
}

/// The atom at which [`abs_alpha_eq`] opens both abstractions: fresh for both
/// binders and both bodies' supports.
pub fn concretion_atom<T, S>(f: &Abs<T>, g: &Abs<T>, supp: S) -> Atom
where
    S: Fn(&T) -> Vec<Atom>,
{
    let mut avoid = vec![f.binder, g.binder];
    avoid.extend(supp(&f.body));
    avoid.extend(supp(&g.body));
    fresh_atom(&avoid)
}

/// Compares the concretions of `f` and `g` at `z`.
pub fn abs_alpha_eq_at<T, E>(f: &Abs<T>, g: &Abs<T>, z: Atom, eq: E) -> bool
where
    T: Swap,
    E: FnOnce(&T, &T) -> bool,
{
    eq(&f.conc(z), &g.conc(z))
}

/// α-equivalence of abstractions: the concretions agree at an atom fresh for
/// everything in sight, which by equivariance stands for all but finitely
/// many atoms.
pub fn abs_alpha_eq<T, E, S>(f: &Abs<T>, g: &Abs<T>, eq: E, supp: S) -> bool
where
    T: Swap,
    E: FnOnce(&T, &T) -> bool,
    S: Fn(&T) -> Vec<Atom>,
{
    let z = concretion_atom(f, g, supp);
    abs_alpha_eq_at(f, g, z, eq)
}
