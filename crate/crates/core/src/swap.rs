//! The swapping action, its instance on atoms, and executable forms of the
//! cofinite quantifier, finite support and equivariance.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::atom::{fresh_atom, Atom};

/// Seed used by the support and cofinite checks when none is given.
pub const DEFAULT_SEED: u64 = 0x006e_6f6d_696e_616c;

/// Types on which a transposition of two atoms acts.
///
/// Instances are expected to satisfy the laws checked by
/// [`crate::laws::check_swap_laws`].
pub trait Swap {
    /// Exchanges `a` and `b` everywhere in `self`.
    fn swap(&self, a: Atom, b: Atom) -> Self;
}

/// The transposition `(a b)` applied to a single atom.
pub fn swap_atom(a: Atom, b: Atom, z: Atom) -> Atom {
    if z == a {
        b
    } else if z == b {
        a
    } else {
        z
    }
}

impl Swap for Atom {
    fn swap(&self, a: Atom, b: Atom) -> Self {
        swap_atom(a, b, *self)
    }
}

/// Deterministic supply of atoms outside a finite exclusion list.
///
/// Yields `fresh_atom(exclusions)` and its successors first, then atoms drawn
/// uniformly from a window a little past the exclusions, skipping members.
#[derive(Clone, Debug)]
pub struct OutsideAtoms {
    exclusions: Vec<Atom>,
    first: Atom,
    window: u32,
    rng: ChaCha8Rng,
}

impl OutsideAtoms {
    pub fn new(exclusions: &[Atom], seed: u64) -> Self {
        let first = fresh_atom(exclusions);
        OutsideAtoms {
            exclusions: exclusions.to_vec(),
            first,
            window: first.index() + 16,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// The `i`-th atom past every exclusion.
    pub fn sequential(&self, i: u32) -> Atom {
        self.first.offset(i)
    }

    pub fn random(&mut self) -> Atom {
        loop {
            let candidate = Atom::new(self.rng.gen_range(0..self.window));
            if !self.exclusions.contains(&candidate) {
                return candidate;
            }
        }
    }

    /// `n` atoms: the first half sequential, the rest random.
    pub fn atoms(&mut self, n: usize) -> Vec<Atom> {
        let seq = n.div_ceil(2);
        let mut out: Vec<Atom> = (0..seq as u32).map(|i| self.sequential(i)).collect();
        out.extend((seq..n).map(|_| self.random()));
        out
    }

    /// `n` pairs: the first half are consecutive sequential atoms, the rest
    /// independent random draws.
    pub fn pairs(&mut self, n: usize) -> Vec<(Atom, Atom)> {
        let seq = n.div_ceil(2);
        let mut out: Vec<(Atom, Atom)> = (0..seq as u32)
            .map(|i| (self.sequential(i), self.sequential(i + 1)))
            .collect();
        out.extend((seq..n).map(|_| (self.random(), self.random())));
        out
    }
}

/// A claim that `holds_at` is true for every atom outside `exclusions`.
pub struct CofiniteWitness<F> {
    pub exclusions: Vec<Atom>,
    pub holds_at: F,
}

impl<F: Fn(Atom) -> bool> CofiniteWitness<F> {
    pub fn new(exclusions: Vec<Atom>, holds_at: F) -> Self {
        CofiniteWitness {
            exclusions,
            holds_at,
        }
    }

    /// First sampled atom outside the exclusions at which the predicate fails.
    pub fn counterexample(&self, samples: usize, seed: u64) -> Option<Atom> {
        OutsideAtoms::new(&self.exclusions, seed)
            .atoms(samples)
            .into_iter()
            .find(|&y| !(self.holds_at)(y))
    }

    pub fn check(&self, samples: usize) -> bool {
        self.counterexample(samples, DEFAULT_SEED).is_none()
    }
}

/// Two-atom form of [`CofiniteWitness`].
pub struct CofiniteWitness2<F> {
    pub exclusions: Vec<Atom>,
    pub holds_at: F,
}

impl<F: Fn(Atom, Atom) -> bool> CofiniteWitness2<F> {
    pub fn new(exclusions: Vec<Atom>, holds_at: F) -> Self {
        CofiniteWitness2 {
            exclusions,
            holds_at,
        }
    }

    pub fn counterexample(&self, samples: usize, seed: u64) -> Option<(Atom, Atom)> {
        OutsideAtoms::new(&self.exclusions, seed)
            .pairs(samples)
            .into_iter()
            .find(|&(y, z)| !(self.holds_at)(y, z))
    }

    pub fn check(&self, samples: usize) -> bool {
        self.counterexample(samples, DEFAULT_SEED).is_none()
    }
}

/// A value together with a claimed finite support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinSupp<T> {
    pub value: T,
    pub support: Vec<Atom>,
}

impl<T: Swap> FinSupp<T> {
    pub fn new(value: T, support: Vec<Atom>) -> Self {
        FinSupp { value, support }
    }

    /// A pair `(a, b)` outside the support with `swap(b, a, value) != value`.
    pub fn violation<E>(&self, eq: E, samples: usize, seed: u64) -> Option<(Atom, Atom)>
    where
        E: Fn(&T, &T) -> bool,
    {
        let witness = CofiniteWitness2::new(self.support.clone(), |a, b| {
            eq(&self.value.swap(b, a), &self.value)
        });
        witness.counterexample(samples, seed)
    }
}

/// Checks a finite-support claim at `samples` atom pairs outside the support.
pub fn check_fin_supp<T, E>(w: &FinSupp<T>, eq: E, samples: usize) -> bool
where
    T: Swap,
    E: Fn(&T, &T) -> bool,
{
    w.violation(eq, samples, DEFAULT_SEED).is_none()
}

/// A value claimed to have empty support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equivariant<T>(FinSupp<T>);

impl<T: Swap> Equivariant<T> {
    pub fn new(value: T) -> Self {
        Equivariant(FinSupp::new(value, Vec::new()))
    }

    pub fn value(&self) -> &T {
        &self.0.value
    }

    pub fn as_fin_supp(&self) -> &FinSupp<T> {
        &self.0
    }

    pub fn check<E: Fn(&T, &T) -> bool>(&self, eq: E, samples: usize) -> bool {
        check_fin_supp(&self.0, eq, samples)
    }
}
