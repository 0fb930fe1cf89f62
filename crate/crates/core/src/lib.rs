//! Nominal techniques for name binding.
//!
//! Atoms and the swapping action ([`atom`], [`swap`], [`laws`]),
//! name-abstraction with total concretion ([`abs`]), and an untyped
//! λ-calculus built on them ([`lambda`]): α-equivalence, capture-avoiding
//! substitution and β-normalization. [`debruijn`] is an independent locally
//! nameless implementation used to cross-check the nominal one.

pub mod abs;
pub mod atom;
pub mod check;
pub mod cli;
pub mod debruijn;
pub mod lambda;
pub mod laws;
pub mod swap;
pub mod syntax;

pub use abs::{abs_alpha_eq, Abs};
pub use atom::{atom_eq, fresh_atom, Atom};
pub use lambda::Term;
pub use swap::{swap_atom, Swap};
