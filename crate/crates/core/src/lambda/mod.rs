//! The untyped λ-calculus over atoms.

mod alpha;
mod confluence;
mod enumerate;
mod reduce;
mod subst;
mod term;

pub use alpha::{alpha_eq, alpha_equivalent, AlphaJudgement, AlphaRule};
pub use confluence::{join_depth, local_confluence_failure, one_step_reducts};
pub use enumerate::enumerate_terms;
pub use reduce::{normalize, redex_positions, reduce_at, Normalization, Path, ReduceError, Step};
pub use subst::subst;
pub use term::{abs_free_atoms, Term};
