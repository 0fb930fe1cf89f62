//! α-equivalence by the three structural rules, with a derivation trace.

use std::fmt;

use crate::abs::abs_alpha_eq;
use crate::lambda::term::Term;

/// The rule applied at a node of an α-derivation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum AlphaRule {
    /// Identical variables.
    Var,
    /// Application, componentwise.
    App,
    /// Abstraction, via concretion at a fresh atom.
    Lam,
}

impl fmt::Display for AlphaRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlphaRule::Var => "ν≈",
            AlphaRule::App => "ξ≈",
            AlphaRule::Lam => "ζ≈",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlphaJudgement {
    pub lhs: Term,
    pub rhs: Term,
    pub verdict: bool,
    /// Rules of the derivation in pre-order over `lhs`; empty when the
    /// verdict is false.
    pub trace: Vec<AlphaRule>,
}

pub fn alpha_eq(s: &Term, t: &Term) -> AlphaJudgement {
    let mut trace = Vec::new();
    let verdict = derive(s, t, &mut trace);
    if !verdict {
        trace.clear();
    }
    AlphaJudgement {
        lhs: s.clone(),
        rhs: t.clone(),
        verdict,
        trace,
    }
}

/// Verdict of [`alpha_eq`] without building the judgement.
pub fn alpha_equivalent(s: &Term, t: &Term) -> bool {
    derive(s, t, &mut Vec::new())
}

fn derive(s: &Term, t: &Term, trace: &mut Vec<AlphaRule>) -> bool {
    match (s, t) {
        (Term::Var(x), Term::Var(y)) => {
            trace.push(AlphaRule::Var);
            x == y
        }
        (Term::App(l, m), Term::App(l2, m2)) => {
            trace.push(AlphaRule::App);
            derive(l, l2, trace) && derive(m, m2, trace)
        }
        (Term::Lam(f), Term::Lam(g)) => {
            trace.push(AlphaRule::Lam);
            abs_alpha_eq(f, g, |a, b| derive(a, b, trace), Term::free_atoms)
        }
        _ => false,
    }
}
