//! β-reduction at addressed positions and leftmost-outermost normalization.

use std::fmt;

use thiserror::Error;

use crate::lambda::subst::subst;
use crate::lambda::term::Term;

/// One step down the tree.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Step {
    Fun,
    Arg,
    Body,
}

/// Address of a subterm, from the root.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Path(pub Vec<Step>);

impl Path {
    pub fn root() -> Path {
        Path(Vec::new())
    }

    pub fn is_root(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("root");
        }
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            f.write_str(match s {
                Step::Fun => "fun",
                Step::Arg => "arg",
                Step::Body => "body",
            })?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReduceError {
    #[error("no β-redex at {0}")]
    InvalidPath(Path),
}

/// Positions of all β-redexes, leftmost-outermost first.
pub fn redex_positions(t: &Term) -> Vec<Path> {
    fn go(t: &Term, here: &mut Vec<Step>, out: &mut Vec<Path>) {
        if t.is_redex() {
            out.push(Path(here.clone()));
        }
        match t {
            Term::Var(_) => {}
            Term::App(l, r) => {
                here.push(Step::Fun);
                go(l, here, out);
                here.pop();
                here.push(Step::Arg);
                go(r, here, out);
                here.pop();
            }
            Term::Lam(f) => {
                here.push(Step::Body);
                go(&f.body, here, out);
                here.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(t, &mut Vec::new(), &mut out);
    out
}

/// Contracts a redex `(\x. m) n` to `m[x := n]`.
fn contract(t: &Term) -> Option<Term> {
    match t {
        Term::App(l, n) => match &**l {
            Term::Lam(f) => Some(subst(&f.body, f.binder, n)),
            _ => None,
        },
        _ => None,
    }
}

/// Contracts the redex at `p`, leaving every other node unchanged.
pub fn reduce_at(t: &Term, p: &Path) -> Result<Term, ReduceError> {
    fn go(t: &Term, steps: &[Step]) -> Option<Term> {
        match (steps.split_first(), t) {
            (None, _) => contract(t),
            (Some((Step::Fun, rest)), Term::App(l, r)) => {
                Some(Term::App(Box::new(go(l, rest)?), r.clone()))
            }
            (Some((Step::Arg, rest)), Term::App(l, r)) => {
                Some(Term::App(l.clone(), Box::new(go(r, rest)?)))
            }
            (Some((Step::Body, rest)), Term::Lam(f)) => {
                Some(Term::lam(f.binder, go(&f.body, rest)?))
            }
            _ => None,
        }
    }
    go(t, &p.0).ok_or_else(|| ReduceError::InvalidPath(p.clone()))
}

/// Result of normalization under a step budget.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Normalization {
    NormalForm { term: Term, steps: usize },
    OutOfFuel(Term),
}

impl Normalization {
    pub fn term(&self) -> &Term {
        match self {
            Normalization::NormalForm { term, .. } | Normalization::OutOfFuel(term) => term,
        }
    }
}

/// Leftmost-outermost reduction for at most `fuel` steps.
pub fn normalize(t: &Term, fuel: usize) -> Normalization {
    let mut current = t.clone();
    let mut steps = 0;
    loop {
        let Some(p) = redex_positions(&current).into_iter().next() else {
            return Normalization::NormalForm {
                term: current,
                steps,
            };
        };
        if steps == fuel {
            return Normalization::OutOfFuel(current);
        }
        current = reduce_at(&current, &p).expect("redex_positions yields redexes");
        steps += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atom::Atom;
    use crate::lambda::alpha::alpha_equivalent;

    const X: Atom = Atom::new(0);
    const Y: Atom = Atom::new(1);
    const Z: Atom = Atom::new(2);
    const W: Atom = Atom::new(3);

    fn v(a: Atom) -> Term {
        Term::var(a)
    }

    fn id(a: Atom) -> Term {
        Term::lam(a, v(a))
    }

    fn omega() -> Term {
        let delta = Term::lam(X, Term::app(v(X), v(X)));
        Term::app(delta.clone(), delta)
    }

    #[test]
    fn positions() {
        assert_eq!(redex_positions(&Term::app(id(X), v(Y))), vec![Path::root()]);
        assert!(redex_positions(&v(X)).is_empty());
        let t = Term::app(Term::app(id(X), v(Y)), Term::app(id(Z), v(W)));
        assert_eq!(
            redex_positions(&t),
            vec![Path(vec![Step::Fun]), Path(vec![Step::Arg])]
        );
        let nested = Term::app(Term::lam(X, Term::app(id(Y), v(X))), v(Z));
        assert_eq!(
            redex_positions(&nested),
            vec![Path::root(), Path(vec![Step::Fun, Step::Body])]
        );
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce_at(&Term::app(id(X), v(Y)), &Path::root()), Ok(v(Y)));

        let k_app = Term::app(Term::lam(X, Term::lam(Y, v(X))), v(Y));
        let out = reduce_at(&k_app, &Path::root()).unwrap();
        assert!(alpha_equivalent(&out, &Term::lam(Z, v(Y))));
        assert!(!alpha_equivalent(&out, &id(Y)));

        assert_eq!(
            reduce_at(&v(X), &Path::root()),
            Err(ReduceError::InvalidPath(Path::root()))
        );
        assert!(reduce_at(&Term::app(id(X), v(Y)), &Path(vec![Step::Arg])).is_err());
    }

    #[test]
    fn reduce_leaves_rest_untouched() {
        let t = Term::app(Term::app(id(X), v(Y)), Term::app(id(Z), v(W)));
        let out = reduce_at(&t, &Path(vec![Step::Arg])).unwrap();
        assert_eq!(out, Term::app(Term::app(id(X), v(Y)), v(W)));
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(
            normalize(&Term::app(id(X), id(Y)), 10),
            Normalization::NormalForm {
                term: id(Y),
                steps: 1
            }
        );
        assert_eq!(
            normalize(&id(X), 0),
            Normalization::NormalForm {
                term: id(X),
                steps: 0
            }
        );
        match normalize(&omega(), 50) {
            Normalization::OutOfFuel(t) => assert!(alpha_equivalent(&t, &omega())),
            other => panic!("expected divergence, got {other:?}"),
        }
    }

    #[test]
    fn path_display() {
        assert_eq!(Path::root().to_string(), "root");
        assert_eq!(Path(vec![Step::Fun, Step::Body]).to_string(), "fun/body");
    }
}
