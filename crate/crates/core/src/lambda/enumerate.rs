use crate::atom::Atom;
use crate::lambda::term::Term;

/// Every term with at most `max_size` nodes whose variables and binders are
/// drawn from `atoms`.
///
/// Ordered by size, then variables, abstractions (by binder, then body) and
/// applications (by split point, then function, then argument).
pub fn enumerate_terms(atoms: &[Atom], max_size: usize) -> Vec<Term> {
    assert!(!atoms.is_empty(), "atom pool must be nonempty");
    let mut by_size: Vec<Vec<Term>> = vec![Vec::new()];
    for n in 1..=max_size {
        let mut level = Vec::new();
        if n == 1 {
            level.extend(atoms.iter().map(|&a| Term::Var(a)));
        } else {
            for &b in atoms {
                for body in &by_size[n - 1] {
                    level.push(Term::lam(b, body.clone()));
                }
            }
            for left in 1..n - 1 {
                let right = n - 1 - left;
                for l in &by_size[left] {
                    for r in &by_size[right] {
                        level.push(Term::app(l.clone(), r.clone()));
                    }
                }
            }
        }
        by_size.push(level);
    }
    by_size.into_iter().flatten().collect()
}
