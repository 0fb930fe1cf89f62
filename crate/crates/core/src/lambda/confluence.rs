//! Bounded join search for one-step divergences.

use crate::lambda::alpha::alpha_equivalent;
use crate::lambda::reduce::{redex_positions, reduce_at};
use crate::lambda::term::Term;

/// All one-step reducts, in leftmost-outermost order of the redex contracted.
pub fn one_step_reducts(t: &Term) -> Vec<Term> {
    redex_positions(t)
        .iter()
        .map(|p| reduce_at(t, p).expect("redex_positions yields redexes"))
        .collect()
}

fn insert_new(seen: &mut Vec<Term>, t: Term) -> bool {
    if seen.iter().any(|s| alpha_equivalent(s, &t)) {
        false
    } else {
        seen.push(t);
        true
    }
}

/// Number of further steps after which `s` and `t` have α-equivalent
/// reducts, searched breadth-first up to `depth` steps on each side.
pub fn join_depth(s: &Term, t: &Term, depth: usize) -> Option<usize> {
    let mut left_seen = vec![s.clone()];
    let mut right_seen = vec![t.clone()];
    let mut left_frontier = left_seen.clone();
    let mut right_frontier = right_seen.clone();
    let meets =
        |ls: &[Term], rs: &[Term]| ls.iter().any(|l| rs.iter().any(|r| alpha_equivalent(l, r)));
    if meets(&left_seen, &right_seen) {
        return Some(0);
    }
    for k in 1..=depth {
        let mut next = Vec::new();
        for u in &left_frontier {
            for r in one_step_reducts(u) {
                if insert_new(&mut left_seen, r.clone()) {
                    next.push(r);
                }
            }
        }
        left_frontier = next;
        let mut next = Vec::new();
        for u in &right_frontier {
            for r in one_step_reducts(u) {
                if insert_new(&mut right_seen, r.clone()) {
                    next.push(r);
                }
            }
        }
        right_frontier = next;
        if meets(&left_seen, &right_seen) {
            return Some(k);
        }
        if left_frontier.is_empty() && right_frontier.is_empty() {
            return None;
        }
    }
    None
}

/// For every pair of distinct redexes in `t`, whether their contractions
/// join within `depth` steps. Returns the first pair (by redex index) that
/// does not.
pub fn local_confluence_failure(t: &Term, depth: usize) -> Option<(usize, usize)> {
    let reducts = one_step_reducts(t);
    for i in 0..reducts.len() {
        for j in i + 1..reducts.len() {
            if join_depth(&reducts[i], &reducts[j], depth).is_none() {
                return Some((i, j));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atom::Atom;

    const X: Atom = Atom::new(0);
    const Y: Atom = Atom::new(1);

    fn v(a: Atom) -> Term {
        Term::var(a)
    }

    #[test]
    fn duplicating_redex_joins() {
        // (\x. x x) ((\y. y) x): outer step copies the inner redex
        let t = Term::app(
            Term::lam(X, Term::app(v(X), v(X))),
            Term::app(Term::lam(Y, v(Y)), v(X)),
        );
        let reducts = one_step_reducts(&t);
        assert_eq!(reducts.len(), 2);
        assert_eq!(join_depth(&reducts[0], &reducts[1], 8), Some(2));
        assert_eq!(local_confluence_failure(&t, 8), None);
    }

    #[test]
    fn normal_forms_that_differ_never_join() {
        assert_eq!(join_depth(&v(X), &v(Y), 8), None);
        assert_eq!(join_depth(&v(X), &v(X), 0), Some(0));
    }
}
