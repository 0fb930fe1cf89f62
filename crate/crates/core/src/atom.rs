//! Atoms: opaque names with decidable equality and an unbounded supply.

use std::fmt;

/// A name. Atoms carry no spelling; they are compared and ordered by index.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Atom(u32);

impl Atom {
    pub const fn new(index: u32) -> Self {
        Atom(index)
    }

    pub const fn index(self) -> u32 {
        self.0
    }

    /// The atom `n` places after this one.
    pub fn offset(self, n: u32) -> Atom {
        Atom(self.0.checked_add(n).expect("atom index overflow"))
    }
}

impl From<u32> for Atom {
    fn from(index: u32) -> Self {
        Atom(index)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "_{}", self.0)
    }
}

/// Decidable equality on atoms.
pub fn atom_eq(a: Atom, b: Atom) -> bool {
    a.0 == b.0
}

/// Returns an atom not occurring in `avoid`.
///
/// The choice is one past the largest index in `avoid` (or index 0 when it is
/// empty), so it depends only on the set of atoms given, not on their order
/// or multiplicity.
pub fn fresh_atom<'a, I>(avoid: I) -> Atom
where
    I: IntoIterator<Item = &'a Atom>,
{
    avoid.into_iter().map(|a| a.0).max().map_or(Atom(0), |m| {
        Atom(m.checked_add(1).expect("atom index overflow"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(i: u32) -> Atom {
        Atom::new(i)
    }

    #[test]
    fn equality() {
        assert!(atom_eq(a(3), a(3)));
        assert!(!atom_eq(a(0), a(1)));
        assert!(atom_eq(a(7), a(7)));
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(atom_eq(a(i), a(j)), atom_eq(a(j), a(i)));
                for k in 0..6 {
                    if atom_eq(a(i), a(j)) && atom_eq(a(j), a(k)) {
                        assert!(atom_eq(a(i), a(k)));
                    }
                }
            }
        }
    }

    #[test]
    fn fresh_policy() {
        assert_eq!(fresh_atom(&[]), a(0));

        let avoid = [a(0), a(2), a(5)];
        let z = fresh_atom(&avoid);
        assert_eq!(z, a(6));
        assert!(!avoid.contains(&z));

        let avoid = [a(1), a(1), a(0)];
        let z = fresh_atom(&avoid);
        assert_eq!(z, a(2));
        assert!(!avoid.contains(&z));
    }

    #[test]
    fn display() {
        assert_eq!(a(4).to_string(), "_4");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn fresh_is_outside(ixs in prop::collection::vec(0u32..1000, 0..20)) {
                let avoid: Vec<Atom> = ixs.into_iter().map(Atom::new).collect();
                prop_assert!(!avoid.contains(&fresh_atom(&avoid)));
            }

            #[test]
            fn fresh_ignores_order(ixs in prop::collection::vec(0u32..1000, 0..20)) {
                let avoid: Vec<Atom> = ixs.into_iter().map(Atom::new).collect();
                let mut shuffled = avoid.clone();
                shuffled.reverse();
                shuffled.sort_by_key(|a| a.index() % 7);
                prop_assert_eq!(fresh_atom(&avoid), fresh_atom(&shuffled));
            }
        }
    }
}
