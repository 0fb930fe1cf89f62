//! Property harness for the four swapping laws.
//!
//! Failures are reported as data: each law records how many instances were
//! checked and the first counterexample found.

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::atom::Atom;
use crate::swap::{swap_atom, Swap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Law {
    /// `swap(a, a, x) = x`
    SwapId,
    /// `swap(a, b, x) = swap(b, a, x)`
    SwapRev,
    /// `swap(a, b, swap(b, a, x)) = x`
    SwapSym,
    /// `swap(a, b, swap(c, d, x)) = swap((a b)c, (a b)d, swap(a, b, x))`
    SwapSwap,
}

impl Law {
    pub const ALL: [Law; 4] = [Law::SwapId, Law::SwapRev, Law::SwapSym, Law::SwapSwap];

    pub fn name(self) -> &'static str {
        match self {
            Law::SwapId => "swap-id",
            Law::SwapRev => "swap-rev",
            Law::SwapSym => "swap-sym",
            Law::SwapSwap => "swap-swap",
        }
    }

    fn holds<T, E>(self, [a, b, c, d]: [Atom; 4], x: &T, eq: &E) -> bool
    where
        T: Swap,
        E: Fn(&T, &T) -> bool,
    {
        match self {
            Law::SwapId => eq(&x.swap(a, a), x),
            Law::SwapRev => eq(&x.swap(a, b), &x.swap(b, a)),
            Law::SwapSym => eq(&x.swap(b, a).swap(a, b), x),
            Law::SwapSwap => {
                let lhs = x.swap(c, d).swap(a, b);
                let rhs = x.swap(a, b).swap(swap_atom(a, b, c), swap_atom(a, b, d));
                eq(&lhs, &rhs)
            }
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The atoms and printed value at which a law failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub atoms: [Atom; 4],
    pub value: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.atoms;
        write!(f, "a={a} b={b} c={c} d={d} x={}", self.value)
    }
}

/// One line of a report: a named check with its verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawLine {
    pub name: String,
    pub checked: usize,
    pub counterexample: Option<String>,
}

impl LawLine {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for LawLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "LAW {} PASS", self.name),
            Some(c) => write!(f, "LAW {} FAIL counterexample: {c}", self.name),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawOutcome {
    pub law: Law,
    pub checked: usize,
    pub counterexample: Option<Counterexample>,
}

impl LawOutcome {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawReport {
    pub outcomes: [LawOutcome; 4],
}

impl LawReport {
    fn new() -> Self {
        LawReport {
            outcomes: Law::ALL.map(|law| LawOutcome {
                law,
                checked: 0,
                counterexample: None,
            }),
        }
    }

    pub fn get(&self, law: Law) -> &LawOutcome {
        &self.outcomes[law as usize]
    }

    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(LawOutcome::passed)
    }

    /// Report lines with each law name prefixed by `carrier` (if nonempty).
    pub fn lines(&self, carrier: &str) -> Vec<LawLine> {
        self.outcomes
            .iter()
            .map(|o| LawLine {
                name: if carrier.is_empty() {
                    o.law.name().to_string()
                } else {
                    format!("{carrier}.{}", o.law.name())
                },
                checked: o.checked,
                counterexample: o.counterexample.as_ref().map(ToString::to_string),
            })
            .collect()
    }

    fn record<T, E>(&mut self, atoms: [Atom; 4], x: &T, eq: &E)
    where
        T: Swap + fmt::Display,
        E: Fn(&T, &T) -> bool,
    {
        for outcome in &mut self.outcomes {
            outcome.checked += 1;
            if outcome.counterexample.is_none() && !outcome.law.holds(atoms, x, eq) {
                outcome.counterexample = Some(Counterexample {
                    atoms,
                    value: x.to_string(),
                });
            }
        }
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in self.lines("") {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

/// Checks every law at every `(a, b, c, d, x)` with atoms from `atoms` and
/// `x` from `values`.
pub fn check_swap_laws_exhaustive<T, E>(atoms: &[Atom], values: &[T], eq: E) -> LawReport
where
    T: Swap + fmt::Display,
    E: Fn(&T, &T) -> bool,
{
    let mut report = LawReport::new();
    for &a in atoms {
        for &b in atoms {
            for &c in atoms {
                for &d in atoms {
                    for x in values {
                        report.record([a, b, c, d], x, &eq);
                    }
                }
            }
        }
    }
    report
}

/// Checks every law on `trials` random instances: values from `gen`, atoms
/// drawn from `atoms`.
pub fn check_swap_laws<T, G, E, R>(
    mut gen: G,
    atoms: &[Atom],
    eq: E,
    trials: usize,
    rng: &mut R,
) -> LawReport
where
    T: Swap + fmt::Display,
    G: FnMut(&mut R) -> T,
    E: Fn(&T, &T) -> bool,
    R: Rng,
{
    assert!(!atoms.is_empty(), "atom pool must be nonempty");
    let mut report = LawReport::new();
    for _ in 0..trials {
        let x = gen(rng);
        let pick = |rng: &mut R| *atoms.choose(rng).unwrap();
        let tuple = [pick(rng), pick(rng), pick(rng), pick(rng)];
        report.record(tuple, &x, &eq);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn atoms(n: u32) -> Vec<Atom> {
        (0..n).map(Atom::new).collect()
    }

    #[derive(Clone, Copy, PartialEq, Eq, Debug)]
    struct Frozen(Atom);

    impl Swap for Frozen {
        fn swap(&self, _: Atom, _: Atom) -> Self {
            *self
        }
    }

    impl fmt::Display for Frozen {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            self.0.fmt(f)
        }
    }

    /// Only maps `a` to `b`; never `b` back to `a`.
    #[derive(Clone, Copy, PartialEq, Eq, Debug)]
    struct HalfSwap(Atom);

    impl Swap for HalfSwap {
        fn swap(&self, a: Atom, b: Atom) -> Self {
            HalfSwap(if self.0 == a { b } else { self.0 })
        }
    }

    impl fmt::Display for HalfSwap {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            self.0.fmt(f)
        }
    }

    #[test]
    fn atom_instance_exhaustive() {
        let pool = atoms(4);
        let report = check_swap_laws_exhaustive(&pool, &pool, |x, y| x == y);
        assert!(report.all_passed(), "{report}");
        for o in &report.outcomes {
            assert_eq!(o.checked, 4usize.pow(4) * 4);
        }
    }

    #[test]
    fn identity_action_is_lawful() {
        let pool = atoms(4);
        let values: Vec<Frozen> = pool.iter().copied().map(Frozen).collect();
        let report = check_swap_laws_exhaustive(&pool, &values, |x, y| x == y);
        assert!(report.all_passed(), "{report}");
    }

    #[test]
    fn half_swap_is_caught() {
        let pool = atoms(4);
        let values: Vec<HalfSwap> = pool.iter().copied().map(HalfSwap).collect();
        let report = check_swap_laws_exhaustive(&pool, &values, |x, y| x == y);
        assert!(report.get(Law::SwapId).passed());
        assert!(!report.get(Law::SwapRev).passed());
        assert!(!report.get(Law::SwapSym).passed());
        assert!(!report.get(Law::SwapSwap).passed());

        // first failure in iteration order: a=0, b=1, x=0
        let ce = report.get(Law::SwapRev).counterexample.as_ref().unwrap();
        assert_eq!(ce.atoms[..2], [Atom::new(0), Atom::new(1)]);
        assert_eq!(ce.value, "_0");
        // swap(b, a, x) leaves 0 alone, then swap(a, b, _) sends 0 to 1
        let ce = report.get(Law::SwapSym).counterexample.as_ref().unwrap();
        assert_eq!(ce.atoms[..2], [Atom::new(0), Atom::new(1)]);
        assert_eq!(ce.value, "_0");
    }

    #[test]
    fn report_lines() {
        let pool = atoms(2);
        let values: Vec<HalfSwap> = pool.iter().copied().map(HalfSwap).collect();
        let report = check_swap_laws_exhaustive(&pool, &values, |x, y| x == y);
        let lines: Vec<String> = report
            .lines("half")
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(lines[0], "LAW half.swap-id PASS");
        assert!(lines[1].starts_with("LAW half.swap-rev FAIL counterexample: a=_0 b=_1"));
    }

    #[test]
    fn sampled_is_reproducible() {
        let pool = atoms(4);
        let run = || {
            let mut rng = ChaCha8Rng::seed_from_u64(11);
            check_swap_laws(
                |r: &mut ChaCha8Rng| HalfSwap(Atom::new(r.gen_range(0..4))),
                &pool,
                |x, y| x == y,
                200,
                &mut rng,
            )
        };
        let one = run();
        assert_eq!(one, run());
        assert!(!one.get(Law::SwapRev).passed());
        assert_eq!(one.get(Law::SwapId).checked, 200);
    }
}
