//! Executable property checks for terms, and the seeded suite behind
//! `nominal check-laws`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::abs::Abs;
use crate::atom::Atom;
use crate::debruijn::{db_normalize, db_subst, to_db, DbNormalization};
use crate::lambda::{alpha_equivalent, normalize, subst, Normalization, Term};
use crate::laws::{check_swap_laws, check_swap_laws_exhaustive, LawLine};
use crate::swap::{swap_atom, FinSupp, Swap};

/// Swapping `a` and `b` in `t` equals rebuilding `t`'s outermost constructor
/// from its swapped components.
pub fn swap_distributes(t: &Term, a: Atom, b: Atom) -> bool {
    let swapped = t.swap(a, b);
    let rebuilt = match t {
        Term::Var(z) => Term::Var(swap_atom(a, b, *z)),
        Term::App(l, r) => Term::app(l.swap(a, b), r.swap(a, b)),
        Term::Lam(f) => Term::Lam(Box::new(Abs::new(
            swap_atom(a, b, f.binder),
            f.body.swap(a, b),
        ))),
    };
    swapped == rebuilt
}

/// Concretion commutes with swapping:
/// `conc(swap(a, b, f), (a b)c) = swap(a, b, conc(f, c))`.
pub fn conc_equivariant(f: &Abs<Term>, a: Atom, b: Atom, c: Atom) -> bool {
    f.swap(a, b).conc(swap_atom(a, b, c)) == f.conc(c).swap(a, b)
}

pub fn alpha_agrees_with_oracle(s: &Term, t: &Term) -> bool {
    alpha_equivalent(s, t) == (to_db(s) == to_db(t))
}

pub fn subst_agrees_with_oracle(t: &Term, a: Atom, n: &Term) -> bool {
    to_db(&subst(t, a, n)) == db_subst(&to_db(t), a, &to_db(n))
}

/// Both normalizers reach corresponding normal forms, or both run out of fuel.
pub fn normalize_agrees_with_oracle(t: &Term, fuel: usize) -> bool {
    match (normalize(t, fuel), db_normalize(&to_db(t), fuel)) {
        (Normalization::NormalForm { term, .. }, DbNormalization::NormalForm { term: db, .. }) => {
            to_db(&term) == db
        }
        (Normalization::OutOfFuel(_), DbNormalization::OutOfFuel(_)) => true,
        _ => false,
    }
}

/// A random term of at most `max_size` nodes over `atoms`.
pub fn random_term<R: Rng>(rng: &mut R, atoms: &[Atom], max_size: usize) -> Term {
    fn exact<R: Rng>(rng: &mut R, atoms: &[Atom], size: u32) -> Term {
        match size {
            1 => Term::Var(*atoms.choose(rng).unwrap()),
            2 => Term::lam(*atoms.choose(rng).unwrap(), exact(rng, atoms, 1)),
            _ => {
                if rng.gen_bool(0.5) {
                    Term::lam(*atoms.choose(rng).unwrap(), exact(rng, atoms, size - 1))
                } else {
                    let left = rng.gen_range(1..size - 1);
                    Term::app(exact(rng, atoms, left), exact(rng, atoms, size - 1 - left))
                }
            }
        }
    }
    assert!(max_size >= 1 && !atoms.is_empty());
    let size = rng.gen_range(1..=max_size as u32);
    exact(rng, atoms, size)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Largest term size sampled.
    pub size: usize,
    pub trials: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            size: 4,
            trials: 1000,
        }
    }
}

const NORMALIZE_FUEL: usize = 200;
const SUPPORT_SAMPLES: usize = 5;

fn line(name: &str, checked: usize, counterexample: Option<String>) -> LawLine {
    LawLine {
        name: name.to_string(),
        checked,
        counterexample,
    }
}

/// Runs every check; identical configurations give identical reports.
pub fn law_suite(cfg: &SuiteConfig) -> Vec<LawLine> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let atom_pool: Vec<Atom> = (0..4).map(Atom::new).collect();
    let term_atoms = &atom_pool[..3];
    let mut lines = Vec::new();

    let atom_report = check_swap_laws_exhaustive(&atom_pool, &atom_pool, |x, y| x == y);
    lines.extend(atom_report.lines("atom"));

    let size = cfg.size;
    let term_report = check_swap_laws(
        |r: &mut ChaCha8Rng| random_term(r, term_atoms, size),
        &atom_pool,
        |x, y| x == y,
        cfg.trials,
        &mut rng,
    );
    lines.extend(term_report.lines("term"));

    let pick = |rng: &mut ChaCha8Rng| *atom_pool.choose(rng).unwrap();

    let mut fail = None;
    for _ in 0..cfg.trials {
        let t = random_term(&mut rng, term_atoms, size);
        let (a, b) = (pick(&mut rng), pick(&mut rng));
        if fail.is_none() && !swap_distributes(&t, a, b) {
            fail = Some(format!("a={a} b={b} x={t}"));
        }
    }
    lines.push(line("term.distributivity", cfg.trials, fail));

    let mut structural = None;
    let mut alpha = None;
    for _ in 0..cfg.trials {
        let t = random_term(&mut rng, term_atoms, size);
        let seed = rng.gen();
        let w = FinSupp::new(t.clone(), t.all_atoms());
        if structural.is_none() {
            if let Some((a, b)) = w.violation(|x, y| x == y, SUPPORT_SAMPLES, seed) {
                structural = Some(format!("a={a} b={b} x={t}"));
            }
        }
        let w = FinSupp::new(t.clone(), t.free_atoms());
        if alpha.is_none() {
            if let Some((a, b)) = w.violation(alpha_equivalent, SUPPORT_SAMPLES, seed) {
                alpha = Some(format!("a={a} b={b} x={t}"));
            }
        }
    }
    lines.push(line("term.finsupp-structural", cfg.trials, structural));
    lines.push(line("term.finsupp-alpha", cfg.trials, alpha));

    let mut fail = None;
    for _ in 0..cfg.trials {
        let binder = pick(&mut rng);
        let body = random_term(&mut rng, term_atoms, size);
        let f = Abs::new(binder, body);
        let (a, b, c) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        if fail.is_none() && !conc_equivariant(&f, a, b, c) {
            fail = Some(format!("a={a} b={b} c={c} x={}", Term::Lam(Box::new(f))));
        }
    }
    lines.push(line("abs.conc-equivariance", cfg.trials, fail));

    let mut fail = None;
    for _ in 0..cfg.trials {
        let s = random_term(&mut rng, term_atoms, size);
        // half the pairs are α-variants, so both verdicts get exercised
        let t = if rng.gen_bool(0.5) {
            random_term(&mut rng, term_atoms, size)
        } else {
            let fresh = Atom::new(rng.gen_range(4..8));
            rename_bound(&s, fresh)
        };
        if fail.is_none() && !alpha_agrees_with_oracle(&s, &t) {
            fail = Some(format!("s={s} t={t}"));
        }
    }
    lines.push(line("oracle.alpha-eq", cfg.trials, fail));

    let mut fail = None;
    for _ in 0..cfg.trials {
        let t = random_term(&mut rng, term_atoms, size);
        let a = *term_atoms.choose(&mut rng).unwrap();
        let n = random_term(&mut rng, term_atoms, size);
        if fail.is_none() && !subst_agrees_with_oracle(&t, a, &n) {
            fail = Some(format!("t={t} a={a} n={n}"));
        }
    }
    lines.push(line("oracle.subst", cfg.trials, fail));

    let mut fail = None;
    for _ in 0..cfg.trials {
        let t = random_term(&mut rng, term_atoms, size);
        if fail.is_none() && !normalize_agrees_with_oracle(&t, NORMALIZE_FUEL) {
            fail = Some(format!("t={t}"));
        }
    }
    lines.push(line("oracle.normalize", cfg.trials, fail));

    lines
}

/// Renames the outermost binder encountered on each branch to `fresh`
/// (assumed not to occur in `t`), producing an α-variant.
fn rename_bound(t: &Term, fresh: Atom) -> Term {
    match t {
        Term::Var(_) => t.clone(),
        Term::App(l, r) => Term::app(rename_bound(l, fresh), rename_bound(r, fresh)),
        Term::Lam(f) => Term::lam(fresh, f.conc(fresh)),
    }
}
