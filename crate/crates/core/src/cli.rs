//! The `nominal` command line.
//!
//! Exit codes: 0 success (or `EQUIV`), 1 `NOT-EQUIV` or a failed law,
//! 2 normalization out of fuel, 64 usage or parse error.

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::check::{law_suite, SuiteConfig};
use crate::lambda::{alpha_eq, normalize, subst, Normalization};
use crate::swap::Swap;
use crate::syntax::{parse_ident, parse_term, print_term, NameTable, ParseError};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_OUT_OF_FUEL: u8 = 2;
pub const EXIT_USAGE: u8 = 64;

#[derive(Parser, Debug)]
#[command(name = "nominal", about = "Nominal λ-calculus toolkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide α-equivalence of two terms.
    AlphaEq { left: String, right: String },
    /// Capture-avoiding substitution TERM[VAR := REPLACEMENT].
    Subst {
        term: String,
        var: String,
        replacement: String,
    },
    /// Leftmost-outermost β-normalization.
    Normalize {
        term: String,
        #[arg(long, default_value_t = 1000)]
        max_steps: usize,
    },
    /// Free variables, in interning order.
    Supp { term: String },
    /// Exchange two names everywhere in a term.
    Swap { a: String, b: String, term: String },
    /// Run the swapping-law and oracle property suite.
    CheckLaws {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..=64))]
        size: u32,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
    },
}

enum Failure {
    Parse(ParseError),
    Io(std::io::Error),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Parse(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Runs one command line (including the program name) and returns its exit
/// code. Results go to `out`, diagnostics to `err`.
pub fn run_command<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Parse(e)) => {
            let _ = writeln!(err, "nominal: parse error: {e}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "nominal: {e}");
            EXIT_NEGATIVE
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<u8, Failure> {
    let mut names = NameTable::new();
    match command {
        Command::AlphaEq { left, right } => {
            let s = parse_term(&left, &mut names)?;
            let t = parse_term(&right, &mut names)?;
            if alpha_eq(&s, &t).verdict {
                writeln!(out, "EQUIV")?;
                Ok(EXIT_OK)
            } else {
                writeln!(out, "NOT-EQUIV")?;
                Ok(EXIT_NEGATIVE)
            }
        }
        Command::Subst {
            term,
            var,
            replacement,
        } => {
            let t = parse_term(&term, &mut names)?;
            let a = parse_ident(&var, &mut names)?;
            let n = parse_term(&replacement, &mut names)?;
            writeln!(out, "{}", print_term(&subst(&t, a, &n), &names))?;
            Ok(EXIT_OK)
        }
        Command::Normalize { term, max_steps } => {
            let t = parse_term(&term, &mut names)?;
            match normalize(&t, max_steps) {
                Normalization::NormalForm { term, .. } => {
                    writeln!(out, "{}", print_term(&term, &names))?;
                    Ok(EXIT_OK)
                }
                Normalization::OutOfFuel(term) => {
                    writeln!(out, "OUT-OF-FUEL {}", print_term(&term, &names))?;
                    Ok(EXIT_OUT_OF_FUEL)
                }
            }
        }
        Command::Supp { term } => {
            let t = parse_term(&term, &mut names)?;
            let free: Vec<String> = t
                .free_atoms()
                .into_iter()
                .map(|a| names.display(a))
                .collect();
            writeln!(out, "{}", free.join(" "))?;
            Ok(EXIT_OK)
        }
        Command::Swap { a, b, term } => {
            let a = parse_ident(&a, &mut names)?;
            let b = parse_ident(&b, &mut names)?;
            let t = parse_term(&term, &mut names)?;
            writeln!(out, "{}", print_term(&t.swap(a, b), &names))?;
            Ok(EXIT_OK)
        }
        Command::CheckLaws { seed, size, trials } => {
            let lines = law_suite(&SuiteConfig {
                seed,
                size: size as usize,
                trials,
            });
            for line in &lines {
                writeln!(out, "{line}")?;
            }
            Ok(if lines.iter().all(|l| l.passed()) {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (u8, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("nominal").chain(args.iter().copied());
        let code = run_command(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn alpha_eq_command() {
        assert_eq!(run(&["alpha-eq", "\\x. x", "\\y. y"]).0, 0);
        let (code, out, _) = run(&["alpha-eq", "\\x. x", "\\y. x"]);
        assert_eq!((code, out.as_str()), (1, "NOT-EQUIV\n"));
    }

    #[test]
    fn subst_binders_print_as_indices() {
        // names: y=0, x=1; fresh binder is 2
        let (code, out, _) = run(&["subst", "\\y. x", "x", "y"]);
        assert_eq!((code, out.as_str()), (0, "\\_2. y\n"));
    }

    #[test]
    fn usage_errors() {
        let (code, out, err) = run(&["alpha-eq", "\\x. x"]);
        assert_eq!(code, 64);
        assert!(out.is_empty());
        assert!(!err.is_empty());
        assert_eq!(run(&["frobnicate"]).0, 64);
        assert_eq!(run(&[]).0, 64);
        let (code, _, err) = run(&["supp", "(x"]);
        assert_eq!(code, 64);
        assert!(err.contains("1:3"), "{err}");
        assert_eq!(run(&["subst", "x", "\\y. y", "z"]).0, 64);
        assert_eq!(run(&["check-laws", "--size", "0"]).0, 64);
    }

    #[test]
    fn help_goes_to_stdout() {
        let (code, out, _) = run(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("check-laws"));
    }
}
