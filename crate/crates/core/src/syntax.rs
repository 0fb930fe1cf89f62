//! Concrete syntax for terms: name interning, parsing and printing.
//!
//! ```text
//! term  := lam | app
//! lam   := ("\" | "λ") ident+ "." term
//! app   := atom atom*
//! atom  := ident | "(" term ")"
//! ident := [A-Za-z][A-Za-z0-9_']*
//! ```

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::atom::Atom;
use crate::lambda::Term;

/// Bidirectional map between identifiers and atoms.
#[derive(Clone, Debug, Default)]
pub struct NameTable {
    by_name: HashMap<String, Atom>,
    names: Vec<String>,
}

impl NameTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// The atom for `name`, allocating the next index on first use.
    pub fn intern(&mut self, name: &str) -> Atom {
        if let Some(&a) = self.by_name.get(name) {
            return a;
        }
        let a = Atom::new(self.names.len() as u32);
        self.names.push(name.to_string());
        self.by_name.insert(name.to_string(), a);
        a
    }

    pub fn lookup(&self, name: &str) -> Option<Atom> {
        self.by_name.get(name).copied()
    }

    pub fn name_of(&self, a: Atom) -> Option<&str> {
        self.names.get(a.index() as usize).map(String::as_str)
    }

    /// The name of `a`, or `_<index>` for atoms the table never issued.
    pub fn display(&self, a: Atom) -> String {
        match self.name_of(a) {
            Some(n) => n.to_string(),
            None => a.to_string(),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{line}:{column}: reserved token `{token}` cannot be used as an identifier")]
    Reserved {
        line: usize,
        column: usize,
        token: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Lambda,
    Dot,
    LParen,
    RParen,
    Ident(String),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Lambda => f.write_str("\\"),
            Tok::Dot => f.write_str("."),
            Tok::LParen => f.write_str("("),
            Tok::RParen => f.write_str(")"),
            Tok::Ident(s) => f.write_str(s),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(src: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        let single = match c {
            '\\' | 'λ' => Some(Tok::Lambda),
            '.' => Some(Tok::Dot),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = single {
            chars.next();
            column += 1;
            out.push(Spanned {
                tok,
                line: l,
                column: col,
            });
        } else if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
        } else if c.is_whitespace() {
            chars.next();
            column += 1;
        } else if c.is_ascii_alphabetic() {
            let mut ident = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' || c == '\'' {
                    ident.push(c);
                    chars.next();
                    column += 1;
                } else {
                    break;
                }
            }
            out.push(Spanned {
                tok: Tok::Ident(ident),
                line: l,
                column: col,
            });
        } else {
            return Err(ParseError::Syntax {
                line: l,
                column: col,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Spanned>,
    pos: usize,
    names: &'a mut NameTable,
}

impl Parser<'_> {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, expected: &str) -> ParseError {
        let t = self.peek();
        ParseError::Syntax {
            line: t.line,
            column: t.column,
            message: format!("expected {expected}, found `{}`", t.tok),
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        if self.peek().tok == Tok::Lambda {
            self.lam()
        } else {
            self.app()
        }
    }

    fn binder(&mut self) -> Result<Atom, ParseError> {
        let t = self.bump();
        match t.tok {
            Tok::Ident(name) => Ok(self.names.intern(&name)),
            Tok::Eof => Err(ParseError::Syntax {
                line: t.line,
                column: t.column,
                message: "expected a binder, found end of input".into(),
            }),
            tok => Err(ParseError::Reserved {
                line: t.line,
                column: t.column,
                token: tok.to_string(),
            }),
        }
    }

    fn lam(&mut self) -> Result<Term, ParseError> {
        self.bump();
        let mut binders = vec![self.binder()?];
        while self.peek().tok != Tok::Dot {
            binders.push(self.binder()?);
        }
        self.bump();
        let body = self.term()?;
        Ok(binders
            .into_iter()
            .rev()
            .fold(body, |acc, b| Term::lam(b, acc)))
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek().tok, Tok::Ident(_) | Tok::LParen)
    }

    fn app(&mut self) -> Result<Term, ParseError> {
        if !self.starts_atom() {
            return Err(self.unexpected("a term"));
        }
        let mut t = self.atom()?;
        while self.starts_atom() {
            let arg = self.atom()?;
            t = Term::app(t, arg);
        }
        Ok(t)
    }

    fn atom(&mut self) -> Result<Term, ParseError> {
        let t = self.bump();
        match t.tok {
            Tok::Ident(name) => Ok(Term::Var(self.names.intern(&name))),
            Tok::LParen => {
                let inner = self.term()?;
                if self.peek().tok != Tok::RParen {
                    return Err(self.unexpected("`)`"));
                }
                self.bump();
                Ok(inner)
            }
            _ => unreachable!("caller checked starts_atom"),
        }
    }
}

/// Parses `src`, interning every identifier (free or bound) in `names`.
pub fn parse_term(src: &str, names: &mut NameTable) -> Result<Term, ParseError> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        names,
    };
    let t = p.term()?;
    if p.peek().tok != Tok::Eof {
        return Err(p.unexpected("end of input"));
    }
    Ok(t)
}

/// Parses a bare identifier, as taken by `subst` and `swap`.
pub fn parse_ident(src: &str, names: &mut NameTable) -> Result<Atom, ParseError> {
    let toks = lex(src)?;
    match toks.as_slice() {
        [Spanned {
            tok: Tok::Ident(name),
            ..
        }, Spanned { tok: Tok::Eof, .. }] => Ok(names.intern(name)),
        [Spanned {
            tok: Tok::Eof,
            line,
            column,
        }] => Err(ParseError::Syntax {
            line: *line,
            column: *column,
            message: "expected an identifier, found end of input".into(),
        }),
        [Spanned {
            tok: Tok::Ident(_), ..
        }, next, ..] => Err(ParseError::Syntax {
            line: next.line,
            column: next.column,
            message: format!("expected end of input, found `{}`", next.tok),
        }),
        [first, ..] => Err(ParseError::Reserved {
            line: first.line,
            column: first.column,
            token: first.tok.to_string(),
        }),
        [] => unreachable!("lexer always emits Eof"),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Position {
    Top,
    Fun,
    Arg,
}

/// Writes `t` with minimal parentheses, naming atoms with `name`.
pub fn write_term(f: &mut dyn fmt::Write, t: &Term, name: &dyn Fn(Atom) -> String) -> fmt::Result {
    fn go(
        f: &mut dyn fmt::Write,
        t: &Term,
        pos: Position,
        name: &dyn Fn(Atom) -> String,
    ) -> fmt::Result {
        match t {
            Term::Var(a) => f.write_str(&name(*a)),
            Term::App(l, r) => {
                let parens = pos == Position::Arg;
                if parens {
                    f.write_char('(')?;
                }
                go(f, l, Position::Fun, name)?;
                f.write_char(' ')?;
                go(f, r, Position::Arg, name)?;
                if parens {
                    f.write_char(')')?;
                }
                Ok(())
            }
            Term::Lam(abs) => {
                let parens = pos != Position::Top;
                if parens {
                    f.write_char('(')?;
                }
                write!(f, "\\{}. ", name(abs.binder))?;
                go(f, &abs.body, Position::Top, name)?;
                if parens {
                    f.write_char(')')?;
                }
                Ok(())
            }
        }
    }
    go(f, t, Position::Top, name)
}

pub fn print_term(t: &Term, names: &NameTable) -> String {
    let mut out = String::new();
    write_term(&mut out, t, &|a| names.display(a)).expect("writing to a String");
    out
}

/// Source text together with the term it denotes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SourceTerm {
    pub source: String,
    pub term: Term,
}

impl SourceTerm {
    pub fn parse(source: &str, names: &mut NameTable) -> Result<Self, ParseError> {
        Ok(SourceTerm {
            source: source.to_string(),
            term: parse_term(source, names)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(src: &str) -> (Term, NameTable) {
        let mut names = NameTable::new();
        let t = parse_term(src, &mut names).unwrap();
        (t, names)
    }

    #[test]
    fn interning() {
        let mut names = NameTable::new();
        let x = names.intern("x");
        let y = names.intern("y");
        assert_eq!(names.intern("x"), x);
        assert_ne!(x, y);
        assert_eq!(names.name_of(y), Some("y"));
        assert_eq!(names.display(Atom::new(9)), "_9");
        assert_eq!(names.lookup("y"), Some(y));
        assert_eq!(names.len(), 2);
    }

    #[test]
    fn parse_examples() {
        let (t, n) = parse("\\x. x");
        let x = n.lookup("x").unwrap();
        assert_eq!(t, Term::lam(x, Term::var(x)));

        let (t, n) = parse("\\x y. x");
        let (x, y) = (n.lookup("x").unwrap(), n.lookup("y").unwrap());
        assert_eq!(t, Term::lam(x, Term::lam(y, Term::var(x))));

        let (t, n) = parse("f x y");
        let [f, x, y] = ["f", "x", "y"].map(|s| n.lookup(s).unwrap());
        assert_eq!(
            t,
            Term::app(Term::app(Term::var(f), Term::var(x)), Term::var(y))
        );
    }

    #[test]
    fn unicode_lambda_and_primes() {
        let (t, n) = parse("λx'. x' y_1");
        let (x, y) = (n.lookup("x'").unwrap(), n.lookup("y_1").unwrap());
        assert_eq!(t, Term::lam(x, Term::app(Term::var(x), Term::var(y))));
    }

    #[test]
    fn parse_errors() {
        let mut names = NameTable::new();
        assert!(matches!(
            parse_term("\\. x", &mut names),
            Err(ParseError::Reserved {
                line: 1,
                column: 2,
                ..
            })
        ));
        assert!(matches!(
            parse_term("\\x (. x", &mut names),
            Err(ParseError::Reserved { .. })
        ));
        assert!(matches!(
            parse_term("(x y", &mut names),
            Err(ParseError::Syntax {
                line: 1,
                column: 5,
                ..
            })
        ));
        assert!(matches!(
            parse_term("x\n  )", &mut names),
            Err(ParseError::Syntax {
                line: 2,
                column: 3,
                ..
            })
        ));
        assert!(matches!(
            parse_term("", &mut names),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_term("x $", &mut names),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_term("1x", &mut names),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_term("\\x", &mut names),
            Err(ParseError::Syntax { .. })
        ));
    }

    #[test]
    fn identifiers() {
        let mut names = NameTable::new();
        let x = parse_ident(" x ", &mut names).unwrap();
        assert_eq!(names.name_of(x), Some("x"));
        assert!(matches!(
            parse_ident("(x)", &mut names),
            Err(ParseError::Reserved { .. })
        ));
        assert!(matches!(
            parse_ident("x y", &mut names),
            Err(ParseError::Syntax { column: 3, .. })
        ));
        assert!(matches!(
            parse_ident("", &mut names),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_ident(".", &mut names),
            Err(ParseError::Reserved { .. })
        ));
    }

    #[test]
    fn print_examples() {
        let mut n = NameTable::new();
        let [f, x, y] = ["f", "x", "y"].map(|s| n.intern(s));
        assert_eq!(print_term(&Term::lam(x, Term::var(x)), &n), "\\x. x");
        assert_eq!(
            print_term(
                &Term::app(Term::app(Term::var(f), Term::var(x)), Term::var(y)),
                &n
            ),
            "f x y"
        );
        assert_eq!(
            print_term(
                &Term::app(Term::var(f), Term::app(Term::var(x), Term::var(y))),
                &n
            ),
            "f (x y)"
        );
        let id = Term::lam(x, Term::var(x));
        assert_eq!(
            print_term(&Term::app(id.clone(), Term::var(y)), &n),
            "(\\x. x) y"
        );
        assert_eq!(
            print_term(&Term::app(Term::var(y), id.clone()), &n),
            "y (\\x. x)"
        );
        assert_eq!(
            print_term(&Term::lam(Atom::new(7), Term::var(y)), &n),
            "\\_7. y"
        );
    }

    #[test]
    fn round_trip_enumerated() {
        let mut names = NameTable::new();
        let atoms = [names.intern("x"), names.intern("y")];
        for t in crate::lambda::enumerate_terms(&atoms, 5) {
            let printed = print_term(&t, &names);
            let back = parse_term(&printed, &mut names).unwrap();
            assert_eq!(back, t, "{printed}");
        }
        assert_eq!(names.len(), 2);
    }
}
