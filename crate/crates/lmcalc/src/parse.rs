//! Parser for the ASCII concrete syntax.
//!
//! ```text
//! term    ::= \x[:T]. term | mu 'a[:T]. command | term term | term[x \ term] | x | (term)
//! command ::= ['a] term | command['b/'a[:T] \ stack] | (command)
//! stack   ::= # | term . stack
//! type    ::= ident | type -> type | (type)
//! ```
//! `λ` and `μ` are accepted in place of `\` and `mu`.

use crate::syntax::{Command, Name, Object, Stack, Term, Type, Var};
use crate::Error;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Name(String),
    Lambda,
    Mu,
    Dot,
    Colon,
    Arrow,
    LParen,
    RParen,
    LBrack,
    RBrack,
    Slash,
    Backslash,
    Hash,
    Comma,
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, Error> {
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '.' => Some(Tok::Dot),
            ':' => Some(Tok::Colon),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '[' => Some(Tok::LBrack),
            ']' => Some(Tok::RBrack),
            '/' => Some(Tok::Slash),
            '#' => Some(Tok::Hash),
            ',' => Some(Tok::Comma),
            '\u{3bb}' => Some(Tok::Lambda),
            '\u{3bc}' => Some(Tok::Mu),
            '\u{2192}' => Some(Tok::Arrow),
            _ => None,
        };
        if let Some(t) = single {
            out.push((t, pos));
            i += 1;
            continue;
        }
        if c == '\\' {
            // Inside brackets `\` separates; elsewhere it introduces a
            // lambda. The parser disambiguates by context.
            out.push((Tok::Backslash, pos));
            i += 1;
            continue;
        }
        if c == '-' && i + 1 < chars.len() && chars[i + 1].1 == '>' {
            out.push((Tok::Arrow, pos));
            i += 2;
            continue;
        }
        if c == '\'' {
            let mut j = i + 1;
            let mut s = String::new();
            while j < chars.len() && is_ident_char(chars[j].1) {
                s.push(chars[j].1);
                j += 1;
            }
            if s.is_empty() {
                return Err(Error::Parse {
                    pos,
                    msg: "expected a name after '".into(),
                });
            }
            out.push((Tok::Name(s), pos));
            i = j;
            continue;
        }
        if is_ident_start(c) {
            let mut j = i;
            let mut s = String::new();
            while j < chars.len() && is_ident_char(chars[j].1) {
                s.push(chars[j].1);
                j += 1;
            }
            if s == "mu" {
                out.push((Tok::Mu, pos));
            } else {
                out.push((Tok::Ident(s), pos));
            }
            i = j;
            continue;
        }
        return Err(Error::Parse {
            pos,
            msg: format!("unexpected character {:?}", c),
        });
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    i: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|(t, _)| t)
    }

    fn peek2(&self) -> Option<&Tok> {
        self.toks.get(self.i + 1).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, Error> {
        Err(Error::Parse {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expect(&mut self, t: Tok) -> Result<(), Error> {
        if self.peek() == Some(&t) {
            self.i += 1;
            Ok(())
        } else {
            self.err(format!("expected {:?}, found {:?}", t, self.peek()))
        }
    }

    fn ident(&mut self) -> Result<String, Error> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.i += 1;
                Ok(s)
            }
            other => self.err(format!("expected a variable, found {:?}", other)),
        }
    }

    fn name(&mut self) -> Result<Name, Error> {
        match self.peek() {
            Some(Tok::Name(s)) => {
                let s = Name::new(s);
                self.i += 1;
                Ok(s)
            }
            other => self.err(format!("expected a name, found {:?}", other)),
        }
    }

    fn ty(&mut self) -> Result<Type, Error> {
        let a = self.ty_atom()?;
        if self.peek() == Some(&Tok::Arrow) {
            self.i += 1;
            let b = self.ty()?;
            Ok(Type::arrow(a, b))
        } else {
            Ok(a)
        }
    }

    fn ty_atom(&mut self) -> Result<Type, Error> {
        match self.peek() {
            Some(Tok::LParen) => {
                self.i += 1;
                let t = self.ty()?;
                self.expect(Tok::RParen)?;
                Ok(t)
            }
            Some(Tok::Ident(s)) => {
                let t = Type::base(s);
                self.i += 1;
                Ok(t)
            }
            other => self.err(format!("expected a type, found {:?}", other)),
        }
    }

    fn annotation(&mut self) -> Result<Option<Type>, Error> {
        if self.peek() == Some(&Tok::Colon) {
            self.i += 1;
            Ok(Some(self.ty()?))
        } else {
            Ok(None)
        }
    }

    fn starts_binder(&self) -> bool {
        matches!(self.peek(), Some(Tok::Lambda) | Some(Tok::Mu))
            || (self.peek() == Some(&Tok::Backslash)
                && matches!(self.peek2(), Some(Tok::Ident(_))))
    }

    fn term(&mut self) -> Result<Term, Error> {
        if self.starts_binder() {
            return self.binder();
        }
        let mut t = self.postfix_term()?;
        loop {
            if self.starts_binder() {
                let b = self.binder()?;
                return Ok(Term::App(Box::new(t), Box::new(b)));
            }
            match self.peek() {
                Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    let a = self.postfix_term()?;
                    t = Term::App(Box::new(t), Box::new(a));
                }
                _ => return Ok(t),
            }
        }
    }

    fn binder(&mut self) -> Result<Term, Error> {
        match self.peek() {
            Some(Tok::Lambda) | Some(Tok::Backslash) => {
                self.i += 1;
                let x = self.ident()?;
                let ann = self.annotation()?;
                self.expect(Tok::Dot)?;
                let body = self.term()?;
                Ok(Term::Abs(Var::new(&x), ann, Box::new(body)))
            }
            Some(Tok::Mu) => {
                self.i += 1;
                let a = self.name()?;
                let ann = self.annotation()?;
                self.expect(Tok::Dot)?;
                let c = self.command()?;
                Ok(Term::Mu(a, ann, Box::new(c)))
            }
            other => self.err(format!("expected a binder, found {:?}", other)),
        }
    }

    fn postfix_term(&mut self) -> Result<Term, Error> {
        let mut t = self.atom()?;
        while self.peek() == Some(&Tok::LBrack) && matches!(self.peek2(), Some(Tok::Ident(_))) {
            self.i += 1;
            let x = self.ident()?;
            self.expect(Tok::Backslash)?;
            let u = self.term()?;
            self.expect(Tok::RBrack)?;
            t = Term::Sub(Box::new(t), Var::new(&x), Box::new(u));
        }
        Ok(t)
    }

    fn atom(&mut self) -> Result<Term, Error> {
        match self.peek() {
            Some(Tok::Ident(_)) => {
                let x = self.ident()?;
                Ok(Term::Var(Var::new(&x)))
            }
            Some(Tok::LParen) => {
                self.i += 1;
                let t = self.term()?;
                self.expect(Tok::RParen)?;
                Ok(t)
            }
            other => self.err(format!("expected a term, found {:?}", other)),
        }
    }

    fn command(&mut self) -> Result<Command, Error> {
        let mut c = match self.peek() {
            Some(Tok::LBrack) => {
                self.i += 1;
                let a = self.name()?;
                self.expect(Tok::RBrack)?;
                let t = self.term()?;
                Command::Named(a, Box::new(t))
            }
            Some(Tok::LParen) => {
                self.i += 1;
                let c = self.command()?;
                self.expect(Tok::RParen)?;
                c
            }
            other => return self.err(format!("expected a command, found {:?}", other)),
        };
        while self.peek() == Some(&Tok::LBrack) && matches!(self.peek2(), Some(Tok::Name(_))) {
            self.i += 1;
            let a2 = self.name()?;
            self.expect(Tok::Slash)?;
            let a = self.name()?;
            let ann = self.annotation()?;
            self.expect(Tok::Backslash)?;
            let s = self.stack()?;
            self.expect(Tok::RBrack)?;
            c = Command::Repl(Box::new(c), a2, a, ann, s);
        }
        Ok(c)
    }

    fn stack(&mut self) -> Result<Stack, Error> {
        let mut items = Vec::new();
        loop {
            if self.peek() == Some(&Tok::Hash) {
                self.i += 1;
                return Ok(Stack(items));
            }
            let t = self.term()?;
            self.expect(Tok::Dot)?;
            items.push(t);
        }
    }

    fn stack_type(&mut self) -> Result<Vec<Type>, Error> {
        if let Some(Tok::Ident(s)) = self.peek() {
            if s == "eps" {
                self.i += 1;
                return Ok(Vec::new());
            }
        }
        let mut v = vec![self.ty()?];
        while self.peek() == Some(&Tok::Comma) {
            self.i += 1;
            if let Some(Tok::Ident(s)) = self.peek() {
                if s == "eps" {
                    self.i += 1;
                    break;
                }
            }
            v.push(self.ty()?);
        }
        Ok(v)
    }

    fn done(&self) -> bool {
        self.i == self.toks.len()
    }
}

fn parser(src: &str) -> Result<Parser, Error> {
    Ok(Parser {
        toks: lex(src)?,
        i: 0,
        end: src.len(),
    })
}

fn finish<T>(p: &Parser, v: T) -> Result<T, Error> {
    if p.done() {
        Ok(v)
    } else {
        p.err("trailing input")
    }
}

pub fn parse_term(src: &str) -> Result<Term, Error> {
    let mut p = parser(src)?;
    let t = p.term()?;
    finish(&p, t)
}

pub fn parse_command(src: &str) -> Result<Command, Error> {
    let mut p = parser(src)?;
    let c = p.command()?;
    finish(&p, c)
}

pub fn parse_stack(src: &str) -> Result<Stack, Error> {
    let mut p = parser(src)?;
    let s = p.stack()?;
    finish(&p, s)
}

pub fn parse_type(src: &str) -> Result<Type, Error> {
    let mut p = parser(src)?;
    let t = p.ty()?;
    finish(&p, t)
}

pub fn parse_stack_type(src: &str) -> Result<Vec<Type>, Error> {
    let mut p = parser(src)?;
    let t = p.stack_type()?;
    finish(&p, t)
}

/// Parses an object of any sort. Commands are tried first, then terms,
/// then stacks. The result is not renamed apart; see
/// [`crate::meta::freshen`].
pub fn parse_object(src: &str) -> Result<Object, Error> {
    let c = parse_command(src);
    if let Ok(c) = c {
        return Ok(Object::Command(c));
    }
    let t = parse_term(src);
    if let Ok(t) = t {
        return Ok(Object::Term(t));
    }
    let s = parse_stack(src);
    if let Ok(s) = s {
        return Ok(Object::Stack(s));
    }
    // Report the error from the attempt that got furthest.
    let errs = [c.err(), t.err(), s.err()];
    let best = errs
        .into_iter()
        .flatten()
        .max_by_key(|e| match e {
            Error::Parse { pos, .. } => *pos,
            _ => 0,
        })
        .expect("at least one error");
    Err(best)
}
