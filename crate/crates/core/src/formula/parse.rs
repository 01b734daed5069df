//! Precedence-climbing parser. Infix connectives are right-associative.

use std::sync::Arc;

use thiserror::Error;

use super::{var_of_name, Fixity, Formula, Op, Signature};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{kind} at offset {offset}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("`{name}` takes {expected} arguments, found {found}")]
    ArityMismatch { name: String, expected: usize, found: usize },
    #[error("unbalanced parentheses")]
    UnbalancedParens,
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unexpected `{0}`")]
    UnexpectedToken(String),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Open,
    Close,
    Comma,
    Var(u32),
    Op(Op),
}

fn is_word(c: char) -> bool {
    c.is_alphanumeric() || c == '_'
}

fn tokenize(sig: &Signature, text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < text.len() {
        let rest = &text[i..];
        let ch = rest.chars().next().expect("non-empty");
        if ch.is_whitespace() {
            i += ch.len_utf8();
            continue;
        }
        let single = match ch {
            '(' => Some(Tok::Open),
            ')' => Some(Tok::Close),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(t) = single {
            out.push((i, t));
            i += 1;
            continue;
        }
        // Longest spelling containing a non-word character that matches here.
        let best = sig
            .ops()
            .flat_map(|(op, c)| std::iter::once(&c.name).chain(c.aliases.iter()).map(move |s| (op, s)))
            .filter(|(_, s)| !s.chars().all(is_word) && rest.starts_with(s.as_str()))
            .max_by_key(|(_, s)| s.len());
        if let Some((op, s)) = best {
            out.push((i, Tok::Op(op)));
            i += s.len();
            continue;
        }
        if is_word(ch) {
            let len = rest.find(|c: char| !is_word(c)).unwrap_or(rest.len());
            let word = &rest[..len];
            let tok = if let Some(v) = var_of_name(word) {
                Tok::Var(v)
            } else if let Some(op) = sig.lookup(word) {
                Tok::Op(op)
            } else {
                return Err(ParseError { offset: i, kind: ParseErrorKind::UnknownSymbol(word.to_string()) });
            };
            out.push((i, tok));
            i += len;
            continue;
        }
        return Err(ParseError { offset: i, kind: ParseErrorKind::UnknownSymbol(ch.to_string()) });
    }
    Ok(out)
}

struct Parser<'a> {
    sig: &'a Signature,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn err<T>(&self, kind: ParseErrorKind) -> Result<T, ParseError> {
        Err(ParseError { offset: self.offset(), kind })
    }

    fn unexpected<T>(&self) -> Result<T, ParseError> {
        match self.toks.get(self.pos) {
            None => self.err(ParseErrorKind::UnexpectedEnd),
            Some((_, Tok::Close)) => self.err(ParseErrorKind::UnbalancedParens),
            Some((_, t)) => {
                let s = match t {
                    Tok::Comma => ",".to_string(),
                    Tok::Op(op) => self.sig.get(*op).name.clone(),
                    Tok::Var(v) => super::var_name(*v),
                    Tok::Open => "(".to_string(),
                    Tok::Close => ")".to_string(),
                };
                self.err(ParseErrorKind::UnexpectedToken(s))
            }
        }
    }

    fn expr(&mut self, min_prec: u8) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while let Some(&Tok::Op(op)) = self.peek() {
            let c = self.sig.get(op);
            if c.fixity != Fixity::Infix || c.precedence < min_prec {
                break;
            }
            let prec = c.precedence;
            self.pos += 1;
            let rhs = self.expr(prec)?;
            lhs = Formula::App(op, Arc::from(vec![lhs, rhs]));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Var(v)) => {
                self.pos += 1;
                Ok(Formula::Var(v))
            }
            Some(Tok::Open) => {
                let open = self.offset();
                self.pos += 1;
                let f = self.expr(0)?;
                if self.peek() != Some(&Tok::Close) {
                    if self.peek().is_none() {
                        return Err(ParseError { offset: open, kind: ParseErrorKind::UnbalancedParens });
                    }
                    return self.unexpected();
                }
                self.pos += 1;
                Ok(f)
            }
            Some(Tok::Op(op)) => {
                let c = self.sig.get(op).clone();
                let at = self.offset();
                self.pos += 1;
                match c.fixity {
                    Fixity::Constant => {
                        if self.peek() == Some(&Tok::Open) {
                            let args = self.call_args()?;
                            return Err(ParseError {
                                offset: at,
                                kind: ParseErrorKind::ArityMismatch { name: c.name, expected: 0, found: args.len() },
                            });
                        }
                        Ok(Formula::constant(op))
                    }
                    Fixity::Prefix if c.arity == 1 => {
                        let a = self.unary()?;
                        Ok(Formula::unary(op, a))
                    }
                    Fixity::Prefix => {
                        if self.peek() != Some(&Tok::Open) {
                            return self.unexpected();
                        }
                        let args = self.call_args()?;
                        if args.len() != c.arity {
                            return Err(ParseError {
                                offset: at,
                                kind: ParseErrorKind::ArityMismatch { name: c.name, expected: c.arity, found: args.len() },
                            });
                        }
                        Ok(Formula::app(op, args))
                    }
                    Fixity::Infix => Err(ParseError { offset: at, kind: ParseErrorKind::UnexpectedToken(c.name) }),
                }
            }
            _ => self.unexpected(),
        }
    }

    fn call_args(&mut self) -> Result<Vec<Formula>, ParseError> {
        let open = self.offset();
        self.pos += 1;
        let mut args = Vec::new();
        if self.peek() == Some(&Tok::Close) {
            self.pos += 1;
            return Ok(args);
        }
        loop {
            args.push(self.expr(0)?);
            match self.peek() {
                Some(Tok::Comma) => self.pos += 1,
                Some(Tok::Close) => {
                    self.pos += 1;
                    return Ok(args);
                }
                None => return Err(ParseError { offset: open, kind: ParseErrorKind::UnbalancedParens }),
                _ => return self.unexpected(),
            }
        }
    }
}

pub fn parse(sig: &Signature, text: &str) -> Result<Formula, ParseError> {
    let toks = tokenize(sig, text)?;
    let mut p = Parser { sig, toks, pos: 0, end: text.len() };
    if p.peek().is_none() {
        return p.err(ParseErrorKind::UnexpectedEnd);
    }
    let f = p.expr(0)?;
    if p.pos != p.toks.len() {
        return p.unexpected();
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{Connective, Signature};

    fn sig() -> Signature {
        Signature::classical()
    }

    fn show(text: &str) -> String {
        let s = sig();
        parse(&s, text).unwrap().display(&s).to_string()
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(show("p & q | r -> p"), "((p ∧ q) ∨ r) → p");
        assert_eq!(show("p -> q -> r"), "p → (q → r)");
        assert_eq!(show("~(p -> p)"), "¬(p → p)");
        assert_eq!(show("¬¬p ∧ ⊥"), "¬¬p ∧ ⊥");
        assert_eq!(show("neg v4 or bot"), "¬v4 ∨ ⊥");
        assert_eq!(show("~p \\/ _|_ /\\ q"), "¬p ∨ (⊥ ∧ q)");
    }

    #[test]
    fn errors_carry_offsets() {
        let s = sig();
        assert_eq!(parse(&s, "p ∧ x").unwrap_err(), ParseError { offset: 6, kind: ParseErrorKind::UnknownSymbol("x".into()) });
        assert_eq!(parse(&s, "(p ∧ q").unwrap_err().kind, ParseErrorKind::UnbalancedParens);
        assert_eq!(parse(&s, "p ∧ q)").unwrap_err().kind, ParseErrorKind::UnbalancedParens);
        assert_eq!(parse(&s, "p ∧").unwrap_err().kind, ParseErrorKind::UnexpectedEnd);
        assert_eq!(
            parse(&s, "⊥(p, q)").unwrap_err().kind,
            ParseErrorKind::ArityMismatch { name: "⊥".into(), expected: 0, found: 2 }
        );
    }

    #[test]
    fn function_call_syntax() {
        let s = Signature::new(vec![Connective::new("maj", 3, Fixity::Prefix, &[], 0), Connective::neg()]).unwrap();
        let f = parse(&s, "maj(p, ¬q, r)").unwrap();
        assert_eq!(f.display(&s).to_string(), "maj(p, ¬q, r)");
        assert!(matches!(
            parse(&s, "maj(p, q)").unwrap_err().kind,
            ParseErrorKind::ArityMismatch { expected: 3, found: 2, .. }
        ));
    }
}
