//! Tokenizer and a small recursive-descent expression parser shared by
//! the scalar grammar and the element grammar.
//!
//! Grammar (both levels):
//!   expr   := term (('+' | '-') term)*
//!   term   := factor (('*' | '/') factor)*
//!   factor := '-'* atom ('^' '-'? integer)?
//!   atom   := integer | symbol | '(' expr ')'
//!
//! Symbols are single letters (`z`, `q` at the scalar level; `u`, `v`,
//! `w` additionally at the element level).

use crate::error::{Error, Result};
use num::BigInt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Token {
    Int(BigInt),
    Sym(char),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

pub fn tokenize(input: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = input.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                chars.next();
            }
            '+' => {
                chars.next();
                out.push(Token::Plus);
            }
            '-' => {
                chars.next();
                out.push(Token::Minus);
            }
            '*' => {
                chars.next();
                out.push(Token::Star);
            }
            '/' => {
                chars.next();
                out.push(Token::Slash);
            }
            '^' => {
                chars.next();
                out.push(Token::Caret);
            }
            '(' => {
                chars.next();
                out.push(Token::LParen);
            }
            ')' => {
                chars.next();
                out.push(Token::RParen);
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let n: BigInt = digits.parse().expect("digits parse as BigInt");
                out.push(Token::Int(n));
            }
            c if c.is_ascii_alphabetic() => {
                chars.next();
                out.push(Token::Sym(c));
            }
            other => {
                return Err(Error::Parse(format!("unexpected character '{other}'")));
            }
        }
    }
    Ok(out)
}

/// Value operations the parser needs; implemented by scalars and elements.
pub trait ExprValue: Sized + Clone {
    fn e_add(&self, other: &Self) -> Result<Self>;
    fn e_sub(&self, other: &Self) -> Result<Self>;
    fn e_mul(&self, other: &Self) -> Result<Self>;
    fn e_div(&self, other: &Self) -> Result<Self>;
    fn e_neg(&self) -> Self;
    fn e_pow(&self, e: i64) -> Result<Self>;
}

pub struct Parser<'a, V, F>
where
    F: Fn(&Token) -> Result<V>,
{
    tokens: &'a [Token],
    pos: usize,
    atom: F,
}

impl<'a, V: ExprValue, F: Fn(&Token) -> Result<V>> Parser<'a, V, F> {
    pub fn new(tokens: &'a [Token], atom: F) -> Self {
        Parser {
            tokens,
            pos: 0,
            atom,
        }
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<&Token> {
        let t = self.tokens.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    pub fn parse_all(&mut self) -> Result<V> {
        if self.tokens.is_empty() {
            return Err(Error::Parse("empty expression".into()));
        }
        let v = self.expr()?;
        if self.pos != self.tokens.len() {
            return Err(Error::Parse(format!(
                "trailing tokens starting at position {}",
                self.pos
            )));
        }
        Ok(v)
    }

    fn expr(&mut self) -> Result<V> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.next();
                    let t = self.term()?;
                    acc = acc.e_add(&t)?;
                }
                Some(Token::Minus) => {
                    self.next();
                    let t = self.term()?;
                    acc = acc.e_sub(&t)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<V> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.next();
                    let f = self.factor()?;
                    acc = acc.e_mul(&f)?;
                }
                Some(Token::Slash) => {
                    self.next();
                    let f = self.factor()?;
                    acc = acc.e_div(&f)?;
                }
                // implicit products like `2v` are not in the grammar
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<V> {
        let mut negate = false;
        while let Some(Token::Minus) = self.peek() {
            self.next();
            negate = !negate;
        }
        let mut v = self.atom_value()?;
        if let Some(Token::Caret) = self.peek() {
            self.next();
            let mut sign = 1i64;
            if let Some(Token::Minus) = self.peek() {
                self.next();
                sign = -1;
            }
            match self.next() {
                Some(Token::Int(n)) => {
                    let e: i64 = n
                        .try_into()
                        .map_err(|_| Error::Parse("exponent out of range".into()))?;
                    v = v.e_pow(sign * e)?;
                }
                _ => return Err(Error::Parse("expected integer exponent after '^'".into())),
            }
        }
        if negate {
            v = v.e_neg();
        }
        Ok(v)
    }

    fn atom_value(&mut self) -> Result<V> {
        match self.next().cloned() {
            Some(Token::LParen) => {
                let v = self.expr()?;
                match self.next() {
                    Some(Token::RParen) => Ok(v),
                    _ => Err(Error::Parse("missing closing parenthesis".into())),
                }
            }
            Some(t @ (Token::Int(_) | Token::Sym(_))) => (self.atom)(&t),
            Some(other) => Err(Error::Parse(format!("unexpected token {other:?}"))),
            None => Err(Error::Parse("unexpected end of expression".into())),
        }
    }
}

use super::{FieldKind, FieldSpec, Scalar};
use num::BigRational;

impl ExprValue for Scalar {
    fn e_add(&self, other: &Self) -> Result<Self> {
        Ok(self.add(other))
    }
    fn e_sub(&self, other: &Self) -> Result<Self> {
        Ok(self.sub(other))
    }
    fn e_mul(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(other))
    }
    fn e_div(&self, other: &Self) -> Result<Self> {
        self.div(other)
            .ok_or_else(|| Error::Parse("division by zero".into()))
    }
    fn e_neg(&self) -> Self {
        self.neg()
    }
    fn e_pow(&self, e: i64) -> Result<Self> {
        if e < 0 && self.is_zero() {
            return Err(Error::Parse("negative power of zero".into()));
        }
        Ok(self.pow(e))
    }
}

/// Parse a scalar expression in the given field. `z` names the cyclotomic
/// generator and `q` the rational-function symbol; each is rejected
/// outside its field.
pub fn parse_scalar(field: &FieldSpec, input: &str) -> Result<Scalar> {
    let tokens = tokenize(input)?;
    let field = field.clone();
    let mut parser = Parser::new(&tokens, move |t: &Token| match t {
        Token::Int(n) => Ok(field.from_rational(BigRational::from_integer(n.clone()))),
        Token::Sym('z') => match field.kind() {
            FieldKind::Cyclotomic(_) => Ok(field.generator().unwrap()),
            _ => Err(Error::Parse(
                "symbol 'z' is only defined in cyclotomic fields".into(),
            )),
        },
        Token::Sym('q') => match field.kind() {
            FieldKind::RationalFunction => Ok(field.generator().unwrap()),
            _ => Err(Error::Parse(
                "symbol 'q' is only defined in the rational-function field".into(),
            )),
        },
        Token::Sym(c) => Err(Error::Parse(format!("unknown symbol '{c}'"))),
        _ => unreachable!(),
    });
    parser.parse_all()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_grammar_roundtrip() {
        let f = FieldSpec::rational();
        assert_eq!(parse_scalar(&f, "3/2").unwrap(), f.from_ratio(3, 2));
        assert_eq!(parse_scalar(&f, "-5").unwrap(), f.from_int(-5));
        assert_eq!(
            parse_scalar(&f, "(1 + 2)^3 - 27").unwrap(),
            f.zero()
        );

        let c = FieldSpec::cyclotomic(4).unwrap();
        let z = c.generator().unwrap();
        assert_eq!(parse_scalar(&c, "z^2").unwrap(), z.pow(2));
        assert_eq!(parse_scalar(&c, "1 + z - 2*z^3").unwrap(), {
            c.one().add(&z).sub(&c.from_int(2).mul(&z.pow(3)))
        });

        let rf = FieldSpec::rational_function();
        let q = rf.generator().unwrap();
        assert_eq!(
            parse_scalar(&rf, "(1 - q)/(1 + q)").unwrap(),
            rf.one().sub(&q).div(&rf.one().add(&q)).unwrap()
        );
        assert_eq!(parse_scalar(&rf, "q^-1").unwrap(), q.pow(-1));
    }

    #[test]
    fn display_reparses() {
        let c = FieldSpec::cyclotomic(5).unwrap();
        let z = c.generator().unwrap();
        for x in [
            z.pow(3).add(&c.from_ratio(-7, 3)),
            z.add(&z.pow(2)).mul(&z.pow(4).sub(&c.one())),
            c.from_ratio(22, 7).neg(),
        ] {
            let s = x.to_string();
            assert_eq!(parse_scalar(&c, &s).unwrap(), x, "failed on {s}");
        }
        let rf = FieldSpec::rational_function();
        let q = rf.generator().unwrap();
        for x in [
            q.pow(2).sub(&rf.one()).div(&q.add(&rf.from_int(3))).unwrap(),
            q.neg(),
            rf.from_ratio(-1, 2),
        ] {
            let s = x.to_string();
            assert_eq!(parse_scalar(&rf, &s).unwrap(), x, "failed on {s}");
        }
    }

    #[test]
    fn rejects_junk() {
        let f = FieldSpec::rational();
        assert!(parse_scalar(&f, "").is_err());
        assert!(parse_scalar(&f, "1 +").is_err());
        assert!(parse_scalar(&f, "z").is_err());
        assert!(parse_scalar(&f, "1/0").is_err());
        assert!(parse_scalar(&f, "#").is_err());
    }
}
