//! A small expression reader shared by field elements, skew polynomials and
//! series: integers, identifiers, `+ - * / ^` and parentheses, evaluated
//! directly in the target structure so that `t*w` means `S(w) t + D(w)`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::{FieldElement, TwistedField};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    pos: usize,
    text: String,
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Token {
                tok: Tok::Num(text.parse().expect("digits")),
                pos: start,
                text,
            });
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Token {
                tok: Tok::Ident(text.clone()),
                pos: start,
                text,
            });
        } else if "+-*/^()".contains(c) {
            out.push(Token {
                tok: Tok::Op(c),
                pos: i,
                text: c.to_string(),
            });
            i += 1;
        } else {
            return Err(Error::Parse {
                message: "unexpected character".into(),
                position: i,
                token: c.to_string(),
            });
        }
    }
    out.push(Token {
        tok: Tok::End,
        pos: chars.len(),
        text: "<end>".into(),
    });
    Ok(out)
}

/// The structure an expression is evaluated in.
pub(crate) trait Algebra {
    type Value: Clone;

    fn integer(&self, n: &BigInt) -> Result<Self::Value>;
    fn symbol(&self, name: &str) -> Option<Self::Value>;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn neg(&self, a: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    /// `a / b`; `None` when `b` is not invertible here.
    fn div(&self, a: &Self::Value, b: &Self::Value) -> Result<Option<Self::Value>>;
    fn one(&self) -> Self::Value;
}

struct Parser<'a, A: Algebra> {
    alg: &'a A,
    toks: Vec<Token>,
    i: usize,
}

fn err(t: &Token, message: &str) -> Error {
    Error::Parse {
        message: message.to_string(),
        position: t.pos,
        token: t.text.clone(),
    }
}

impl<A: Algebra> Parser<'_, A> {
    fn peek(&self) -> &Token {
        &self.toks[self.i]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.i].clone();
        if self.i + 1 < self.toks.len() {
            self.i += 1;
        }
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek().tok == Tok::Op(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<A::Value> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                let rhs = self.term()?;
                acc = self.alg.add(&acc, &rhs);
            } else if self.eat('-') {
                let rhs = self.term()?;
                acc = self.alg.add(&acc, &self.alg.neg(&rhs));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<A::Value> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                let rhs = self.unary()?;
                acc = self.alg.mul(&acc, &rhs);
            } else if self.peek().tok == Tok::Op('/') {
                let slash = self.bump();
                let rhs = self.unary()?;
                acc = self
                    .alg
                    .div(&acc, &rhs)?
                    .ok_or_else(|| err(&slash, "divisor is not invertible"))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<A::Value> {
        if self.eat('-') {
            let v = self.unary()?;
            return Ok(self.alg.neg(&v));
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<A::Value> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let t = self.bump();
        let n: u32 = match &t.tok {
            Tok::Num(n) => n.try_into().map_err(|_| err(&t, "exponent too large"))?,
            _ => return Err(err(&t, "expected a non-negative integer exponent")),
        };
        let mut acc = self.alg.one();
        for _ in 0..n {
            acc = self.alg.mul(&acc, &base);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<A::Value> {
        let t = self.bump();
        match &t.tok {
            Tok::Num(n) => self.alg.integer(n),
            Tok::Ident(name) => self.alg.symbol(name).ok_or_else(|| err(&t, "unknown symbol")),
            Tok::Op('(') => {
                let v = self.expr()?;
                let close = self.bump();
                if close.tok != Tok::Op(')') {
                    return Err(err(&close, "expected `)`"));
                }
                Ok(v)
            }
            Tok::End => Err(err(&t, "unexpected end of input")),
            Tok::Op(_) => Err(err(&t, "unexpected operator")),
        }
    }
}

pub(crate) fn evaluate<A: Algebra>(alg: &A, s: &str) -> Result<A::Value> {
    let toks = tokenize(s)?;
    let mut parser = Parser { alg, toks, i: 0 };
    let v = parser.expr()?;
    let rest = parser.peek();
    if rest.tok != Tok::End {
        return Err(err(rest, "unexpected trailing input"));
    }
    Ok(v)
}

struct FieldAlgebra<'a>(&'a TwistedField);

impl Algebra for FieldAlgebra<'_> {
    type Value = FieldElement;

    fn integer(&self, n: &BigInt) -> Result<FieldElement> {
        self.0.rational(num_rational::BigRational::from_integer(n.clone()))
    }

    fn symbol(&self, name: &str) -> Option<FieldElement> {
        let g = self.0.generator()?;
        let expected = match self.0.kind() {
            crate::field::BackendKind::Finite => "w",
            _ => "x",
        };
        (name == expected).then_some(g)
    }

    fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.0.add(a, b)
    }

    fn neg(&self, a: &FieldElement) -> FieldElement {
        self.0.neg(a)
    }

    fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.0.mul(a, b)
    }

    fn div(&self, a: &FieldElement, b: &FieldElement) -> Result<Option<FieldElement>> {
        Ok(self.0.inv(b).map(|ib| self.0.mul(a, &ib)))
    }

    fn one(&self) -> FieldElement {
        self.0.one()
    }
}

pub(crate) fn parse_field_element(field: &TwistedField, s: &str) -> Result<FieldElement> {
    evaluate(&FieldAlgebra(field), s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_literals() {
        let k: TwistedField = "gf(3,2)".parse().unwrap();
        let a = k.parse_element("2*w + 1").unwrap();
        assert_eq!(k.format(&a), "2*w+1");
        let b = k.parse_element("-(w+2)").unwrap();
        assert_eq!(k.format(&b), "2*w+1");
        let f: TwistedField = "funfield(3)".parse().unwrap();
        let r = f.parse_element("(x^2 - 1)/(x + 1)").unwrap();
        assert_eq!(f.format(&r), "x+2");
    }

    #[test]
    fn errors_carry_position_and_token() {
        let k: TwistedField = "gf(2,2)".parse().unwrap();
        match k.parse_element("w + y") {
            Err(Error::Parse { position, token, .. }) => {
                assert_eq!(position, 4);
                assert_eq!(token, "y");
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(k.parse_element("w +"), Err(Error::Parse { .. })));
        assert!(matches!(k.parse_element("1/0"), Err(Error::Parse { .. })));
        assert!(matches!(k.parse_element("(w"), Err(Error::Parse { .. })));
    }
}
