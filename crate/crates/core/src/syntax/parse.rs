//! Recursive-descent parser for the expression syntax:
//!
//! ```text
//! expr   := ["-"] term (("+" | "-") term)*
//! term   := factor ("*"? factor)*
//! factor := atom ("^" sint)?
//! atom   := rational | name | func "(" expr ")" | "(" expr ")"
//! ```

use crate::error::{Error, Result};
use crate::scalar::Rational;

/// Generator and parameter tokens understood by the evaluator.
pub const NAMES: &[&str] = &[
    "x", "xi", "th", "dx", "dth", "d2x", "d2th", "w", "u", "phi", "y", "a", "be", "ga", "dd", "px",
    "pth", "q", "j",
];

/// Function tokens; a name from this list followed by `(` is an application.
pub const FUNCTIONS: &[&str] = &["d", "Delta", "DeltaL", "S", "eps", "nf"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ast {
    Number(Rational),
    Name {
        name: String,
        offset: usize,
    },
    Call {
        func: String,
        arg: Box<Ast>,
        offset: usize,
    },
    Neg(Box<Ast>),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, i64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Number(Rational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

fn valid_tokens() -> String {
    NAMES
        .iter()
        .chain(FUNCTIONS)
        .copied()
        .collect::<Vec<_>>()
        .join(", ")
}

fn lex(input: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let start = i;
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => out.push((Tok::Plus, i)),
            b'-' => out.push((Tok::Minus, i)),
            b'*' => out.push((Tok::Star, i)),
            b'^' => out.push((Tok::Caret, i)),
            b'(' => out.push((Tok::LParen, i)),
            b')' => out.push((Tok::RParen, i)),
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let num = &input[start..i];
                let mut den = "1";
                if i < bytes.len() && bytes[i] == b'/' {
                    let ds = i + 1;
                    let mut k = ds;
                    while k < bytes.len() && bytes[k].is_ascii_digit() {
                        k += 1;
                    }
                    if k == ds {
                        return Err(Error::Syntax {
                            offset: ds,
                            message: "expected denominator after `/`".into(),
                        });
                    }
                    den = &input[ds..k];
                    i = k;
                }
                out.push((Tok::Number(parse_rational(num, den, start)?), start));
                continue;
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let id = &input[start..i];
                if !NAMES.contains(&id) && !FUNCTIONS.contains(&id) {
                    return Err(Error::UnknownToken {
                        token: id.to_string(),
                        offset: start,
                        valid: valid_tokens(),
                    });
                }
                out.push((Tok::Ident(id.to_string()), start));
                continue;
            }
            _ => {
                let ch = input[i..].chars().next().unwrap_or('?');
                return Err(Error::Syntax {
                    offset: i,
                    message: format!("unexpected character `{ch}`"),
                });
            }
        }
        i += 1;
    }
    out.push((Tok::End, input.len()));
    Ok(out)
}

fn parse_rational(num: &str, den: &str, offset: usize) -> Result<Rational> {
    use num_bigint::BigInt;
    use num_rational::BigRational;
    let n: BigInt = num.parse().map_err(|_| Error::Syntax {
        offset,
        message: "bad number".into(),
    })?;
    let d: BigInt = den.parse().map_err(|_| Error::Syntax {
        offset,
        message: "bad denominator".into(),
    })?;
    if d == BigInt::from(0) {
        return Err(Error::Syntax {
            offset,
            message: "zero denominator".into(),
        });
    }
    Ok(Rational::from_big(BigRational::new(n, d)))
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            offset: self.offset(),
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut lhs = if *self.peek() == Tok::Minus {
            self.bump();
            Ast::Neg(Box::new(self.term()?))
        } else {
            if *self.peek() == Tok::Plus {
                self.bump();
            }
            self.term()?
        };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Ast::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Ast::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Tok::Number(_) | Tok::Ident(_) | Tok::LParen)
    }

    fn term(&mut self) -> Result<Ast> {
        let mut lhs = self.factor()?;
        loop {
            if *self.peek() == Tok::Star {
                self.bump();
                lhs = Ast::Mul(Box::new(lhs), Box::new(self.factor()?));
            } else if self.starts_factor() {
                lhs = Ast::Mul(Box::new(lhs), Box::new(self.factor()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn factor(&mut self) -> Result<Ast> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let negative = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        match self.peek().clone() {
            Tok::Number(r) if r.is_integer() => {
                let n: i64 = r
                    .to_string()
                    .parse()
                    .or_else(|_| self.error("exponent out of range"))?;
                self.bump();
                Ok(Ast::Pow(Box::new(base), if negative { -n } else { n }))
            }
            _ => self.error("expected integer exponent after `^`"),
        }
    }

    fn atom(&mut self) -> Result<Ast> {
        let (tok, offset) = self.bump();
        match tok {
            Tok::Number(r) => Ok(Ast::Number(r)),
            Tok::Ident(name) => {
                if FUNCTIONS.contains(&name.as_str()) {
                    if *self.peek() != Tok::LParen {
                        return self.error(format!("expected `(` after function `{name}`"));
                    }
                    self.bump();
                    let arg = self.expr()?;
                    self.expect_rparen()?;
                    Ok(Ast::Call {
                        func: name,
                        arg: Box::new(arg),
                        offset,
                    })
                } else {
                    Ok(Ast::Name { name, offset })
                }
            }
            Tok::LParen => {
                let e = self.expr()?;
                self.expect_rparen()?;
                Ok(e)
            }
            Tok::End => Err(Error::Syntax {
                offset,
                message: "unexpected end of input".into(),
            }),
            other => Err(Error::Syntax {
                offset,
                message: format!("unexpected {}", describe(&other)),
            }),
        }
    }

    fn expect_rparen(&mut self) -> Result<()> {
        if *self.peek() == Tok::RParen {
            self.bump();
            Ok(())
        } else {
            self.error("expected `)`")
        }
    }
}

fn describe(t: &Tok) -> &'static str {
    match t {
        Tok::Plus => "`+`",
        Tok::Minus => "`-`",
        Tok::Star => "`*`",
        Tok::Caret => "`^`",
        Tok::RParen => "`)`",
        Tok::LParen => "`(`",
        Tok::Number(_) => "number",
        Tok::Ident(_) => "name",
        Tok::End => "end of input",
    }
}

pub fn parse(input: &str) -> Result<Ast> {
    let mut p = Parser {
        toks: lex(input)?,
        pos: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.error(format!("unexpected {}", describe(p.peek())));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn name(n: &str, offset: usize) -> Box<Ast> {
        Box::new(Ast::Name {
            name: n.into(),
            offset,
        })
    }

    #[test]
    fn difference_with_negative_power() {
        let ast = parse("th*x - q^-1*x*th").unwrap();
        let expected = Ast::Sub(
            Box::new(Ast::Mul(name("th", 0), name("x", 3))),
            Box::new(Ast::Mul(
                Box::new(Ast::Mul(
                    Box::new(Ast::Pow(name("q", 7), -1)),
                    name("x", 12),
                )),
                name("th", 14),
            )),
        );
        assert_eq!(ast, expected);
    }

    #[test]
    fn nested_applications() {
        let ast = parse("d(d(d(x*th)))").unwrap();
        let Ast::Call { func, arg, .. } = ast else {
            panic!()
        };
        assert_eq!(func, "d");
        let Ast::Call { arg, .. } = *arg else {
            panic!()
        };
        assert!(matches!(*arg, Ast::Call { .. }));
    }

    #[test]
    fn dangling_caret_reports_offset() {
        assert_eq!(
            parse("x^").unwrap_err(),
            Error::Syntax {
                offset: 2,
                message: "expected integer exponent after `^`".into()
            }
        );
    }

    #[test]
    fn unknown_token_lists_valid_ones() {
        match parse("x + zeta").unwrap_err() {
            Error::UnknownToken {
                token,
                offset,
                valid,
            } => {
                assert_eq!(token, "zeta");
                assert_eq!(offset, 4);
                assert!(valid.contains("d2th") && valid.contains("DeltaL"));
            }
            e => panic!("{e:?}"),
        }
    }

    #[test]
    fn juxtaposition_and_rationals() {
        assert_eq!(
            parse("th x").unwrap(),
            Ast::Mul(name("th", 0), name("x", 3))
        );
        assert_eq!(parse("2/4").unwrap(), Ast::Number(Rational::new(1, 2)));
        assert!(parse("(x").is_err());
        assert!(parse("x)").is_err());
        assert!(parse("d x").is_err());
        assert!(parse("1/0").is_err());
    }
}
