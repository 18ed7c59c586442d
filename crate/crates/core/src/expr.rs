//! Text input: `poly` or `poly * exp(quad)`.
//!
//! ```text
//! expr   := sum
//! sum    := ['+'|'-'] term (('+'|'-') term)*
//! term   := power (['*'] power)*          implicit '*' only after a number
//! power  := atom ('^' integer)?
//! atom   := number ['/' number] | 'z' | '(' sum ')' | 'exp' '(' sum ')'
//! ```
//!
//! `exp(...)` may only appear as a factor of the whole expression, at most once.
//! Its argument must be `−a z² + b z` with `a ≥ 0` and no constant term.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lpstar::LpStarFn;
use crate::poly::Poly;
use crate::rational::Rational;

/// Largest exponent accepted after `^`.
const MAX_EXPONENT: u32 = 10_000;

/// Parsed input with its source text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionExpr {
    pub source: String,
    pub function: LpStarFn,
}

impl fmt::Display for FunctionExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.function.fmt(f)
    }
}

/// Parses `poly` or `poly * exp(−a z² + b z)`.
pub fn parse(text: &str) -> Result<FunctionExpr> {
    let v = Parser::new(text).parse_all()?;
    let (a, b) = match &v.exp {
        None => (Rational::zero(), Rational::zero()),
        Some((q, pos)) => split_exponent(q, *pos)?,
    };
    if v.poly.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let function = LpStarFn::new(v.poly, a, b)?;
    Ok(FunctionExpr {
        source: text.to_string(),
        function,
    })
}

/// Parses a polynomial in `z`; `exp` is not allowed and zero is rejected.
pub fn parse_poly(text: &str) -> Result<Poly> {
    let v = Parser::new(text).parse_all()?;
    if let Some((_, pos)) = v.exp {
        return Err(Error::Parse {
            pos,
            msg: "exp(...) is not allowed in a polynomial".into(),
        });
    }
    if v.poly.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(v.poly)
}

fn split_exponent(q: &Poly, pos: usize) -> Result<(Rational, Rational)> {
    if q.degree_or_zero() > 2 {
        return Err(Error::Parse {
            pos,
            msg: "exponent must have degree at most 2".into(),
        });
    }
    if !q.coeff(0).is_zero() {
        return Err(Error::Parse {
            pos,
            msg: "exponent must not have a constant term; fold exp(c) into the polynomial".into(),
        });
    }
    let a = -q.coeff(2);
    if a.is_negative() {
        return Err(Error::NegativeGaussian);
    }
    Ok((a, q.coeff(1)))
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Z,
    Exp,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

/// A polynomial value, possibly carrying the one `exp(...)` factor and its position.
struct Value {
    poly: Poly,
    exp: Option<(Poly, usize)>,
}

impl Value {
    fn poly(poly: Poly) -> Self {
        Value { poly, exp: None }
    }
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    err: Option<Error>,
}

impl Parser {
    fn new(text: &str) -> Self {
        let mut toks = Vec::new();
        let mut err = None;
        let bytes = text.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i] as char;
            let start = i;
            i += 1;
            let t = match c {
                ' ' | '\t' | '\n' | '\r' => continue,
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                'z' => Tok::Z,
                '0'..='9' => {
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    Tok::Num(text[start..i].parse().expect("digits"))
                }
                _ if text[start..].starts_with("exp") => {
                    i = start + 3;
                    Tok::Exp
                }
                _ => {
                    let ch = text[start..].chars().next().expect("nonempty");
                    err = Some(Error::Parse {
                        pos: start,
                        msg: format!("unexpected character '{ch}'"),
                    });
                    break;
                }
            };
            toks.push((t, start));
        }
        toks.push((Tok::End, text.len()));
        Parser { toks, at: 0, err }
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<()> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            self.fail(format!("expected {what}"))
        }
    }

    fn parse_all(mut self) -> Result<Value> {
        if let Some(e) = self.err.take() {
            return Err(e);
        }
        if *self.peek() == Tok::End {
            return self.fail("empty input");
        }
        let v = self.sum()?;
        if *self.peek() != Tok::End {
            return self.fail("unexpected trailing input");
        }
        Ok(v)
    }

    fn sum(&mut self) -> Result<Value> {
        let mut neg = false;
        match self.peek() {
            Tok::Plus => {
                self.bump();
            }
            Tok::Minus => {
                self.bump();
                neg = true;
            }
            _ => {}
        }
        let start = self.pos();
        let mut acc = self.term()?;
        if neg {
            acc.poly = -acc.poly;
        }
        loop {
            let neg = match self.peek() {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => break,
            };
            let pos = self.pos();
            self.bump();
            let rhs = self.term()?;
            if acc.exp.is_some() || rhs.exp.is_some() {
                return Err(Error::Parse {
                    pos: pos.max(start),
                    msg: "exp(...) must multiply the whole expression".into(),
                });
            }
            acc.poly = if neg {
                &acc.poly - &rhs.poly
            } else {
                &acc.poly + &rhs.poly
            };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Value> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                }
                // Implicit product after a plain number, as in `3z^2` or `2(z+1)`.
                Tok::Z | Tok::LParen if self.prev_is_number() => {}
                _ => break,
            }
            let pos = self.pos();
            let rhs = self.power()?;
            acc.poly = &acc.poly * &rhs.poly;
            acc.exp = match (acc.exp, rhs.exp) {
                (Some(_), Some(_)) => {
                    return Err(Error::Parse {
                        pos,
                        msg: "at most one exp(...) factor is allowed".into(),
                    })
                }
                (x, y) => x.or(y),
            };
        }
        Ok(acc)
    }

    fn prev_is_number(&self) -> bool {
        self.at > 0 && matches!(self.toks[self.at - 1].0, Tok::Num(_))
    }

    fn power(&mut self) -> Result<Value> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        let pos = self.pos();
        self.bump();
        let k = match self.bump() {
            Tok::Num(n) => n,
            _ => {
                return Err(Error::Parse {
                    pos: pos + 1,
                    msg: "expected a nonnegative integer exponent".into(),
                })
            }
        };
        let k: u32 = match u32::try_from(&k) {
            Ok(k) if k <= MAX_EXPONENT => k,
            _ => {
                return Err(Error::Parse {
                    pos: pos + 1,
                    msg: format!("exponent larger than {MAX_EXPONENT}"),
                })
            }
        };
        if base.exp.is_some() {
            return Err(Error::Parse {
                pos,
                msg: "exp(...) cannot be raised to a power".into(),
            });
        }
        Ok(Value::poly(base.poly.pow(k as usize)))
    }

    fn atom(&mut self) -> Result<Value> {
        let pos = self.pos();
        match self.bump() {
            Tok::Num(n) => {
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let d = match self.bump() {
                        Tok::Num(d) if !d.is_zero() => d,
                        Tok::Num(_) => {
                            return Err(Error::Parse {
                                pos,
                                msg: "zero denominator".into(),
                            })
                        }
                        _ => return self.fail_at(pos, "expected an integer denominator"),
                    };
                    return Ok(Value::poly(Poly::constant(Rational::new(n, d))));
                }
                Ok(Value::poly(Poly::constant(Rational::from_integer(n))))
            }
            Tok::Z => Ok(Value::poly(Poly::z())),
            Tok::LParen => {
                let v = self.sum()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(v)
            }
            Tok::Exp => {
                self.expect(Tok::LParen, "'(' after exp")?;
                let inner = self.sum()?;
                self.expect(Tok::RParen, "')'")?;
                if inner.exp.is_some() {
                    return self.fail_at(pos, "nested exp(...) is not allowed");
                }
                Ok(Value {
                    poly: Poly::one(),
                    exp: Some((inner.poly, pos)),
                })
            }
            Tok::End => self.fail_at(pos, "unexpected end of input"),
            _ => self.fail_at(pos, "expected a number, 'z', '(' or exp(...)"),
        }
    }

    fn fail_at<T>(&self, pos: usize, msg: &str) -> Result<T> {
        Err(Error::Parse {
            pos,
            msg: msg.to_string(),
        })
    }
}
