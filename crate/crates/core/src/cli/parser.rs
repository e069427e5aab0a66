//! Recursive-descent parser for rational expressions in `x`:
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := '-' factor | atom ('^' ['-'] int)?
//! atom   := int | 'x' | 'sqrt' '(' int ')' | '(' expr ')'
//! ```
//!
//! `^` binds tighter than unary minus, so `-x^2` is `-(x^2)`.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::exactalg::{AlgError, FieldCtx, FieldElem, RatFunc};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {position}: expected {}", expected.join(" or "))]
    Syntax { position: usize, expected: Vec<String> },
    #[error(transparent)]
    Alg(#[from] AlgError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprAst {
    Int(BigInt),
    X,
    Sqrt(BigInt),
    Neg(Box<ExprAst>),
    Add(Box<ExprAst>, Box<ExprAst>),
    Sub(Box<ExprAst>, Box<ExprAst>),
    Mul(Box<ExprAst>, Box<ExprAst>),
    Div(Box<ExprAst>, Box<ExprAst>),
    Pow(Box<ExprAst>, i64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    X,
    Sqrt,
    Sym(char),
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
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
            let s: String = chars[start..i].iter().collect();
            out.push((Tok::Int(s.parse().expect("digits")), start));
        } else if c == 'x' {
            out.push((Tok::X, i));
            i += 1;
        } else if chars[i..].starts_with(&['s', 'q', 'r', 't']) {
            out.push((Tok::Sqrt, i));
            i += 4;
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Sym(c), i));
            i += 1;
        } else if c == '−' {
            out.push((Tok::Sym('-'), i));
            i += 1;
        } else {
            return Err(ParseError::Syntax {
                position: i,
                expected: vec!["integer".into(), "x".into(), "sqrt".into(), "operator".into()],
            });
        }
    }
    out.push((Tok::End, chars.len()));
    Ok(out)
}

impl Lexer {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn here(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            position: self.here(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        })
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            Ok(())
        } else {
            self.fail(&[&format!("'{c}'")])
        }
    }

    fn expr(&mut self) -> Result<ExprAst, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Sym('+') => {
                    self.bump();
                    lhs = ExprAst::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Sym('-') => {
                    self.bump();
                    lhs = ExprAst::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<ExprAst, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Tok::Sym('*') => {
                    self.bump();
                    lhs = ExprAst::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Tok::Sym('/') => {
                    self.bump();
                    lhs = ExprAst::Div(Box::new(lhs), Box::new(self.factor()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<ExprAst, ParseError> {
        if *self.peek() == Tok::Sym('-') {
            self.bump();
            return Ok(ExprAst::Neg(Box::new(self.factor()?)));
        }
        let base = self.atom()?;
        if *self.peek() != Tok::Sym('^') {
            return Ok(base);
        }
        self.bump();
        let neg = if *self.peek() == Tok::Sym('-') {
            self.bump();
            true
        } else {
            false
        };
        let at = self.here();
        match self.bump() {
            Tok::Int(k) => {
                let k = k.to_i64().filter(|k| *k <= u32::MAX as i64).ok_or(ParseError::Syntax {
                    position: at,
                    expected: vec!["exponent below 2^32".into()],
                })?;
                Ok(ExprAst::Pow(Box::new(base), if neg { -k } else { k }))
            }
            _ => Err(ParseError::Syntax {
                position: at,
                expected: vec!["integer exponent".into()],
            }),
        }
    }

    fn atom(&mut self) -> Result<ExprAst, ParseError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(ExprAst::Int(n))
            }
            Tok::X => {
                self.bump();
                Ok(ExprAst::X)
            }
            Tok::Sqrt => {
                self.bump();
                self.expect('(')?;
                let Tok::Int(n) = self.peek().clone() else {
                    return self.fail(&["integer"]);
                };
                self.bump();
                self.expect(')')?;
                Ok(ExprAst::Sqrt(n))
            }
            Tok::Sym('(') => {
                self.bump();
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            _ => self.fail(&["integer", "x", "sqrt", "'('", "'-'"]),
        }
    }
}

pub fn parse_ast(text: &str) -> Result<ExprAst, ParseError> {
    let mut lx = Lexer {
        toks: lex(text)?,
        pos: 0,
    };
    let e = lx.expr()?;
    if *lx.peek() != Tok::End {
        return lx.fail(&["operator", "end of input"]);
    }
    Ok(e)
}

impl ExprAst {
    pub fn eval(&self, ctx: &mut FieldCtx) -> Result<RatFunc, ParseError> {
        Ok(match self {
            ExprAst::Int(n) => RatFunc::constant(FieldElem::from_rat(n.clone().into())),
            ExprAst::X => RatFunc::x(),
            ExprAst::Sqrt(n) => RatFunc::constant(ctx.sqrt(&FieldElem::from_rat(n.clone().into()))?),
            ExprAst::Neg(a) => -&a.eval(ctx)?,
            ExprAst::Add(a, b) => &a.eval(ctx)? + &b.eval(ctx)?,
            ExprAst::Sub(a, b) => &a.eval(ctx)? - &b.eval(ctx)?,
            ExprAst::Mul(a, b) => &a.eval(ctx)? * &b.eval(ctx)?,
            ExprAst::Div(a, b) => {
                let d = b.eval(ctx)?;
                if d.is_zero() {
                    return Err(AlgError::ZeroDenominator.into());
                }
                &a.eval(ctx)? / &d
            }
            ExprAst::Pow(a, k) => {
                let base = a.eval(ctx)?;
                if *k < 0 {
                    base.recip()?.pow(k.unsigned_abs() as u32)
                } else if base.is_zero() && k.is_zero() {
                    RatFunc::one()
                } else {
                    base.pow(*k as u32)
                }
            }
        })
    }
}

/// Parses and normalizes; the radicand of `ℚ(√d)` comes from the `sqrt`
/// literals.
pub fn parse_expression(text: &str) -> Result<RatFunc, ParseError> {
    parse_expression_in(text, &mut FieldCtx::new())
}

pub fn parse_expression_in(text: &str, ctx: &mut FieldCtx) -> Result<RatFunc, ParseError> {
    parse_ast(text)?.eval(ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, Poly};

    #[test]
    fn fixtures() {
        let r = parse_expression("(4 - 20*x^2 - 3*x^4)/(16*x^6)").unwrap();
        assert_eq!(r.render("x"), "(-3*x^4-20*x^2+4)/(16*x^6)");
        assert_eq!(parse_expression("x^2 + 1").unwrap(), RatFunc::from_poly(Poly::from_ints(&[1, 0, 1])));
        assert_eq!(
            parse_expression("1/(x - x)"),
            Err(ParseError::Alg(AlgError::ZeroDenominator))
        );
    }

    #[test]
    fn precedence() {
        assert_eq!(parse_expression("-x^2").unwrap(), parse_expression("-(x^2)").unwrap());
        assert_eq!(parse_expression("2^-1").unwrap(), RatFunc::from_rat(rat(1, 2)));
        assert_eq!(parse_expression("x^-2").unwrap(), RatFunc::power(FieldElem::one(), -2));
        assert_eq!(parse_expression("1 - -1").unwrap(), RatFunc::from_int(2));
        assert_eq!(parse_expression("2*3/4").unwrap(), RatFunc::from_rat(rat(3, 2)));
        assert_eq!(parse_expression(" 6 / 2 / 3 ").unwrap(), RatFunc::one());
    }

    #[test]
    fn radicals() {
        let r = parse_expression("sqrt(8)*x").unwrap();
        assert_eq!(r.render("x"), "2*sqrt(2)*x");
        assert_eq!(parse_expression("sqrt(4)").unwrap(), RatFunc::from_int(2));
        assert!(matches!(
            parse_expression("sqrt(2) + sqrt(3)"),
            Err(ParseError::Alg(AlgError::UnsupportedExtension { .. }))
        ));
    }

    #[test]
    fn syntax_errors() {
        let e = parse_expression("x + * 2").unwrap_err();
        assert!(matches!(e, ParseError::Syntax { position: 4, .. }), "{e:?}");
        assert!(matches!(parse_expression("(x"), Err(ParseError::Syntax { position: 2, .. })));
        assert!(matches!(parse_expression("x^x"), Err(ParseError::Syntax { position: 2, .. })));
        assert!(matches!(parse_expression("y"), Err(ParseError::Syntax { position: 0, .. })));
        assert!(matches!(parse_expression("x x"), Err(ParseError::Syntax { position: 2, .. })));
        assert!(matches!(parse_expression(""), Err(ParseError::Syntax { position: 0, .. })));
    }
}
