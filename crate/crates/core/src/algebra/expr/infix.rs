use num_bigint::BigInt;

use super::{is_name_char, is_name_start, perr, Expr};
use crate::algebra::field::Rational;
use crate::algebra::AlgebraError;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Op(char),
    LParen,
    RParen,
    Comma,
}

fn tokenize(s: &str) -> Result<Vec<Tok>, AlgebraError> {
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = cs[st..i].iter().collect();
            out.push(Tok::Int(digits.parse().unwrap()));
        } else if is_name_start(c) {
            let st = i;
            while i < cs.len() && is_name_char(cs[i]) {
                i += 1;
            }
            out.push(Tok::Name(cs[st..i].iter().collect()));
        } else {
            i += 1;
            out.push(match c {
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                ',' => Tok::Comma,
                '*' if cs.get(i) == Some(&'*') => {
                    i += 1;
                    Tok::Op('^')
                }
                '+' | '-' | '*' | '/' | '^' => Tok::Op(c),
                _ => return Err(perr(format!("unexpected character {c:?}"))),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

/// Parses ordinary infix notation: `+ - * / ^` (or `**`), unary minus,
/// parentheses and `norm(g0, g1, g2)`.
pub fn parse_infix(s: &str) -> Result<Expr, AlgebraError> {
    let mut p = Parser {
        toks: tokenize(s)?,
        pos: 0,
    };
    let e = p.expr(0)?;
    if p.pos != p.toks.len() {
        return Err(perr(format!("unexpected token {:?}", p.toks[p.pos])));
    }
    Ok(e)
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, t: Tok) -> Result<(), AlgebraError> {
        match self.next() {
            Some(x) if x == t => Ok(()),
            other => Err(perr(format!("expected {t:?}, found {other:?}"))),
        }
    }

    fn expr(&mut self, min_bp: u8) -> Result<Expr, AlgebraError> {
        let mut lhs = self.prefix()?;
        // Juxtaposition is not multiplication.
        while let Some(Tok::Op(c)) = self.peek() {
            let op = *c;
            let (lbp, rbp) = match op {
                '+' | '-' => (1, 2),
                '*' | '/' => (3, 4),
                '^' => (7, 6),
                _ => unreachable!(),
            };
            if lbp < min_bp {
                break;
            }
            self.pos += 1;
            if op == '^' {
                let n = self.exponent()?;
                lhs = Expr::Pow(Box::new(lhs), n);
                continue;
            }
            let rhs = self.expr(rbp)?;
            lhs = match op {
                '+' => match lhs {
                    Expr::Add(mut xs) => {
                        xs.push(rhs);
                        Expr::Add(xs)
                    }
                    l => Expr::Add(vec![l, rhs]),
                },
                '-' => Expr::Sub(vec![lhs, rhs]),
                '*' => match lhs {
                    Expr::Mul(mut xs) => {
                        xs.push(rhs);
                        Expr::Mul(xs)
                    }
                    l => Expr::Mul(vec![l, rhs]),
                },
                '/' => Expr::Div(Box::new(lhs), Box::new(rhs)),
                _ => unreachable!(),
            };
        }
        Ok(lhs)
    }

    fn exponent(&mut self) -> Result<i64, AlgebraError> {
        let neg = if self.peek() == Some(&Tok::Op('-')) {
            self.pos += 1;
            true
        } else {
            false
        };
        let paren = self.peek() == Some(&Tok::LParen);
        if paren {
            self.pos += 1;
        }
        let n = match self.next() {
            Some(Tok::Int(n)) => i64::try_from(n).map_err(|_| perr("exponent too large"))?,
            other => {
                return Err(perr(format!(
                    "exponent must be an integer, found {other:?}"
                )))
            }
        };
        if paren {
            self.expect(Tok::RParen)?;
        }
        Ok(if neg { -n } else { n })
    }

    fn prefix(&mut self) -> Result<Expr, AlgebraError> {
        match self.next() {
            Some(Tok::Int(n)) => Ok(Expr::Num(Rational::from_integer(n))),
            Some(Tok::Op('-')) => {
                // Unary minus binds tighter than * but looser than ^.
                let e = self.expr(5)?;
                Ok(Expr::Neg(Box::new(e)))
            }
            Some(Tok::Op('+')) => self.expr(5),
            Some(Tok::LParen) => {
                let e = self.expr(0)?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Some(Tok::Name(n)) => {
                if self.peek() == Some(&Tok::LParen) {
                    self.pos += 1;
                    let mut args = vec![self.expr(0)?];
                    while self.peek() == Some(&Tok::Comma) {
                        self.pos += 1;
                        args.push(self.expr(0)?);
                    }
                    self.expect(Tok::RParen)?;
                    return call(&n, args);
                }
                Ok(Expr::Var(n))
            }
            other => Err(perr(format!("unexpected token {other:?}"))),
        }
    }
}

fn call(name: &str, mut args: Vec<Expr>) -> Result<Expr, AlgebraError> {
    match (name, args.len()) {
        ("norm", 3) => {
            let c = args.pop().unwrap();
            let b = args.pop().unwrap();
            let a = args.pop().unwrap();
            Ok(Expr::Norm(Box::new([a, b, c])))
        }
        _ => Err(perr(format!("unknown function {name}/{}", args.len()))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        assert_eq!(
            parse_infix("-x^2").unwrap(),
            Expr::Neg(Box::new(Expr::Pow(Box::new(Expr::var("x")), 2)))
        );
        assert_eq!(
            parse_infix("a - b - c").unwrap(),
            Expr::Sub(vec![
                Expr::Sub(vec![Expr::var("a"), Expr::var("b")]),
                Expr::var("c")
            ])
        );
        assert_eq!(parse_infix("x**3").unwrap(), parse_infix("x^3").unwrap());
    }

    #[test]
    fn errors() {
        assert!(parse_infix("x +").is_err());
        assert!(parse_infix("x^y").is_err());
        assert!(parse_infix("(x").is_err());
        assert!(parse_infix("foo(1)").is_err());
    }
}
