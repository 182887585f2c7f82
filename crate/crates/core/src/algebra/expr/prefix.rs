use super::{is_name_char, is_name_start, parse_int_exponent, perr, Expr};
use crate::algebra::field::parse_rational;
use crate::algebra::AlgebraError;

#[derive(Debug, PartialEq)]
enum Tok {
    Open,
    Close,
    Atom(String),
}

fn tokenize(s: &str) -> Vec<Tok> {
    let mut out = Vec::new();
    let mut cur = String::new();
    for c in s.chars() {
        if c == '(' || c == ')' || c.is_whitespace() {
            if !cur.is_empty() {
                out.push(Tok::Atom(std::mem::take(&mut cur)));
            }
            match c {
                '(' => out.push(Tok::Open),
                ')' => out.push(Tok::Close),
                _ => {}
            }
        } else {
            cur.push(c);
        }
    }
    if !cur.is_empty() {
        out.push(Tok::Atom(cur));
    }
    out
}

/// Parses an s-expression such as `(+ (* 2 x) (^ y 3))`.
pub fn parse_prefix(s: &str) -> Result<Expr, AlgebraError> {
    let toks = tokenize(s);
    let mut pos = 0;
    let e = parse_node(&toks, &mut pos)?;
    if pos != toks.len() {
        return Err(perr("trailing input after expression"));
    }
    Ok(e)
}

fn atom(a: &str) -> Result<Expr, AlgebraError> {
    if let Some(q) = parse_rational(a) {
        return Ok(Expr::Num(q));
    }
    let mut chars = a.chars();
    if chars.next().is_some_and(is_name_start) && chars.all(is_name_char) {
        Ok(Expr::Var(a.to_string()))
    } else {
        Err(perr(format!("bad atom {a:?}")))
    }
}

fn parse_node(toks: &[Tok], pos: &mut usize) -> Result<Expr, AlgebraError> {
    match toks.get(*pos) {
        None => Err(perr("unexpected end of input")),
        Some(Tok::Close) => Err(perr("unexpected ')'")),
        Some(Tok::Atom(a)) => {
            *pos += 1;
            atom(a)
        }
        Some(Tok::Open) => {
            *pos += 1;
            let Some(Tok::Atom(op)) = toks.get(*pos) else {
                return Err(perr("expected operator after '('"));
            };
            let op = op.clone();
            *pos += 1;
            let mut args = Vec::new();
            loop {
                match toks.get(*pos) {
                    None => return Err(perr("unclosed '('")),
                    Some(Tok::Close) => {
                        *pos += 1;
                        break;
                    }
                    Some(_) => args.push(parse_node(toks, pos)?),
                }
            }
            build(&op, args)
        }
    }
}

fn build(op: &str, mut args: Vec<Expr>) -> Result<Expr, AlgebraError> {
    let arity = |n: usize, args: &[Expr]| {
        if args.len() == n {
            Ok(())
        } else {
            Err(perr(format!(
                "{op} expects {n} arguments, got {}",
                args.len()
            )))
        }
    };
    match op {
        "+" => Ok(Expr::Add(args)),
        "*" => Ok(Expr::Mul(args)),
        "-" => match args.len() {
            0 => Err(perr("(-) needs an argument")),
            1 => Ok(Expr::Neg(Box::new(args.pop().unwrap()))),
            _ => Ok(Expr::Sub(args)),
        },
        "/" => {
            arity(2, &args)?;
            let b = args.pop().unwrap();
            let a = args.pop().unwrap();
            Ok(Expr::Div(Box::new(a), Box::new(b)))
        }
        "^" => {
            arity(2, &args)?;
            let n = match args.pop().unwrap() {
                Expr::Num(q) => parse_int_exponent(&q.to_string())?,
                Expr::Neg(x) => match *x {
                    Expr::Num(q) => -parse_int_exponent(&q.to_string())?,
                    _ => return Err(perr("exponent must be an integer literal")),
                },
                _ => return Err(perr("exponent must be an integer literal")),
            };
            Ok(Expr::Pow(Box::new(args.pop().unwrap()), n))
        }
        "norm" => {
            arity(3, &args)?;
            let c = args.pop().unwrap();
            let b = args.pop().unwrap();
            let a = args.pop().unwrap();
            Ok(Expr::Norm(Box::new([a, b, c])))
        }
        _ => Err(perr(format!("unknown operator {op:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_display() {
        let s = "(+ (* 2 x) (^ y 3) (- z) (- a b c) (/ 1 3))";
        let e = parse_prefix(s).unwrap();
        assert_eq!(parse_prefix(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn malformed_inputs() {
        assert!(parse_prefix("(+ 1 2").is_err());
        assert!(parse_prefix("(^ x y)").is_err());
        assert!(parse_prefix("(% 1 2)").is_err());
        assert!(parse_prefix("1 2").is_err());
    }
}
